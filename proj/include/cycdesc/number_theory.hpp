#pragma once

#include <cstdint>
#include <vector>

namespace cycdesc {

/// Number-theoretic Moebius function by trial factorization. Throws
/// std::domain_error for d < 1.
int mobius(std::int64_t d);

/// Divisors of n in ascending order. Throws std::domain_error for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// d(n), the number of divisors.
int divisor_count(std::int64_t n);

/// True when n = p^a for some a >= 1.
bool is_prime_power_of(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace cycdesc
