#include "cycdesc/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycdesc {

int mobius(std::int64_t d) {
  if (d < 1) throw std::domain_error("mobius: argument must be positive");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors: argument must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int divisor_count(std::int64_t n) { return static_cast<int>(divisors(n).size()); }

bool is_prime_power_of(std::int64_t n, std::int64_t p) {
  if (n < p || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace cycdesc
