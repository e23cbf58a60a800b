#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycdesc {

/// Exact signed integer used for every count.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, used for deviations and fractions.
using Rational = boost::multiprecision::cpp_rational;

Count factorial(int n);

/// Zero when k < 0 or k > n.
Count binomial(int n, int k);

/// n! / prod(parts_i!) where n = sum(parts). Zero parts are allowed.
Count multinomial(std::span<const int> parts);

/// value / divisor, throwing InvariantError when the remainder is nonzero.
/// `what` names the formula for the error message.
Count exact_div(const Count& value, std::int64_t divisor, std::string_view what);

/// (-1)^e for any integer e.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace cycdesc
