#include "cycdesc/count.hpp"

#include <array>
#include <stdexcept>

#include "cycdesc/errors.hpp"

namespace cycdesc {
namespace {

constexpr int kTableSize = 130;

const std::array<Count, kTableSize>& factorial_table() {
  static const std::array<Count, kTableSize> table = [] {
    std::array<Count, kTableSize> t;
    t[0] = 1;
    for (int i = 1; i < kTableSize; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

}  // namespace

Count factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  if (n < kTableSize) return factorial_table()[n];
  Count r = factorial_table()[kTableSize - 1];
  for (int i = kTableSize; i <= n; ++i) r *= i;
  return r;
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n < kTableSize) {
    const auto& f = factorial_table();
    return f[n] / (f[k] * f[n - k]);
  }
  if (k > n - k) k = n - k;
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Count multinomial(std::span<const int> parts) {
  // Product of binomials keeps intermediates small.
  Count r = 1;
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw std::domain_error("multinomial with a negative part");
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

Count exact_div(const Count& value, std::int64_t divisor, std::string_view what) {
  if (divisor == 0) throw InvariantError(std::string(what) + ": division by zero");
  Count q, r;
  boost::multiprecision::divide_qr(value, Count(divisor), q, r);
  if (r != 0) {
    throw InvariantError(std::string(what) + ": " + value.str() + " is not divisible by " +
                         std::to_string(divisor));
  }
  return q;
}

}  // namespace cycdesc
