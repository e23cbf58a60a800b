#include "cycdesc/cyclic_counts.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "cycdesc/errors.hpp"
#include "cycdesc/number_theory.hpp"

namespace cycdesc {

Count alpha_cyc(const DescentSet& set, const BetaEngine& engine) {
  const int n = set.n();
  Count total = 0;
  for (auto d : divisors(descent_gcd(set))) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    total += mu * engine.alpha(subset_quotient(set, static_cast<int>(d)));
  }
  Count value = exact_div(total, n, "alpha_cyc");
  if (value < 0) throw InvariantError("alpha_cyc: negative count");
  return value;
}

Count beta_cyc(const DescentSet& set, const BetaEngine& engine) {
  const int n = set.n();
  const int size = set.size();
  Count total = 0;
  for (auto d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    const DescentSet q = subset_quotient(set, static_cast<int>(d));
    total += mu * sign_pow(size - q.size()) * engine.beta(q);
  }
  Count value = exact_div(total, n, "beta_cyc");
  if (value < 0) throw InvariantError("beta_cyc: negative count for I={" + set.to_string() + "}");
  return value;
}

InversionReport verify_main_inversions(int n) {
  if (n < 1) throw std::domain_error("verify_main_inversions: n must be positive");
  if (n > 24) throw CapacityError("verify_main_inversions: n above cap 24");
  InversionReport report;
  report.n = n;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  auto fail = [&](const std::string& what, const DescentSet& set) {
    if (report.passed) {
      report.passed = false;
      report.first_failure = what + " fails at n=" + std::to_string(n) + " I={" + set.to_string() + "}";
    }
  };

  std::vector<Count> bcyc(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const DescentSet set(n, mask);
    bcyc[mask] = beta_cyc(set);

    Count a_rhs = 0;
    for (auto d : divisors(descent_gcd(set))) {
      a_rhs += (n / d) * alpha_cyc(subset_quotient(set, static_cast<int>(d)));
    }
    ++report.checks;
    if (a_rhs != alpha(set)) fail("alpha forward identity", set);

    Count b_rhs = 0;
    for (auto d : divisors(n)) {
      const DescentSet q = subset_quotient(set, static_cast<int>(d));
      const Count term = (n / d) * beta_cyc(q);
      if ((set.size() - q.size()) % 2 == 0) {
        b_rhs += term;
      } else {
        b_rhs -= term;
      }
    }
    ++report.checks;
    if (b_rhs != beta(set)) fail("beta forward identity", set);
  }

  // Zeta transform over subsets: zeta[I] = sum_{J in I} beta^cyc(J).
  std::vector<Count> zeta = bcyc;
  for (int bit = 0; bit < n - 1; ++bit) {
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      if (mask & (std::uint64_t{1} << bit)) zeta[mask] += zeta[mask ^ (std::uint64_t{1} << bit)];
    }
  }
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const DescentSet set(n, mask);
    ++report.checks;
    if (zeta[mask] != alpha_cyc(set)) fail("alpha_cyc / beta_cyc subset-sum link", set);
  }
  return report;
}

Count cyclic_eulerian(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("cyclic_eulerian: need 1 <= k <= n");
  Count total = 0;
  for (auto d64 : divisors(n)) {
    const int d = static_cast<int>(d64);
    const int mu = mobius(d);
    if (mu == 0) continue;
    const int m = n / d;
    for (int j = 1; j <= std::min(k, m); ++j) {
      const Count b = binomial(n - m, k - j);
      if (b == 0) continue;
      total += mu * sign_pow(k - j) * b * eulerian(m, j);
    }
  }
  return exact_div(total, n, "cyclic_eulerian");
}

IdentityCheck fixed_prefix_identity(const DescentSet& prefix) {
  const int n = prefix.n() + 1;
  const DescentSet lifted = prefix.lifted(n);
  IdentityCheck check;
  check.lhs = beta_cyc(lifted) + beta_cyc(lifted.with(n - 1));
  check.rhs = beta(prefix);
  check.holds = check.lhs == check.rhs;
  return check;
}

GcdShortcuts gcd_one_shortcuts(const DescentSet& set) {
  const int n = set.n();
  GcdShortcuts out;
  if (descent_gcd(set) == 1) {
    out.by_gcd.emplace(alpha(set), n * alpha_cyc(set));
  }
  bool coprime = n >= 2;
  for (int i : set.elements()) coprime = coprime && std::gcd(i, n) == 1;
  if (coprime) {
    out.by_coprime_elements.emplace(beta(set), n * beta_cyc(set) + sign_pow(set.size()));
  }
  return out;
}

Count alternating_cycles(int n) {
  if (n < 1) throw std::domain_error("alternating_cycles: n must be positive");
  Count total = 0;
  if (n % 2 == 1) {
    for (auto d : divisors(n)) {
      const int mu = mobius(d);
      if (mu != 0) total += mu * sign_pow((d - 1) / 2) * euler_zigzag(static_cast<int>(n / d));
    }
  } else if (is_prime_power_of(n, 2)) {
    total = euler_zigzag(n) - 1;
  } else {
    for (auto d : divisors(n)) {
      if (d % 2 == 0) continue;
      const int mu = mobius(d);
      if (mu != 0) total += mu * euler_zigzag(static_cast<int>(n / d));
    }
  }
  return exact_div(total, n, "alternating_cycles");
}

Count kz_cycles_coprime(int n, int k) {
  if (n < 1 || k < 1 || std::gcd(n, k) != 1) {
    throw std::domain_error("kz_cycles_coprime: need gcd(k, n) = 1");
  }
  Count total = 0;
  for (auto d64 : divisors(n)) {
    const int d = static_cast<int>(d64);
    const int mu = mobius(d);
    if (mu == 0) continue;
    const int e = (n - 1) / k - (n - d) / (k * d);
    total += mu * sign_pow(e) * generalized_euler(n / d, k);
  }
  return exact_div(total, n, "kz_cycles_coprime");
}

Count kz_cycles_odd_prime(int n, int p) {
  if (n < 1) throw std::domain_error("kz_cycles_odd_prime: n must be positive");
  if (p < 3 || !is_prime(p)) throw std::domain_error("kz_cycles_odd_prime: p must be an odd prime");
  if (n % p != 0) return kz_cycles_coprime(n, p);
  int m = n;
  while (m % p == 0) m /= p;
  Count total = 0;
  if (m == 1) {
    total = generalized_euler(n, p) - 1;
  } else if (m == 2) {
    total = generalized_euler(n, p) + generalized_euler(n / 2, p) - 2;
  } else {
    for (auto d64 : divisors(m)) {
      const int d = static_cast<int>(d64);
      const int mu = mobius(d);
      if (mu == 0) continue;
      // n(d-1)/d = n - n/d.
      total += mu * sign_pow(n - n / d) * generalized_euler(n / d, p);
    }
  }
  return exact_div(total, n, "kz_cycles_odd_prime");
}

Count kz_cycles(int n, int k, bool verify) {
  if (n < 1 || k < 1) throw std::domain_error("kz_cycles: need n, k >= 1");
  Count total = 0;
  for (auto d64 : divisors(n)) {
    const int d = static_cast<int>(d64);
    const int mu = mobius(d);
    if (mu == 0) continue;
    const int g = std::gcd(k, d);
    const long long l = static_cast<long long>(k) / g * d;
    const long long e = (n - 1) / k - (n - d) / l;
    total += mu * sign_pow(e) * generalized_euler(n / d, k / g);
  }
  Count value = exact_div(total, n, "kz_cycles");
  if (verify) {
    if (std::gcd(n, k) == 1 && kz_cycles_coprime(n, k) != value) {
      throw InvariantError("kz_cycles: coprime specialization disagrees");
    }
    if (k >= 3 && is_prime(k) && kz_cycles_odd_prime(n, k) != value) {
      throw InvariantError("kz_cycles: odd-prime specialization disagrees");
    }
  }
  return value;
}

namespace {

int odd_element_count(const DescentSet& set) {
  int c = 0;
  for (int i : set.elements()) c += i % 2;
  return c;
}

bool has_even_element(const DescentSet& set) {
  for (int i : set.elements())
    if (i % 2 == 0) return true;
  return false;
}

}  // namespace

Count complement_delta(const DescentSet& set) {
  const int n = set.n();
  if (n % 4 != 2) throw std::domain_error("complement_delta: need n = 2 mod 4");
  if (odd_element_count(set) % 2 != 1) {
    throw std::domain_error("complement_delta: I must have an odd number of odd elements");
  }
  const Count delta = beta_cyc(subset_quotient(set, 2));
  if (beta_cyc(set) - beta_cyc(set.complement()) != delta) {
    throw InvariantError("complement_delta: difference mismatch at I={" + set.to_string() + "}");
  }
  return delta;
}

bool complement_equality_criterion_holds(const DescentSet& set) {
  if (set.n() % 4 != 2) throw std::domain_error("complement criterion: need n = 2 mod 4");
  const bool equal = beta_cyc(set) == beta_cyc(set.complement());
  const bool no_even = !has_even_element(set) || !has_even_element(set.complement());
  return equal == no_even;
}

std::string_view formula_name(CyclicFormulaKind kind) {
  switch (kind) {
    case CyclicFormulaKind::MainB: return "alpha-cyc";
    case CyclicFormulaKind::MainC: return "beta-cyc";
    case CyclicFormulaKind::EulerianCycle: return "eulerian-cyc";
    case CyclicFormulaKind::AlternatingCycle: return "alt-cycles";
    case CyclicFormulaKind::KZCycle: return "kz-cycles";
    case CyclicFormulaKind::OddPrimeKZ: return "kz-cycles-odd-prime";
  }
  return "unknown";
}

Count evaluate(const CyclicQuery& q) {
  switch (q.kind) {
    case CyclicFormulaKind::MainB: return alpha_cyc(q.set);
    case CyclicFormulaKind::MainC: return beta_cyc(q.set);
    case CyclicFormulaKind::EulerianCycle: return cyclic_eulerian(q.n, q.k);
    case CyclicFormulaKind::AlternatingCycle: return alternating_cycles(q.n);
    case CyclicFormulaKind::KZCycle: return kz_cycles(q.n, q.k);
    case CyclicFormulaKind::OddPrimeKZ: return kz_cycles_odd_prime(q.n, q.k);
  }
  throw std::domain_error("evaluate: unknown formula kind");
}

}  // namespace cycdesc
