#include "cycdesc/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cycdesc/asymptotics.hpp"
#include "cycdesc/consec_patterns.hpp"
#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/lyndon.hpp"
#include "cycdesc/number_theory.hpp"
#include "cycdesc/oracle.hpp"

namespace cycdesc {
namespace {

// Collects outcomes; only the first failure is kept as the witness.
class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.first_failure = what;
    }
  }
  void equal(const Count& got, const Count& want, const std::string& what) {
    expect(got == want, what + ": got " + got.str() + ", expected " + want.str());
  }

 private:
  VerifyReport& report_;
};

std::string at(int n, const DescentSet& set) { return "n=" + std::to_string(n) + " I={" + set.to_string() + "}"; }

std::uint64_t subsets_of(int n) { return std::uint64_t{1} << (n - 1); }

// sum over J in I of table[J], for every I (zeta transform over subsets).
std::vector<Count> subset_sums(const oracle::CountTable& table, int n) {
  std::vector<Count> out(subsets_of(n));
  for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = table.at(m);
  for (int bit = 0; bit + 1 < n; ++bit) {
    for (std::uint64_t m = 0; m < out.size(); ++m) {
      if (m >> bit & 1) out[m] += out[m ^ (std::uint64_t{1} << bit)];
    }
  }
  return out;
}

void oracle_suite(int max_n, Checker& check) {
  for (int n = 1; n <= max_n; ++n) {
    const auto tables = oracle::brute_tables(n);
    const auto alpha_sums = subset_sums(tables.beta, n);
    const auto alpha_cyc_sums = subset_sums(tables.beta_cyc, n);
    for (std::uint64_t m = 0; m < subsets_of(n); ++m) {
      const DescentSet set(n, m);
      check.equal(beta(set), tables.beta.at(m), "beta " + at(n, set));
      check.equal(beta_cyc(set), tables.beta_cyc.at(m), "beta_cyc " + at(n, set));
      check.equal(alpha(set), alpha_sums[m], "alpha " + at(n, set));
      check.equal(alpha_cyc(set), alpha_cyc_sums[m], "alpha_cyc " + at(n, set));
    }
  }
}

void inversions_suite(int max_n, Checker& check) {
  for (int n = 1; n <= max_n; ++n) {
    const auto report = verify_main_inversions(n);
    check.expect(report.passed, "inversions n=" + std::to_string(n) + ": " + report.first_failure);
    const std::uint64_t full = subsets_of(n);
    // Inclusion-exclusion against the DP.
    for (std::uint64_t m = 0; m < full; ++m) {
      const DescentSet set(n, m);
      if (n <= 12) check.equal(beta(set), beta_inclusion_exclusion(set), "beta DP vs IE " + at(n, set));
    }
  }
}

void corollaries_suite(int max_n, Checker& check) {
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t full = subsets_of(n);
    Count sum_cyc = 0, sum_beta = 0;
    std::vector<Count> by_size(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t m = 0; m < full; ++m) {
      const DescentSet set(n, m);
      const Count bc = beta_cyc(set);
      sum_cyc += bc;
      sum_beta += beta(set);
      by_size[static_cast<std::size_t>(set.size())] += bc;

      const auto shortcuts = gcd_one_shortcuts(set);
      if (shortcuts.by_gcd) {
        check.equal(shortcuts.by_gcd->second, shortcuts.by_gcd->first, "gcd shortcut (a) " + at(n, set));
      }
      if (shortcuts.by_coprime_elements) {
        check.equal(shortcuts.by_coprime_elements->second, shortcuts.by_coprime_elements->first,
                    "gcd shortcut (b) " + at(n, set));
      }

      if (n % 4 == 2) {
        int odd = 0;
        for (int i : set.elements()) odd += i % 2;
        if (odd % 2 == 1) {
          const Count delta = beta_cyc(set) - beta_cyc(set.complement());
          check.equal(delta, complement_delta(set), "complement difference " + at(n, set));
        }
        // At n = 2 the half-size count is beta^cyc_1(empty) = 1, so the criterion starts at n = 6.
        if (n >= 6) check.expect(complement_equality_criterion_holds(set), "complement criterion " + at(n, set));
      } else {
        check.equal(beta_cyc(set.complement()), bc, "complement equality " + at(n, set));
      }
    }
    check.equal(sum_cyc, factorial(n - 1), "sum of beta_cyc n=" + std::to_string(n));
    check.equal(sum_beta, factorial(n), "sum of beta n=" + std::to_string(n));

    Count sum_eulerian = 0;
    for (int k = 1; k <= n; ++k) {
      const Count c = cyclic_eulerian(n, k);
      sum_eulerian += c;
      check.equal(c, by_size[static_cast<std::size_t>(k - 1)],
                  "cyclic Eulerian n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    check.equal(sum_eulerian, factorial(n - 1), "sum of cyclic Eulerian n=" + std::to_string(n));

    if (n >= 2) {
      for (std::uint64_t m = 0; m < subsets_of(n - 1); ++m) {
        const DescentSet prefix(n - 1, m);
        const auto id = fixed_prefix_identity(prefix);
        check.expect(id.holds, "prefix identity n=" + std::to_string(n) + " I={" + prefix.to_string() + "}");
      }
    }

    check.equal(alternating_cycles(n), beta_cyc(DescentSet::multiples(n, 2)),
                "alternating cycles n=" + std::to_string(n));
    for (int k = 1; k <= 5; ++k) {
      Count value;
      try {
        value = kz_cycles(n, k, true);
      } catch (const InvariantError& e) {
        check.expect(false, std::string("kZ specializations: ") + e.what());
        continue;
      }
      check.equal(value, beta_cyc(DescentSet::multiples(n, k)),
                  "kZ cycles n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

void lyndon_suite(int max_n, Checker& check) {
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    // Word counts against enumeration over three letters; absent keys are 0.
    const auto words = oracle::brute_words(n, 3);
    for (const auto& lambda : partitions(n)) {
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
          const Evaluation mu = normalize({a, b, n - a - b});
          const auto it = words.find({lambda, mu});
          const Count want = it == words.end() ? Count(0) : it->second;
          check.equal(count_words_by_type(lambda, mu), want,
                      "a_{lambda,mu} " + tag + " lambda=" + lambda.to_string());
        }
      }
    }

    for (int q = 1; q <= 3; ++q) {
      Count lyndon = 0;
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
          if (q < 3 && a + b != n) continue;
          if (q < 2 && a != n) continue;
          lyndon += count_lyndon(n, normalize({a, b, n - a - b}));
        }
      }
      check.equal(oracle::brute_primitive_words(n, q), n * lyndon,
                  "primitive words " + tag + " q=" + std::to_string(q));
    }

    // Per-type exact descent counts against the oracle, and their sum over types.
    if (n <= oracle::kMaxPermutationN) {
      const auto tables = oracle::brute_tables(n);
      for (std::uint64_t m = 0; m < subsets_of(n); ++m) {
        const DescentSet set(n, m);
        Count total = 0;
        for (const auto& lambda : partitions(n)) {
          const Count c = count_by_type_and_descents(lambda, set, true);
          total += c;
          const auto it = tables.by_type.find(lambda);
          const Count want = it == tables.by_type.end() ? Count(0) : it->second.at(m);
          check.equal(c, want, "type/descent count " + at(n, set) + " lambda=" + lambda.to_string());
        }
        check.equal(total, beta(set), "type sum " + at(n, set));
      }
    }
  }
}

void patterns_suite(int max_n, Checker& check) {
  constexpr int kOracleN = 9;
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    check.equal(avoiders_by_beta_sum(n, 3), gamma(n), "gamma beta-sum " + tag);
    check.equal(gamma_star_by_beta_sum(n), gamma_star(n), "gamma* beta-sum " + tag);
    check.equal(monotone_avoiders(n, 3, Direction::Increasing), gamma(n), "gamma DP " + tag);
    check.equal(cycles_avoiding_monotone(n, 3, Direction::Increasing), cycles_avoiding_incr3(n),
                "123-avoiding cycles " + tag);
    check.equal(cycles_avoiding_monotone(n, 3, Direction::Decreasing), cycles_avoiding_decr3(n),
                "321-avoiding cycles " + tag);
    if (n % 4 != 2) {
      check.equal(cycles_avoiding_incr3(n), cycles_avoiding_decr3(n), "123 vs 321 cycles " + tag);
    }
    for (int k = 2; k <= 5; ++k) {
      check.equal(monotone_avoiders(n, k, Direction::Decreasing), monotone_avoiders_by_recurrence(n, k),
                  "avoider recurrence " + tag + " k=" + std::to_string(k));
    }

    if (n <= kOracleN) {
      using oracle::brute_avoiders;
      check.equal(brute_avoiders(n, 3, Direction::Increasing, false, false), gamma(n), "gamma oracle " + tag);
      check.equal(brute_avoiders(n, 3, Direction::Decreasing, false, true), gamma_star(n), "gamma* oracle " + tag);
      check.equal(brute_avoiders(n, 3, Direction::Increasing, true, false), cycles_avoiding_incr3(n),
                  "123 cycles oracle " + tag);
      check.equal(brute_avoiders(n, 3, Direction::Decreasing, true, false), cycles_avoiding_decr3(n),
                  "321 cycles oracle " + tag);
      check.equal(brute_avoiders(n, 4, Direction::Increasing, true, false),
                  cycles_avoiding_monotone(n, 4, Direction::Increasing), "1234 cycles oracle " + tag);
    }
  }
  // Closed forms of the correction terms as divisor sums over multiples of 3.
  for (int n = 1; n <= 200; ++n) {
    long long signed_sum = 0, plain_sum = 0;
    for (auto d : divisors(n)) {
      if (d % 3 != 0) continue;
      signed_sum += mobius(d) * ((n / d) % 2 == 0 ? 1 : -1);
      plain_sum += mobius(d);
    }
    if (n % 2 == 1) plain_sum = -plain_sum;
    check.expect(signed_sum == theta(n), "theta divisor sum n=" + std::to_string(n));
    check.expect(plain_sum == theta_tilde(n), "theta~ divisor sum n=" + std::to_string(n));
  }
}

void bounds_suite(int max_n, Checker& check) {
  for (int n = 2; n <= max_n; ++n) {
    const auto report = bound_checks(n);
    check.expect(report.passed,
                 "bounds n=" + std::to_string(n) + ": " + (report.failures.empty() ? "" : report.failures.front()));
    const auto alpha_scan = alpha_deviation_scan(n);
    check.expect(alpha_scan.within_bound, "alpha deviation bound n=" + std::to_string(n));
    if (is_prime(n)) {
      for (std::uint64_t m = 0; m < subsets_of(n); ++m) {
        const DescentSet set(n, m);
        check.equal(n * beta_cyc(set) + sign_pow(set.size()), beta(set), "prime coprime identity " + at(n, set));
      }
    }
  }
}

struct SuiteEntry {
  std::string_view name;
  int cap;
  void (*run)(int, Checker&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"oracle", oracle::kMaxPermutationN, oracle_suite},
      {"inversions", 16, inversions_suite},
      {"corollaries", 16, corollaries_suite},
      {"lyndon", 8, lyndon_suite},
      {"patterns", 14, patterns_suite},
      {"bounds", 14, bounds_suite},
  };
  return entries;
}

const SuiteEntry& lookup(std::string_view suite) {
  for (const auto& e : registry()) {
    if (e.name == suite) return e;
  }
  throw std::domain_error("unknown suite '" + std::string(suite) + "'");
}

}  // namespace

const std::vector<std::string_view>& verify_suites() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

int verify_cap(std::string_view suite) { return lookup(suite).cap; }

VerifyReport run_suite(std::string_view suite, int max_n) {
  const auto& entry = lookup(suite);
  if (max_n < 1) throw std::domain_error("max_n must be positive");
  if (max_n > entry.cap) {
    throw CapacityError("suite " + std::string(suite) + " caps max_n at " + std::to_string(entry.cap));
  }
  VerifyReport report;
  report.suite = std::string(suite);
  report.max_n = max_n;
  Checker check(report);
  entry.run(max_n, check);
  return report;
}

std::vector<VerifyReport> run_all(int max_n) {
  std::vector<VerifyReport> out;
  for (const auto& e : registry()) out.push_back(run_suite(e.name, std::min(max_n, e.cap)));
  return out;
}

}  // namespace cycdesc
