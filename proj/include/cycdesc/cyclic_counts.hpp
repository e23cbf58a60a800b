#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cycdesc/count.hpp"
#include "cycdesc/descent_set.hpp"
#include "cycdesc/linear_counts.hpp"

namespace cycdesc {

/// alpha^cyc_n(I): n-cycles with descent set contained in I,
///   (1/n) sum_{d | (I,n)} mu(d) alpha_{n/d}(I/d).
Count alpha_cyc(const DescentSet& set, const BetaEngine& engine = default_engine());

/// beta^cyc_n(I): n-cycles with descent set exactly I,
///   (1/n) sum_{d | n} mu(d) (-1)^{|I|-|I/d|} beta_{n/d}(I/d).
/// beta^cyc_1(empty) = 1 and beta^cyc_n(empty) = 0 for n >= 2 fall out of it.
Count beta_cyc(const DescentSet& set, const BetaEngine& engine = default_engine());

struct InversionReport {
  int n = 0;
  bool passed = true;
  long long checks = 0;
  std::string first_failure;  // empty when passed
};

/// Checks, for every I in [n-1], the two "forward" identities
///   alpha_n(I) = sum_{d | (I,n)} (n/d) alpha^cyc_{n/d}(I/d),
///   beta_n(I)  = sum_{d | n} (-1)^{|I|-|I/d|} (n/d) beta^cyc_{n/d}(I/d),
/// with alpha^cyc / beta^cyc evaluated by their inverted formulas, plus the
/// subset-sum link alpha^cyc_n(I) = sum_{J in I} beta^cyc_n(J) joining them.
InversionReport verify_main_inversions(int n);

/// C(n, k): n-cycles with exactly k-1 descents. Requires 1 <= k <= n.
Count cyclic_eulerian(int n, int k);

struct IdentityCheck {
  Count lhs;
  Count rhs;
  bool holds = false;
};

/// beta^cyc_n(I) + beta^cyc_n(I u {n-1}) versus beta_{n-1}(I), where `prefix`
/// is a subset of [n-2] (ambient n-1) and n = prefix.n() + 1.
IdentityCheck fixed_prefix_identity(const DescentSet& prefix);

struct GcdShortcuts {
  /// (alpha_n(I), n alpha^cyc_n(I)) when (I, n) = 1.
  std::optional<std::pair<Count, Count>> by_gcd;
  /// (beta_n(I), n beta^cyc_n(I) + (-1)^{|I|}) when every i in I is coprime
  /// to n. Only for n >= 2: at n = 1 the two sides are 1 and 2.
  std::optional<std::pair<Count, Count>> by_coprime_elements;
};

/// Evaluates whichever shortcut hypotheses hold; callers compare the pairs.
GcdShortcuts gcd_one_shortcuts(const DescentSet& set);

/// beta^cyc_n(2Z n [n-1]) by the odd / even-not-power-of-2 / power-of-2 split
/// over Euler numbers.
Count alternating_cycles(int n);

/// beta^cyc_n(kZ n [n-1]) by the general divisor sum over E^{(k/gcd(k,d))}_{n/d}.
/// With verify = true, re-derives the value through the coprime and odd-prime
/// specializations when their hypotheses hold and throws InvariantError on
/// disagreement.
Count kz_cycles(int n, int k, bool verify = false);

/// Specialization valid when gcd(k, n) = 1. Throws std::domain_error otherwise.
Count kz_cycles_coprime(int n, int k);

/// Four-branch specialization for an odd prime p. Throws std::domain_error if
/// p is not an odd prime.
Count kz_cycles_odd_prime(int n, int p);

/// For n = 2 mod 4 and I with an odd number of odd elements, returns
/// beta^cyc_{n/2}(I/2) after checking it equals beta^cyc_n(I) - beta^cyc_n(~I).
/// Throws std::domain_error when the hypotheses fail.
Count complement_delta(const DescentSet& set);

/// For n = 2 mod 4: whether "beta^cyc_n(I) == beta^cyc_n(~I)" agrees with
/// "I or ~I has no even elements". Throws std::domain_error unless n = 2 mod 4.
/// The equivalence needs n >= 6; at n = 2 the sets {} and {1} differ by one.
bool complement_equality_criterion_holds(const DescentSet& set);

/// Which closed formula a cyclic query is routed through.
enum class CyclicFormulaKind { MainB, MainC, EulerianCycle, AlternatingCycle, KZCycle, OddPrimeKZ };

std::string_view formula_name(CyclicFormulaKind kind);

/// Arguments for evaluate(); `set` is used by MainB/MainC, `k` by the rest
/// (as the Eulerian index, the period k, or the odd prime p).
struct CyclicQuery {
  CyclicFormulaKind kind = CyclicFormulaKind::MainC;
  int n = 1;
  DescentSet set;
  int k = 0;
};

Count evaluate(const CyclicQuery& query);

}  // namespace cycdesc
