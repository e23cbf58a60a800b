#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "cycdesc/count.hpp"
#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/number_theory.hpp"
#include "cycdesc/oracle.hpp"

using namespace cycdesc;

namespace {
DescentSet set(int n, std::initializer_list<int> xs) { return DescentSet::from_elements(n, xs); }
std::uint64_t subsets(int n) { return std::uint64_t{1} << (n - 1); }
}  // namespace

TEST_CASE("alpha_cyc examples") {
  CHECK(alpha_cyc(set(3, {1})) == 1);
  CHECK(alpha_cyc(DescentSet(1, 0)) == 1);
  CHECK(alpha_cyc(set(2, {1})) == 1);
}

TEST_CASE("beta_cyc examples") {
  CHECK(beta_cyc(set(3, {1})) == 1);
  CHECK(beta_cyc(set(3, {1, 2})) == 0);
  CHECK(beta_cyc(set(6, {3})) == 3);
  CHECK(beta_cyc(DescentSet(1, 0)) == 1);
  CHECK(beta_cyc(DescentSet::full(2)) == 1);  // 21 is the transposition
  for (int n = 2; n <= 20; ++n) CHECK(beta_cyc(DescentSet(n, 0)) == 0);
  for (int n = 3; n <= 20; ++n) CHECK(beta_cyc(DescentSet::full(n)) == 0);
}

TEST_CASE("cyclic counts match the oracle") {
  for (int n = 1; n <= 8; ++n) {
    const auto tables = oracle::brute_tables(n);
    for (std::uint64_t m = 0; m < subsets(n); ++m) {
      const DescentSet s(n, m);
      REQUIRE(beta_cyc(s) == tables.beta_cyc.at(m));
      Count contained = 0;
      for (std::uint64_t j = m;; j = (j - 1) & m) {
        contained += tables.beta_cyc.at(j);
        if (j == 0) break;
      }
      REQUIRE(alpha_cyc(s) == contained);
    }
  }
}

TEST_CASE("main inversions") {
  CHECK(verify_main_inversions(1).passed);
  CHECK(verify_main_inversions(6).passed);
  const auto r = verify_main_inversions(12);
  CHECK(r.passed);
  CHECK(r.first_failure.empty());
  CHECK(r.checks > 0);
  CHECK_THROWS_AS(verify_main_inversions(0), std::domain_error);
}

TEST_CASE("cached engine gives the same cyclic counts") {
  const BetaEngine engine(BetaStrategy::DP, 1024);
  for (std::uint64_t m = 0; m < subsets(12); ++m) {
    const DescentSet s(12, m);
    REQUIRE(beta_cyc(s, engine) == beta_cyc(s));
  }
  const BetaEngine ie(BetaStrategy::InclusionExclusion);
  CHECK(beta_cyc(set(6, {3}), ie) == 3);
}

TEST_CASE("cyclic eulerian") {
  CHECK(cyclic_eulerian(4, 2) == 3);
  for (int n = 2; n <= 14; ++n) CHECK(cyclic_eulerian(n, 1) == 0);
  for (int n = 1; n <= 14; ++n) {
    Count total = 0;
    for (int k = 1; k <= n; ++k) total += cyclic_eulerian(n, k);
    CHECK(total == factorial(n - 1));
  }
  CHECK_THROWS_AS(cyclic_eulerian(4, 0), std::domain_error);
}

TEST_CASE("sum of beta_cyc is (n-1)!") {
  for (int n = 1; n <= 14; ++n) {
    Count total = 0;
    for (std::uint64_t m = 0; m < subsets(n); ++m) total += beta_cyc(DescentSet(n, m));
    CHECK(total == factorial(n - 1));
  }
}

TEST_CASE("fixed prefix identity") {
  const auto id = fixed_prefix_identity(set(3, {2}));
  CHECK(id.holds);
  CHECK(id.lhs == 2);
  CHECK(id.rhs == 2);
  const auto tiny = fixed_prefix_identity(DescentSet(1, 0));
  CHECK(tiny.lhs == 1);
  CHECK(tiny.rhs == 1);
  CHECK(tiny.holds);
  CHECK(fixed_prefix_identity(set(8, {3, 6})).holds);
  for (int n = 2; n <= 14; ++n) {
    for (std::uint64_t m = 0; m < subsets(n - 1); ++m) REQUIRE(fixed_prefix_identity(DescentSet(n - 1, m)).holds);
  }
}

TEST_CASE("gcd shortcuts") {
  const auto five = gcd_one_shortcuts(set(5, {2}));
  REQUIRE(five.by_gcd);
  REQUIRE(five.by_coprime_elements);
  CHECK(five.by_gcd->first == five.by_gcd->second);
  CHECK(five.by_coprime_elements->first == five.by_coprime_elements->second);

  const auto four = gcd_one_shortcuts(set(4, {2}));
  CHECK_FALSE(four.by_gcd);
  CHECK_FALSE(four.by_coprime_elements);

  const auto six = gcd_one_shortcuts(set(6, {5}));
  REQUIRE(six.by_coprime_elements);
  CHECK(beta(set(6, {5})) == 6 * beta_cyc(set(6, {5})) - 1);
  CHECK(six.by_coprime_elements->first == six.by_coprime_elements->second);

  CHECK_FALSE(gcd_one_shortcuts(DescentSet(1, 0)).by_coprime_elements);

  for (int n = 2; n <= 14; ++n) {
    for (std::uint64_t m = 0; m < subsets(n); ++m) {
      const auto sc = gcd_one_shortcuts(DescentSet(n, m));
      if (sc.by_gcd) REQUIRE(sc.by_gcd->first == sc.by_gcd->second);
      if (sc.by_coprime_elements) REQUIRE(sc.by_coprime_elements->first == sc.by_coprime_elements->second);
    }
  }
}

TEST_CASE("alternating cycles") {
  CHECK(alternating_cycles(1) == 1);
  CHECK(alternating_cycles(4) == 1);
  CHECK(alternating_cycles(8) == 173);
  for (int n = 1; n <= 18; ++n) REQUIRE(alternating_cycles(n) == beta_cyc(DescentSet::multiples(n, 2)));
}

TEST_CASE("kZ cycles") {
  CHECK(kz_cycles(5, 3) == 2);
  CHECK(kz_cycles(6, 3) == 3);
  CHECK(kz_cycles(1, 1) == 1);
  CHECK(kz_cycles(7, 9) == 0);
  CHECK(kz_cycles(1, 4) == 1);
  CHECK(kz_cycles_odd_prime(6, 3) == 3);
  CHECK(kz_cycles_coprime(5, 3) == 2);
  CHECK_THROWS_AS(kz_cycles_coprime(6, 3), std::domain_error);
  CHECK_THROWS_AS(kz_cycles_odd_prime(6, 4), std::domain_error);
  CHECK_THROWS_AS(kz_cycles_odd_prime(6, 2), std::domain_error);

  for (int n = 1; n <= 18; ++n) {
    for (int k = 1; k <= 5; ++k) {
      const Count v = kz_cycles(n, k, true);
      REQUIRE(v == beta_cyc(DescentSet::multiples(n, k)));
      if (std::gcd(n, k) == 1) REQUIRE(kz_cycles_coprime(n, k) == v);
      if (k == 3 || k == 5) REQUIRE(kz_cycles_odd_prime(n, k) == v);
    }
  }
}

TEST_CASE("complements") {
  CHECK(complement_delta(set(6, {1, 2})) == 1);
  CHECK(beta_cyc(set(6, {1, 2})) == 2);
  CHECK(beta_cyc(set(6, {3, 4, 5})) == 1);
  CHECK(complement_delta(set(6, {3})) == 0);
  CHECK(complement_delta(set(2, {1})) == 1);
  CHECK_THROWS_AS(complement_delta(set(6, {2})), std::domain_error);
  CHECK_THROWS_AS(complement_delta(set(5, {1})), std::domain_error);
  CHECK_THROWS_AS(complement_equality_criterion_holds(set(5, {1})), std::domain_error);

  for (int n : {6, 10}) {
    for (std::uint64_t m = 0; m < subsets(n); ++m) {
      const DescentSet s(n, m);
      int odd = 0;
      for (int i : s.elements()) odd += i % 2;
      if (odd % 2 == 1) {
        REQUIRE(complement_delta(s) == beta_cyc(s) - beta_cyc(s.complement()));
        REQUIRE(beta_cyc(s) >= beta_cyc(s.complement()));
      }
      REQUIRE(complement_equality_criterion_holds(s));
    }
  }
  // The criterion does not extend down to n = 2.
  CHECK_FALSE(complement_equality_criterion_holds(DescentSet(2, 0)));

  for (int n = 1; n <= 12; ++n) {
    if (n % 4 == 2) continue;
    for (std::uint64_t m = 0; m < subsets(n); ++m) {
      const DescentSet s(n, m);
      REQUIRE(beta_cyc(s) == beta_cyc(s.complement()));
    }
  }
}

TEST_CASE("query dispatch") {
  CHECK(formula_name(CyclicFormulaKind::MainC) == "beta-cyc");
  CHECK(evaluate({CyclicFormulaKind::MainC, 6, set(6, {3}), 0}) == 3);
  CHECK(evaluate({CyclicFormulaKind::MainB, 3, set(3, {1}), 0}) == 1);
  CHECK(evaluate({CyclicFormulaKind::EulerianCycle, 4, DescentSet(4, 0), 2}) == 3);
  CHECK(evaluate({CyclicFormulaKind::AlternatingCycle, 8, DescentSet(8, 0), 0}) == 173);
  CHECK(evaluate({CyclicFormulaKind::KZCycle, 6, DescentSet(6, 0), 3}) == 3);
  CHECK(evaluate({CyclicFormulaKind::OddPrimeKZ, 6, DescentSet(6, 0), 3}) == 3);
}
