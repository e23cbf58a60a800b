#include <doctest.h>

#include <stdexcept>

#include "cycdesc/consec_patterns.hpp"
#include "cycdesc/count.hpp"
#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/number_theory.hpp"
#include "cycdesc/oracle.hpp"

using namespace cycdesc;
using oracle::brute_avoiders;

TEST_CASE("chi weights") {
  const ChiWeights w{3};
  CHECK(w.chi(1) == 1);
  CHECK(w.chi(2) == 0);
  CHECK(w.chi(3) == -1);
  CHECK(w.chi(4) == 1);
  CHECK(ChiWeights::chi_star(2) == 1);
  CHECK(ChiWeights::chi_star(3) == -1);
  CHECK(ChiWeights::chi_star(4) == 0);
}

TEST_CASE("theta corrections") {
  CHECK(theta(1) == 0);
  CHECK(theta(3) == 1);
  CHECK(theta(6) == -2);
  CHECK(theta(27) == 1);
  CHECK(theta(2) == 0);
  CHECK(theta_tilde(1) == 0);
  CHECK(theta_tilde(9) == 1);
  CHECK(theta_tilde(18) == 0);

  for (int n = 1; n <= 200; ++n) {
    long long signed_sum = 0, plain_sum = 0;
    for (auto d : divisors(n)) {
      if (d % 3) continue;
      signed_sum += mobius(d) * ((n / d) % 2 ? -1 : 1);
      plain_sum += mobius(d);
    }
    REQUIRE(signed_sum == theta(n));
    REQUIRE((n % 2 ? -plain_sum : plain_sum) == theta_tilde(n));
  }
}

TEST_CASE("gamma") {
  CHECK(gamma(0) == 1);
  CHECK(gamma(1) == 1);
  CHECK(gamma(4) == 17);
  CHECK(gamma(6) == 349);
  for (int n = 0; n <= 9; ++n) {
    REQUIRE(gamma(n) == avoiders_by_beta_sum(n, 3));
    if (n >= 1) REQUIRE(gamma(n) == brute_avoiders(n, 3, Direction::Increasing, false, false));
  }
}

TEST_CASE("gamma star") {
  CHECK(gamma_star(0) == 1);
  CHECK(gamma_star(1) == 0);
  CHECK(gamma_star(4) == 6);
  CHECK(gamma_star(5) == 19);
  for (int n = 2; n <= 9; ++n) {
    REQUIRE(gamma_star(n) == gamma_star_by_beta_sum(n));
    REQUIRE(gamma_star(n) == brute_avoiders(n, 3, Direction::Decreasing, false, true));
  }
}

TEST_CASE("monotone avoiders") {
  CHECK(monotone_avoiders(4, 3, Direction::Increasing) == 17);
  CHECK(monotone_avoiders(4, 3, Direction::Decreasing) == 17);
  for (int n = 1; n <= 8; ++n) {
    CHECK(monotone_avoiders(n, n + 1, Direction::Increasing) == factorial(n));
    CHECK(monotone_avoiders(n, n + 3, Direction::Decreasing) == factorial(n));
    for (int k = 2; k <= 5; ++k) {
      const Count want = brute_avoiders(n, k, Direction::Increasing, false, false);
      REQUIRE(monotone_avoiders(n, k, Direction::Increasing) == want);
      REQUIRE(monotone_avoiders(n, k, Direction::Decreasing) == want);
      REQUIRE(monotone_avoiders_by_recurrence(n, k) == want);
      REQUIRE(avoiders_by_beta_sum(n, k) == want);
    }
  }
  CHECK(monotone_avoiders(30, 3, Direction::Increasing) == gamma(30));
}

TEST_CASE("composition walks") {
  int count = 0;
  for_each_bounded_composition_set(5, 3, [&](const DescentSet& s) {
    ++count;
    const auto co = composition_of(s);
    for (int part : co.parts()) CHECK(part < 3);
  });
  CHECK(count == 8);  // compositions of 5 into 1s and 2s
  count = 0;
  for_each_long_part_set(5, [&](const DescentSet& s) {
    ++count;
    const auto co = composition_of(s);
    for (int part : co.parts()) CHECK(part >= 2);
  });
  CHECK(count == 3);  // 5, 2+3, 3+2
}

TEST_CASE("cycles avoiding 123 and 321") {
  CHECK(cycles_avoiding_incr3(1) == 1);
  CHECK(cycles_avoiding_incr3(4) == 4);
  CHECK(cycles_avoiding_decr3(4) == 4);
  CHECK(cycles_avoiding_decr3(2) == 1);
  for (int n = 1; n <= 9; ++n) {
    REQUIRE(cycles_avoiding_incr3(n) == brute_avoiders(n, 3, Direction::Increasing, true, false));
    REQUIRE(cycles_avoiding_decr3(n) == brute_avoiders(n, 3, Direction::Decreasing, true, false));
  }
  for (int n = 1; n <= 14; ++n) {
    REQUIRE(cycles_avoiding_incr3(n) == cycles_avoiding_monotone(n, 3, Direction::Increasing));
    REQUIRE(cycles_avoiding_decr3(n) == cycles_avoiding_monotone(n, 3, Direction::Decreasing));
  }
  for (int n = 1; n <= 21; ++n) {
    if (n % 4 != 2) REQUIRE(cycles_avoiding_incr3(n) == cycles_avoiding_decr3(n));
  }
}

TEST_CASE("cycles avoiding longer monotone patterns") {
  CHECK(cycles_avoiding_monotone(4, 3, Direction::Increasing) == 4);
  for (int n = 1; n <= 7; ++n) CHECK(cycles_avoiding_monotone(n, n + 1, Direction::Increasing) == factorial(n - 1));
  for (int n = 1; n <= 8; ++n) {
    for (int k = 2; k <= 5; ++k) {
      REQUIRE(cycles_avoiding_monotone(n, k, Direction::Increasing) ==
              brute_avoiders(n, k, Direction::Increasing, true, false));
      REQUIRE(cycles_avoiding_monotone(n, k, Direction::Decreasing) ==
              brute_avoiders(n, k, Direction::Decreasing, true, false));
    }
  }
  CHECK_THROWS_AS(cycles_avoiding_monotone(25, 3, Direction::Increasing), CapacityError);
}
