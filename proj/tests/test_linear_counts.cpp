#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "cycdesc/count.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/oracle.hpp"

using namespace cycdesc;

namespace {
DescentSet set(int n, std::initializer_list<int> xs) { return DescentSet::from_elements(n, xs); }
}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(set(3, {1})) == 3);
  CHECK(alpha(DescentSet(7, 0)) == 1);
  CHECK(alpha(set(6, {1, 2})) == 30);
  CHECK(alpha(DescentSet::full(6)) == 720);
}

TEST_CASE("beta") {
  CHECK(beta(set(4, {2})) == 5);
  CHECK(beta(DescentSet(9, 0)) == 1);
  CHECK(beta(set(6, {1, 2})) == 10);
  CHECK(beta(DescentSet(1, 0)) == 1);
  CHECK(beta(DescentSet::full(30)) == 1);
  // Large n switches from the machine-word table to big integers.
  CHECK(beta(DescentSet::multiples(24, 2)) == euler_zigzag(24));
  CHECK(beta(DescentSet::multiples(40, 2)) == euler_zigzag(40));
}

TEST_CASE("beta strategies agree and sum to n!") {
  for (int n = 1; n <= 12; ++n) {
    Count total = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      const DescentSet s(n, m);
      const Count b = beta(s);
      REQUIRE(b == beta_inclusion_exclusion(s));
      total += b;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("beta is invariant under reversal and complement") {
  for (int n = 1; n <= 10; ++n) {
    const auto table = oracle::brute_tables(n).beta;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      const DescentSet s(n, m);
      REQUIRE(beta(s.reversed()) == table.at(m));
      REQUIRE(beta(s.complement()) == table.at(m));
    }
  }
}

TEST_CASE("eulerian") {
  CHECK(eulerian(3, 2) == 4);
  CHECK(eulerian(4, 2) == 11);
  CHECK(eulerian(9, 1) == 1);
  CHECK_THROWS_AS(eulerian(4, 0), std::domain_error);
  CHECK_THROWS_AS(eulerian(4, 5), std::domain_error);
  for (int n = 1; n <= 12; ++n) {
    std::vector<Count> by_size(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      const DescentSet s(n, m);
      by_size[s.size()] += beta(s);
    }
    for (int k = 1; k <= n; ++k) REQUIRE(eulerian(n, k) == by_size[k - 1]);
  }
}

TEST_CASE("euler zigzag") {
  CHECK(euler_zigzag(0) == 1);
  CHECK(euler_zigzag(1) == 1);
  CHECK(euler_zigzag(4) == 5);
  CHECK(euler_zigzag(8) == 1385);
  CHECK(beta(set(8, {2, 4, 6})) == 1385);
  CHECK(euler_zigzag(10) == 50521);
}

TEST_CASE("generalized euler") {
  CHECK(generalized_euler(5, 3) == 9);
  CHECK(generalized_euler(6, 3) == 19);
  CHECK(generalized_euler(7, 1) == 1);
  CHECK(generalized_euler(8, 2) == euler_zigzag(8));
}

TEST_CASE("alternating prefix identity") {
  for (int n = 2; n <= 14; ++n) {
    auto evens = [n](int top) {
      std::vector<int> xs;
      for (int i = 2; i <= top; i += 2) xs.push_back(i);
      return DescentSet::from_elements(n, xs);
    };
    for (int i = 1; 2 * i <= n - 1; ++i) {
      REQUIRE(beta(evens(2 * i - 2)) + beta(evens(2 * i)) == binomial(n, 2 * i) * euler_zigzag(2 * i));
    }
  }
}

TEST_CASE("cached engine") {
  const BetaEngine engine(BetaStrategy::DP, 16);
  CHECK(engine.cache_capacity() == 16);
  for (int round = 0; round < 2; ++round) {
    for (std::uint64_t m = 0; m < 8; ++m) CHECK(engine.beta(DescentSet(4, m)) == beta(DescentSet(4, m)));
  }
  CHECK(engine.cache_hits() >= 8);
  CHECK(engine.cache_size() <= 16);

  // Eviction keeps the cache bounded.
  for (std::uint64_t m = 0; m < 512; ++m) engine.beta(DescentSet(10, m));
  CHECK(engine.cache_size() <= 16);

  const BetaEngine uncached(BetaStrategy::InclusionExclusion, 0);
  CHECK(uncached.beta(set(6, {1, 2})) == 10);
  CHECK(uncached.cache_size() == 0);
}

TEST_CASE("engine is safe to share across threads") {
  const BetaEngine engine(BetaStrategy::DP, 64);
  std::vector<std::thread> pool;
  std::vector<int> bad(4, 0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t m = 0; m < 1024; ++m) {
        const DescentSet s(11, (m * 7 + t) & 1023);
        if (engine.beta(s) != beta(s)) ++bad[t];
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int b : bad) CHECK(b == 0);
}
