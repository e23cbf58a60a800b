#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "cycdesc/count.hpp"
#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/lyndon.hpp"
#include "cycdesc/number_theory.hpp"
#include "cycdesc/oracle.hpp"

using namespace cycdesc;

namespace {

// All words of length n over {1..q}.
void for_each_word(int n, int q, const std::function<void(const Word&)>& visit) {
  Word w(n, 1);
  while (true) {
    visit(w);
    int i = n - 1;
    while (i >= 0 && w[i] == q) w[i--] = 1;
    if (i < 0) return;
    ++w[i];
  }
}

// Weak compositions of n into q parts.
void for_each_evaluation(int n, int q, Evaluation& cur, const std::function<void(const Evaluation&)>& visit) {
  if (static_cast<int>(cur.size()) == q - 1) {
    cur.push_back(n);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= n; ++a) {
    cur.push_back(a);
    for_each_evaluation(n - a, q, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(4).front() == Partition({4}));
  CHECK(Partition({1, 3}).parts() == std::vector<int>{3, 1});
  CHECK(Partition({2, 1, 1}).to_string() == "2,1,1");
  CHECK_THROWS_AS(Partition({2, 0}), std::domain_error);
}

TEST_CASE("lyndon factorization") {
  CHECK(lyndon_factorize({1, 2, 2}) == std::vector<Word>{{1, 2, 2}});
  CHECK(lyndon_factorize({2, 2, 1, 1}) == std::vector<Word>{{2}, {2}, {1}, {1}});
  CHECK(lyndon_factorize({1, 2, 1, 2}) == std::vector<Word>{{1, 2}, {1, 2}});
  CHECK_THROWS_AS(lyndon_factorize({}), std::domain_error);

  CHECK(word_type({1, 2, 1, 2}) == Partition({2, 2}));
  CHECK(word_evaluation({3, 3, 1}) == Evaluation{1, 0, 2});
  CHECK(word_period({1, 2, 1, 2}) == 2);
  CHECK(word_period({1, 2, 2}) == 3);
  CHECK(normalize({2, 1, 0, 0}) == Evaluation{2, 1});
}

TEST_CASE("factorization agrees with the quadratic checker") {
  for (int n = 1; n <= 10; ++n) {
    for_each_word(n, 3, [](const Word& w) {
      const auto factors = lyndon_factorize(w);
      REQUIRE(factors == oracle::factorize(w));
      Word joined;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        REQUIRE(oracle::is_lyndon(factors[i]));
        if (i > 0) REQUIRE_FALSE(factors[i - 1] < factors[i]);
        joined.insert(joined.end(), factors[i].begin(), factors[i].end());
      }
      REQUIRE(joined == w);
    });
  }
}

TEST_CASE("count_lyndon") {
  CHECK(count_lyndon(3, {1, 2}) == 1);
  CHECK(count_lyndon(3, {1, 2}) == alpha_cyc(DescentSet::from_elements(3, {1})));
  CHECK(count_lyndon(2, {1, 1}) == 1);
  for (int n = 2; n <= 9; ++n) CHECK(count_lyndon(n, {n}) == 0);
  CHECK(count_lyndon(1, {1}) == 1);
  CHECK(count_lyndon(4, {2, 0, 2}) == count_lyndon(4, {2, 2}));
  CHECK_THROWS_AS(count_lyndon(4, {1, 2}), std::domain_error);
}

TEST_CASE("necklace polynomial") {
  for (int n = 1; n <= 12; ++n) {
    for (int q = 1; q <= 4; ++q) {
      Count by_evaluation = 0;
      Evaluation cur;
      for_each_evaluation(n, q, cur, [&](const Evaluation& mu) { by_evaluation += count_lyndon(n, mu); });
      Count necklace = 0;
      for (auto d : divisors(n)) {
        Count power = 1;
        for (std::int64_t i = 0; i < n / d; ++i) power *= q;
        necklace += mobius(d) * power;
      }
      REQUIRE(by_evaluation * n == necklace);
    }
  }
}

TEST_CASE("words by type") {
  CHECK(count_words_by_type(Partition({3}), {1, 2}) == count_lyndon(3, {1, 2}));
  // Of 112, 121, 211 only 211 factors into three letters.
  CHECK(count_words_by_type(Partition({1, 1, 1}), {2, 1}) == 1);
  CHECK(count_words_by_type(Partition({2, 1}), {2, 1}) == 1);  // 121 = 12.1
  CHECK(count_words_by_type(Partition({2, 2}), {2, 2}) == 1);
  CHECK(count_words_by_type(Partition({1, 1}), {1, 0, 1}) == 1);
  CHECK_THROWS_AS(count_words_by_type(Partition({2, 1}), {1, 1}), std::domain_error);

  for (int n = 1; n <= 8; ++n) {
    const auto words = oracle::brute_words(n, 3);
    for (const auto& lambda : partitions(n)) {
      Evaluation cur;
      for_each_evaluation(n, 3, cur, [&](const Evaluation& mu) {
        const auto key = std::make_pair(lambda, normalize(mu));
        const auto it = words.find(key);
        REQUIRE(count_words_by_type(lambda, mu) == (it == words.end() ? Count(0) : it->second));
      });
    }
  }
}

TEST_CASE("counting permutations by cycle type and descent set") {
  for (int n = 1; n <= 7; ++n) {
    const auto tables = oracle::brute_tables(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      const DescentSet s(n, m);
      Count total = 0;
      for (const auto& lambda : partitions(n)) {
        const Count exact = count_by_type_and_descents(lambda, s, true);
        const auto it = tables.by_type.find(lambda);
        REQUIRE(exact == (it == tables.by_type.end() ? Count(0) : it->second.at(m)));
        total += exact;
      }
      REQUIRE(total == beta(s));
      REQUIRE(count_by_type_and_descents(Partition({n}), s, true) == beta_cyc(s));
      REQUIRE(count_by_type_and_descents(Partition({n}), s, false) == alpha_cyc(s));
    }
  }
  CHECK(count_by_type_and_descents(Partition({1, 1, 1, 1}), DescentSet(4, 0), true) == 1);
  CHECK(count_by_type_and_descents(Partition({2, 2}), DescentSet::from_elements(4, {1, 3}), true) ==
        oracle::brute_tables(4).by_type.at(Partition({2, 2})).at(0b101));
  CHECK_THROWS_AS(count_by_type_and_descents(Partition({2, 1}), DescentSet(4, 0), true), std::domain_error);
}
