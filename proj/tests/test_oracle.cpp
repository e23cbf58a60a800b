#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cycdesc/count.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/oracle.hpp"

using namespace cycdesc;
using namespace cycdesc::oracle;

TEST_CASE("enumeration") {
  int records = 0, cycles = 0;
  enumerate(1, [&](const PermRecord& r) {
    ++records;
    CHECK(r.descents.empty());
    CHECK(r.cycle_type == Partition({1}));
  });
  CHECK(records == 1);

  for (int n : {3, 4}) {
    records = cycles = 0;
    enumerate(n, [&](const PermRecord& r) {
      ++records;
      cycles += r.is_n_cycle;
      CHECK(r.cycle_type.n() == n);
      CHECK(r.is_n_cycle == (r.cycle_type == Partition({n})));
    });
    CHECK(records == (n == 3 ? 6 : 24));
    CHECK(cycles == (n == 3 ? 2 : 6));
  }

  PermutationStream stream(3);
  REQUIRE(stream.next());
  CHECK(stream.current().one_line == std::vector<int>{1, 2, 3});
  int left = 0;
  while (stream.next()) ++left;
  CHECK(left == 5);
  CHECK_THROWS_AS(PermutationStream(11), CapacityError);
  CHECK_THROWS_AS(PermutationStream(0), CapacityError);
}

TEST_CASE("brute tables") {
  const auto t3 = brute_tables(3);
  CHECK(t3.beta_cyc.at(0b00) == 0);
  CHECK(t3.beta_cyc.at(0b01) == 1);
  CHECK(t3.beta_cyc.at(0b10) == 1);
  CHECK(t3.beta_cyc.at(0b11) == 0);
  CHECK(brute_tables(4).beta.at(0b010) == 5);
  for (int n = 1; n <= 7; ++n) {
    const auto t = brute_tables(n);
    CHECK(t.beta.total() == factorial(n));
    CHECK(t.beta_cyc.total() == factorial(n - 1));
    CHECK(t.beta.values.size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("sharded tables do not depend on the worker count") {
  const auto one = brute_tables(8, 1);
  const auto many = brute_tables(8, 3);
  CHECK(one.beta.values == many.beta.values);
  CHECK(one.beta_cyc.values == many.beta_cyc.values);
  REQUIRE(one.by_type.size() == many.by_type.size());
  for (const auto& [lambda, table] : one.by_type) CHECK(table.values == many.by_type.at(lambda).values);
}

TEST_CASE("brute avoiders") {
  CHECK(brute_avoiders(4, 3, Direction::Increasing, false, false) == 17);
  CHECK(brute_avoiders(4, 3, Direction::Increasing, true, false) == 4);
  CHECK(brute_avoiders(4, 3, Direction::Decreasing, false, true) == 6);
}

TEST_CASE("brute words") {
  const auto w22 = brute_words(2, 2);
  Count type2 = 0, type11 = 0;
  for (const auto& [key, count] : w22) {
    if (key.first == Partition({2})) type2 += count;
    if (key.first == Partition({1, 1})) type11 += count;
  }
  CHECK(type2 == 1);
  CHECK(type11 == 3);

  const auto w31 = brute_words(3, 1);
  REQUIRE(w31.size() == 1);
  CHECK(w31.begin()->first.first == Partition({1, 1, 1}));

  const auto w32 = brute_words(3, 2);
  CHECK(w32.at({Partition({3}), Evaluation{1, 2}}) == 1);
  CHECK_THROWS_AS(brute_words(15, 3), CapacityError);
}

TEST_CASE("lyndon checker") {
  CHECK(is_lyndon({1, 2, 2}));
  CHECK_FALSE(is_lyndon({1, 2, 1, 2}));
  CHECK_FALSE(is_lyndon({2, 1}));
  CHECK(is_lyndon({3}));
  CHECK(factorize({2, 2, 1, 1}) == std::vector<Word>{{2}, {2}, {1}, {1}});
}

TEST_CASE("primitive words") {
  CHECK(brute_primitive_words(4, 2) == 12);
  CHECK(brute_primitive_words(1, 3) == 3);
  CHECK(brute_primitive_words(6, 1) == 0);
}

TEST_CASE("golden csv") {
  const auto files = golden_files(3);
  REQUIRE(files.size() == 6);
  CHECK(files[0].first == "beta_n1.csv");
  CHECK(files[0].second == "mask,set,count\n0,\"\",1\n");
  const auto& cyc3 = files[5];
  CHECK(cyc3.first == "beta_cyc_n3.csv");
  CHECK(cyc3.second == "mask,set,count\n0,\"\",0\n1,\"1\",1\n2,\"2\",1\n3,\"1,2\",0\n");

  const auto dir = std::filesystem::temp_directory_path() / "cycdesc_golden_test";
  std::filesystem::remove_all(dir);
  write_golden(dir, 4);
  CHECK(check_golden(dir, 4).empty());
  std::ofstream(dir / "beta_n2.csv") << "tampered\n";
  CHECK(check_golden(dir, 4) == std::vector<std::string>{"beta_n2.csv"});
  std::filesystem::remove(dir / "beta_cyc_n4.csv");
  CHECK(check_golden(dir, 4).size() == 2);
  std::filesystem::remove_all(dir);
}
