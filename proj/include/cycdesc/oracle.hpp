#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycdesc/consec_patterns.hpp"
#include "cycdesc/count.hpp"
#include "cycdesc/descent_set.hpp"
#include "cycdesc/lyndon.hpp"

// Brute-force ground truth. Nothing here calls the formula modules: descent
// sets, cycle types and Lyndon factorizations are recomputed from scratch.
namespace cycdesc::oracle {

inline constexpr int kMaxPermutationN = 10;
inline constexpr std::int64_t kMaxWords = 10'000'000;

struct PermRecord {
  std::vector<int> one_line;
  DescentSet descents;
  Partition cycle_type;
  bool is_n_cycle = false;
};

/// Streams S_n in lexicographic order, one record at a time.
class PermutationStream {
 public:
  /// Throws CapacityError outside 1 <= n <= 10.
  explicit PermutationStream(int n);

  /// Advances to the next permutation; false once exhausted. The first call
  /// yields the identity.
  bool next();
  const PermRecord& current() const { return record_; }

 private:
  void fill();

  int n_;
  bool started_ = false;
  std::vector<int> perm_;
  PermRecord record_;
};

/// Visits every permutation of [n] whose first entry is `first` (or all of
/// S_n when first == 0), in lexicographic order.
void enumerate(int n, const std::function<void(const PermRecord&)>& visit, int first = 0);

/// A statistic tabulated by descent set (mask -> count) for a fixed n.
struct CountTable {
  std::string statistic;
  int n = 1;
  std::map<std::uint64_t, Count> values;

  Count at(std::uint64_t mask) const;
  Count total() const;
};

struct BruteTables {
  CountTable beta;
  CountTable beta_cyc;
  std::map<Partition, CountTable> by_type;
};

/// Exact-descent tables over S_n, over n-cycles, and per cycle type. Every
/// mask in [0, 2^{n-1}) is present. The enumeration is sharded by first entry
/// across `jobs` threads; the merged tables do not depend on `jobs`.
BruteTables brute_tables(int n, int jobs = 1);

/// Permutations (or n-cycles only) with no k-1 consecutive ascents
/// (Increasing) or descents (Decreasing). With ascent_boundary, additionally
/// requires the first and last steps to be ascents.
Count brute_avoiders(int n, int k, Direction direction, bool cyclic_only, bool ascent_boundary);

/// Lyndon test straight from the definition: strictly smaller than every
/// nontrivial rotation.
bool is_lyndon(const Word& word);

/// Factorization by repeatedly splitting off the longest Lyndon prefix.
std::vector<Word> factorize(const Word& word);

using WordKey = std::pair<Partition, Evaluation>;

/// Tallies all words of length n over {1..alphabet} by (type, evaluation).
/// Evaluations have trailing zeros trimmed. Throws CapacityError when
/// alphabet^n exceeds 10^7.
std::map<WordKey, Count> brute_words(int n, int alphabet);

/// Primitive words of length n over `alphabet` letters.
Count brute_primitive_words(int n, int alphabet);

/// Mask-ascending CSV with header "mask,set,count"; the set column is quoted.
std::string to_csv(const CountTable& table);

/// beta_n{n}.csv and beta_cyc_n{n}.csv for 1 <= n <= max_n.
std::vector<std::pair<std::string, std::string>> golden_files(int max_n);

/// Writes golden_files(max_n) into dir.
void write_golden(const std::filesystem::path& dir, int max_n);

/// Names of golden files that are missing from dir or differ byte-wise.
std::vector<std::string> check_golden(const std::filesystem::path& dir, int max_n);

}  // namespace cycdesc::oracle
