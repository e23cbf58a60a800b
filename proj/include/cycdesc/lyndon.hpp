#pragma once

#include <compare>
#include <vector>

#include "cycdesc/count.hpp"
#include "cycdesc/descent_set.hpp"

namespace cycdesc {

/// A word over the positive integers.
using Word = std::vector<int>;

/// Weak composition (letter multiplicities); entry j-1 counts letter j.
using Evaluation = std::vector<int>;

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts descending; throws std::domain_error on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

/// Lyndon factorization w = u_1 u_2 ... u_k with u_1 >= u_2 >= ... >= u_k
/// (Duval). Throws std::domain_error on an empty word.
std::vector<Word> lyndon_factorize(const Word& word);

/// Partition of the Lyndon factor lengths.
Partition word_type(const Word& word);

/// Letter multiplicities, trailing zeros trimmed.
Evaluation word_evaluation(const Word& word);

/// Length of the shortest v with word = v^r.
int word_period(const Word& word);

/// Drops trailing zeros.
Evaluation normalize(Evaluation mu);

/// a_{n,mu}: Lyndon words of length n with evaluation mu,
///   (1/n) sum_{d | gcd(mu, n)} mu(d) multinomial(n/d; mu/d).
/// Throws std::domain_error if the entries do not sum to n or n < 1.
Count count_lyndon(int n, const Evaluation& mu);

/// a_{lambda,mu}: words of type lambda and evaluation mu. Throws
/// std::domain_error on a size mismatch.
Count count_words_by_type(const Partition& lambda, const Evaluation& mu);

/// With exact = false, a_{lambda, co(I)} = #{pi : type(pi) = lambda, D(pi) in I}.
/// With exact = true, the signed subset sum giving #{pi : type(pi) = lambda, D(pi) = I}.
Count count_by_type_and_descents(const Partition& lambda, const DescentSet& set, bool exact);

}  // namespace cycdesc
