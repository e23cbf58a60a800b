#include "cycdesc/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cycdesc/errors.hpp"
#include "cycdesc/number_theory.hpp"

namespace cycdesc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::domain_error("partition parts must be positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const {
  std::string out;
  for (int p : parts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::domain_error("partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Word> lyndon_factorize(const Word& word) {
  if (word.empty()) throw std::domain_error("lyndon_factorize: empty word");
  std::vector<Word> factors;
  const std::size_t n = word.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && word[k] <= word[j]) {
      k = (word[k] < word[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      factors.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(i),
                           word.begin() + static_cast<std::ptrdiff_t>(i + j - k));
      i += j - k;
    }
  }
  return factors;
}

Partition word_type(const Word& word) {
  std::vector<int> lengths;
  for (const auto& f : lyndon_factorize(word)) lengths.push_back(static_cast<int>(f.size()));
  return Partition(std::move(lengths));
}

Evaluation word_evaluation(const Word& word) {
  Evaluation ev;
  for (int letter : word) {
    if (letter < 1) throw std::domain_error("word letters must be positive");
    if (static_cast<std::size_t>(letter) > ev.size()) ev.resize(static_cast<std::size_t>(letter), 0);
    ++ev[static_cast<std::size_t>(letter - 1)];
  }
  return ev;
}

int word_period(const Word& word) {
  const int n = static_cast<int>(word.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return p;
  }
  return n;
}

Evaluation normalize(Evaluation mu) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  return mu;
}

Count count_lyndon(int n, const Evaluation& mu) {
  if (n < 1) throw std::domain_error("count_lyndon: n must be positive");
  int sum = 0;
  int g = n;
  for (int m : mu) {
    if (m < 0) throw std::domain_error("count_lyndon: negative multiplicity");
    sum += m;
    g = std::gcd(g, m);
  }
  if (sum != n) throw std::domain_error("count_lyndon: evaluation does not sum to n");
  Count total = 0;
  std::vector<int> scaled(mu.size());
  for (auto d : divisors(g)) {
    const int md = mobius(d);
    if (md == 0) continue;
    for (std::size_t j = 0; j < mu.size(); ++j) scaled[j] = mu[j] / static_cast<int>(d);
    total += md * multinomial(scaled);
  }
  return exact_div(total, n, "count_lyndon");
}

namespace {

// Evaluations bounded componentwise by `bound`, indexed in mixed radix.
class BoundedEvaluations {
 public:
  explicit BoundedEvaluations(Evaluation bound) : bound_(std::move(bound)), stride_(bound_.size()) {
    std::size_t s = 1;
    for (std::size_t j = 0; j < bound_.size(); ++j) {
      stride_[j] = s;
      s *= static_cast<std::size_t>(bound_[j] + 1);
    }
    size_ = s;
  }

  std::size_t size() const { return size_; }
  std::size_t index_of(const Evaluation& ev) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < bound_.size(); ++j) idx += stride_[j] * static_cast<std::size_t>(ev[j]);
    return idx;
  }
  Evaluation at(std::size_t idx) const {
    Evaluation ev(bound_.size());
    for (std::size_t j = 0; j < bound_.size(); ++j) {
      ev[j] = static_cast<int>(idx / stride_[j] % static_cast<std::size_t>(bound_[j] + 1));
    }
    return ev;
  }
  /// Index of a + b, or npos if the sum leaves the box.
  std::size_t add(std::size_t a, const Evaluation& b) const {
    const Evaluation ea = at(a);
    Evaluation sum(bound_.size());
    for (std::size_t j = 0; j < bound_.size(); ++j) {
      sum[j] = ea[j] + b[j];
      if (sum[j] > bound_[j]) return npos;
    }
    return index_of(sum);
  }

  /// Evaluations of total `length` inside the box, lexicographic order.
  std::vector<Evaluation> of_length(int length) const {
    std::vector<Evaluation> out;
    Evaluation cur(bound_.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int remaining) {
      if (j == bound_.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
      }
      for (int v = 0; v <= std::min(remaining, bound_[j]); ++v) {
        cur[j] = v;
        rec(j + 1, remaining - v);
      }
      cur[j] = 0;
    };
    rec(0, length);
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Evaluation bound_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

// Multisets of size t drawn from a pool of `pool` distinct items.
Count multichoose(const Count& pool, int t) {
  Count r = 1;
  for (int i = 1; i <= t; ++i) {
    r *= pool + (i - 1);
    r /= i;
  }
  return r;
}

}  // namespace

Count count_words_by_type(const Partition& lambda, const Evaluation& mu_raw) {
  const Evaluation mu = normalize(mu_raw);
  int total = 0;
  for (int m : mu) {
    if (m < 0) throw std::domain_error("count_words_by_type: negative multiplicity");
    total += m;
  }
  if (total != lambda.n()) throw std::domain_error("count_words_by_type: |lambda| != sum(mu)");
  if (lambda.n() == 0) return 1;

  const BoundedEvaluations box(mu);
  std::map<int, int> multiplicity;
  for (int p : lambda.parts()) ++multiplicity[p];

  // result[e] = number of multisets of Lyndon words, lengths as processed so
  // far, with total evaluation e.
  std::vector<Count> result(box.size(), Count(0));
  result[0] = 1;
  for (const auto& [length, count] : multiplicity) {
    // table[t][e]: multisets of t Lyndon words of this length, evaluation e.
    std::vector<std::vector<Count>> table(static_cast<std::size_t>(count) + 1,
                                          std::vector<Count>(box.size(), Count(0)));
    table[0][0] = 1;
    for (const Evaluation& ev : box.of_length(length)) {
      const Count pool = count_lyndon(length, ev);
      if (pool == 0) continue;
      auto next = table;
      for (int used = 0; used < count; ++used) {
        for (std::size_t e = 0; e < box.size(); ++e) {
          if (table[used][e] == 0) continue;
          std::size_t pos = e;
          for (int t = 1; used + t <= count; ++t) {
            pos = box.add(pos, ev);
            if (pos == BoundedEvaluations::npos) break;
            next[used + t][pos] += table[used][e] * multichoose(pool, t);
          }
        }
      }
      table = std::move(next);
    }
    std::vector<Count> merged(box.size(), Count(0));
    for (std::size_t a = 0; a < box.size(); ++a) {
      if (result[a] == 0) continue;
      for (std::size_t b = 0; b < box.size(); ++b) {
        if (table[count][b] == 0) continue;
        const std::size_t pos = box.add(a, box.at(b));
        if (pos != BoundedEvaluations::npos) merged[pos] += result[a] * table[count][b];
      }
    }
    result = std::move(merged);
  }
  return result[box.index_of(mu)];
}

Count count_by_type_and_descents(const Partition& lambda, const DescentSet& set, bool exact) {
  if (lambda.n() != set.n()) throw std::domain_error("count_by_type_and_descents: |lambda| != n");
  if (!exact) return count_words_by_type(lambda, composition_of(set).parts());
  Count total = 0;
  const std::uint64_t full = set.mask();
  std::uint64_t sub = full;
  while (true) {
    const DescentSet j(set.n(), sub);
    const Count a = count_words_by_type(lambda, composition_of(j).parts());
    if ((set.size() - j.size()) % 2 == 0) {
      total += a;
    } else {
      total -= a;
    }
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
  if (total < 0) throw InvariantError("count_by_type_and_descents: negative count");
  return total;
}

}  // namespace cycdesc
