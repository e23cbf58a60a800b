#include "cycdesc/linear_counts.hpp"

#include <list>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cycdesc {
namespace {

// psi[j] counts arrangements of the first i entries whose last entry has
// relative rank j (0-based). Appending an entry at rank j creates an ascent
// iff the previous rank r < j (ranks >= j shift up).
template <typename Int>
Int beta_table(const DescentSet& set) {
  const int n = set.n();
  std::vector<Int> psi(static_cast<std::size_t>(n), Int(0));
  std::vector<Int> next(static_cast<std::size_t>(n), Int(0));
  psi[0] = 1;
  for (int i = 1; i < n; ++i) {
    // i entries placed; place entry i+1 with rank in [0, i].
    if (set.contains(i)) {
      Int suffix = 0;
      for (int j = i; j >= 0; --j) {
        if (j < i) suffix += psi[j];
        next[j] = suffix;
      }
    } else {
      Int prefix = 0;
      for (int j = 0; j <= i; ++j) {
        next[j] = prefix;
        if (j < i) prefix += psi[j];
      }
    }
    std::swap(psi, next);
  }
  Int total = 0;
  for (int j = 0; j < n; ++j) total += psi[j];
  return total;
}

}  // namespace

Count alpha(const DescentSet& set) { return multinomial(composition_of(set).parts()); }

Count beta(const DescentSet& set) {
  // n! < 2^64 for n <= 20, and every table cell is bounded by i!.
  if (set.n() <= 20) return Count(beta_table<std::uint64_t>(set));
  return beta_table<Count>(set);
}

Count beta_inclusion_exclusion(const DescentSet& set) {
  const std::uint64_t full = set.mask();
  const int size = set.size();
  Count total = 0;
  // Enumerate J subset of I via the standard submask walk.
  std::uint64_t sub = full;
  while (true) {
    const DescentSet j(set.n(), sub);
    const Count a = alpha(j);
    if ((size - j.size()) % 2 == 0) {
      total += a;
    } else {
      total -= a;
    }
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
  return total;
}

struct BetaEngine::Cache {
  struct Key {
    int n;
    std::uint64_t mask;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.mask * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(k.n));
    }
  };
  using Entry = std::pair<Key, Count>;

  explicit Cache(std::size_t cap) : capacity(cap) {}

  bool lookup(const Key& key, Count& out) {
    std::lock_guard lock(mutex);
    const auto it = index.find(key);
    if (it == index.end()) return false;
    order.splice(order.begin(), order, it->second);
    out = it->second->second;
    ++hits;
    return true;
  }

  void store(const Key& key, const Count& value) {
    std::lock_guard lock(mutex);
    if (const auto it = index.find(key); it != index.end()) {
      // Writers always compute equal values.
      order.splice(order.begin(), order, it->second);
      return;
    }
    order.emplace_front(key, value);
    index.emplace(key, order.begin());
    if (order.size() > capacity) {
      index.erase(order.back().first);
      order.pop_back();
    }
  }

  std::size_t capacity;
  std::size_t hits = 0;
  std::list<Entry> order;
  std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index;
  mutable std::mutex mutex;
};

BetaEngine::BetaEngine(BetaStrategy strategy, std::size_t cache_entries) : strategy_(strategy) {
  if (cache_entries > 0) cache_ = std::make_unique<Cache>(cache_entries);
}

BetaEngine::~BetaEngine() = default;
BetaEngine::BetaEngine(BetaEngine&&) noexcept = default;
BetaEngine& BetaEngine::operator=(BetaEngine&&) noexcept = default;

Count BetaEngine::beta(const DescentSet& set) const {
  const Cache::Key key{set.n(), set.mask()};
  Count value;
  if (cache_ && cache_->lookup(key, value)) return value;
  value = strategy_ == BetaStrategy::DP ? cycdesc::beta(set) : beta_inclusion_exclusion(set);
  if (cache_) cache_->store(key, value);
  return value;
}

std::size_t BetaEngine::cache_capacity() const { return cache_ ? cache_->capacity : 0; }

std::size_t BetaEngine::cache_size() const {
  if (!cache_) return 0;
  std::lock_guard lock(cache_->mutex);
  return cache_->order.size();
}

std::size_t BetaEngine::cache_hits() const {
  if (!cache_) return 0;
  std::lock_guard lock(cache_->mutex);
  return cache_->hits;
}

const BetaEngine& default_engine() {
  static const BetaEngine engine;
  return engine;
}

Count eulerian(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::domain_error("eulerian: need 1 <= k <= n");
  }
  // A(m, j) = j A(m-1, j) + (m-j+1) A(m-1, j-1), row by row.
  std::vector<Count> row(static_cast<std::size_t>(n) + 1, Count(0));
  row[1] = 1;
  for (int m = 2; m <= n; ++m) {
    for (int j = m; j >= 1; --j) {
      row[j] = row[j] * j + row[j - 1] * (m - j + 1);
    }
  }
  return row[k];
}

Count euler_zigzag(int n) {
  if (n < 0) throw std::domain_error("euler_zigzag: n must be nonnegative");
  // Seidel-Entringer boustrophedon: T(m, 0) = [m == 0],
  // T(m, j) = T(m, j-1) + T(m-1, m-j); E_m = T(m, m).
  std::vector<Count> prev{Count(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Count> cur(static_cast<std::size_t>(m) + 1, Count(0));
    for (int j = 1; j <= m; ++j) cur[j] = cur[j - 1] + prev[m - j];
    prev = std::move(cur);
  }
  return prev.back();
}

Count generalized_euler(int n, int k) {
  if (n < 1 || k < 1) throw std::domain_error("generalized_euler: need n, k >= 1");
  return beta(DescentSet::multiples(n, k));
}

}  // namespace cycdesc
