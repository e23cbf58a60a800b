#pragma once

#include <cstddef>
#include <memory>

#include "cycdesc/count.hpp"
#include "cycdesc/descent_set.hpp"

namespace cycdesc {

/// alpha_n(I): permutations of [n] whose descent set is contained in I.
/// Equals the multinomial coefficient of co(I).
Count alpha(const DescentSet& set);

/// beta_n(I): permutations of [n] with descent set exactly I, by the
/// O(n^2) relative-rank prefix-sum table.
Count beta(const DescentSet& set);

/// beta_n(I) as the signed subset sum of alpha over J in I. Exponential in
/// |I|; shares no code with the prefix-sum route.
Count beta_inclusion_exclusion(const DescentSet& set);

enum class BetaStrategy { DP, InclusionExclusion };

/// Computes beta with a chosen strategy and an optional bounded LRU memo
/// keyed by (n, mask). Safe to share between threads; cached values never
/// change once written.
class BetaEngine {
 public:
  static constexpr std::size_t kDefaultCacheEntries = std::size_t{1} << 20;

  /// cache_entries == 0 disables memoization.
  explicit BetaEngine(BetaStrategy strategy = BetaStrategy::DP, std::size_t cache_entries = 0);
  ~BetaEngine();
  BetaEngine(BetaEngine&&) noexcept;
  BetaEngine& operator=(BetaEngine&&) noexcept;

  Count beta(const DescentSet& set) const;
  Count alpha(const DescentSet& set) const { return cycdesc::alpha(set); }

  BetaStrategy strategy() const { return strategy_; }
  std::size_t cache_capacity() const;
  std::size_t cache_size() const;
  std::size_t cache_hits() const;

 private:
  struct Cache;
  BetaStrategy strategy_;
  std::unique_ptr<Cache> cache_;
};

/// Uncached DP engine shared by functions that take an optional engine.
const BetaEngine& default_engine();

/// Eulerian number A(n, k): permutations of [n] with k-1 descents.
/// Requires 1 <= k <= n.
Count eulerian(int n, int k);

/// Euler zigzag number E_n (E_0 = E_1 = 1) by the boustrophedon triangle.
Count euler_zigzag(int n);

/// E_n^{(k)} = beta_n(kZ n [n-1]); E_n^{(1)} = 1.
Count generalized_euler(int n, int k);

}  // namespace cycdesc
