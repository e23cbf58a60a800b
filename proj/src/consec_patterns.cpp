#include "cycdesc/consec_patterns.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/number_theory.hpp"

namespace cycdesc {

int ChiWeights::chi(int r) const {
  if (r % k == 1 % k) return 1;
  if (r % k == 0) return -1;
  return 0;
}

int ChiWeights::chi_star(int r) {
  if (r % 3 == 2) return 1;
  if (r % 3 == 0) return -1;
  return 0;
}

int theta(int n) {
  if (is_prime_power_of(n, 3)) return 1;
  if (n % 2 == 0 && is_prime_power_of(n / 2, 3)) return -2;
  return 0;
}

int theta_tilde(int n) { return is_prime_power_of(n, 3) ? 1 : 0; }

namespace {

// Prefix tables grow on demand and are only ever appended to.
class SequenceTable {
 public:
  using Step = std::function<Count(int, const std::vector<Count>&)>;
  SequenceTable(std::vector<Count> seed, Step step) : values_(std::move(seed)), step_(std::move(step)) {}

  Count at(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) {
      values_.push_back(step_(static_cast<int>(values_.size()), values_));
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::vector<Count> values_;
  Step step_;
  std::mutex mutex_;
};

SequenceTable& gamma_table() {
  static SequenceTable table({Count(1)}, [](int n, const std::vector<Count>& g) {
    const ChiWeights w{3};
    Count v = 0;
    for (int r = 1; r <= n; ++r) {
      const int c = w.chi(r);
      if (c != 0) v += c * binomial(n, r) * g[static_cast<std::size_t>(n - r)];
    }
    return v;
  });
  return table;
}

SequenceTable& gamma_star_table() {
  static SequenceTable table({Count(1), Count(0)}, [](int n, const std::vector<Count>& g) {
    Count v = 0;
    for (int r = 2; r <= n; ++r) {
      const int c = sign_pow(r) * ChiWeights::chi_star(r);
      if (c != 0) v += c * binomial(n, r) * g[static_cast<std::size_t>(n - r)];
    }
    return v;
  });
  return table;
}

}  // namespace

Count gamma(int n) {
  if (n < 0) throw std::domain_error("gamma: n must be nonnegative");
  return gamma_table().at(n);
}

Count gamma_star(int n) {
  if (n < 0) throw std::domain_error("gamma_star: n must be nonnegative");
  return gamma_star_table().at(n);
}

Count monotone_avoiders_by_recurrence(int n, int k) {
  if (n < 0 || k < 2) throw std::domain_error("monotone_avoiders_by_recurrence: need n >= 0, k >= 2");
  const ChiWeights w{k};
  std::vector<Count> g{Count(1)};
  for (int m = 1; m <= n; ++m) {
    Count v = 0;
    for (int r = 1; r <= m; ++r) {
      const int c = w.chi(r);
      if (c != 0) v += c * binomial(m, r) * g[static_cast<std::size_t>(m - r)];
    }
    g.push_back(v);
  }
  return g[static_cast<std::size_t>(n)];
}

Count monotone_avoiders(int n, int k, Direction direction) {
  if (n < 0 || k < 2) throw std::domain_error("monotone_avoiders: need n >= 0, k >= 2");
  if (n <= 1) return 1;
  // f[run][j]: arrangements of the first i entries, last relative rank j,
  // ending in `run` consecutive steps of the restricted kind (run <= k-2).
  const int runs = k - 1;
  const bool up = direction == Direction::Increasing;
  std::vector<std::vector<Count>> f(static_cast<std::size_t>(runs), std::vector<Count>(static_cast<std::size_t>(n), Count(0)));
  f[0][0] = 1;
  for (int i = 1; i < n; ++i) {
    std::vector<std::vector<Count>> g(static_cast<std::size_t>(runs), std::vector<Count>(static_cast<std::size_t>(n), Count(0)));
    for (int run = 0; run < runs; ++run) {
      const auto& row = f[static_cast<std::size_t>(run)];
      // below[j] = sum_{r < j} row[r] (ascent into rank j);
      // above = sum_{r >= j} row[r] (descent into rank j).
      Count total = 0;
      for (int r = 0; r < i; ++r) total += row[r];
      Count below = 0;
      for (int j = 0; j <= i; ++j) {
        const Count above = total - below;
        const Count& same = up ? below : above;   // extends the run
        const Count& other = up ? above : below;  // resets the run
        if (run + 1 < runs && same != 0) g[run + 1][j] += same;
        if (other != 0) g[0][j] += other;
        if (j < i) below += row[j];
      }
    }
    f = std::move(g);
  }
  Count total = 0;
  for (const auto& row : f)
    for (const auto& v : row) total += v;
  return total;
}

void for_each_bounded_composition_set(int n, int k, const std::function<void(const DescentSet&)>& visit) {
  if (n < 1 || n > kMaxN) throw std::domain_error("for_each_bounded_composition_set: n outside [1, 64]");
  // Parts strictly below k; set bits at partial sums short of n.
  std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t mask) {
    for (int part = 1; part < k && pos + part <= n; ++part) {
      const int next = pos + part;
      if (next == n) {
        visit(DescentSet(n, mask));
      } else {
        rec(next, mask | (std::uint64_t{1} << (next - 1)));
      }
    }
  };
  rec(0, 0);
}

void for_each_long_part_set(int n, const std::function<void(const DescentSet&)>& visit) {
  if (n < 1 || n > kMaxN) throw std::domain_error("for_each_long_part_set: n outside [1, 64]");
  std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t mask) {
    for (int part = 2; pos + part <= n; ++part) {
      const int next = pos + part;
      if (next == n) {
        visit(DescentSet(n, mask));
      } else {
        rec(next, mask | (std::uint64_t{1} << (next - 1)));
      }
    }
  };
  rec(0, 0);
}

Count avoiders_by_beta_sum(int n, int k) {
  if (n == 0) return 1;
  Count total = 0;
  for_each_bounded_composition_set(n, k, [&](const DescentSet& s) { total += beta(s); });
  return total;
}

Count gamma_star_by_beta_sum(int n) {
  if (n == 0) return 1;
  Count total = 0;
  for_each_long_part_set(n, [&](const DescentSet& s) { total += beta(s); });
  return total;
}

Count cycles_avoiding_incr3(int n) {
  if (n < 1) throw std::domain_error("cycles_avoiding_incr3: n must be positive");
  Count total = theta(n);
  for (auto d64 : divisors(n)) {
    const int d = static_cast<int>(d64);
    const int mu = mobius(d);
    if (mu == 0) continue;
    if (d % 3 == 1) total += mu * gamma(n / d);
    if (d % 3 == 2) total += mu * sign_pow(n / d) * gamma_star(n / d);
  }
  return exact_div(total, n, "cycles_avoiding_incr3");
}

Count cycles_avoiding_decr3(int n) {
  if (n < 1) throw std::domain_error("cycles_avoiding_decr3: n must be positive");
  Count total = theta_tilde(n);
  Count star = 0;
  for (auto d64 : divisors(n)) {
    const int d = static_cast<int>(d64);
    const int mu = mobius(d);
    if (mu == 0) continue;
    if (d % 3 == 1) total += mu * sign_pow(static_cast<std::int64_t>(d - 1) * (n / d)) * gamma(n / d);
    if (d % 3 == 2) star += mu * gamma_star(n / d);
  }
  total += sign_pow(n) * star;
  return exact_div(total, n, "cycles_avoiding_decr3");
}

Count cycles_avoiding_monotone(int n, int k, Direction direction) {
  if (n < 1 || k < 2) throw std::domain_error("cycles_avoiding_monotone: need n >= 1, k >= 2");
  if (n > kPatternScanCap) {
    throw CapacityError("cycles_avoiding_monotone: n above cap " + std::to_string(kPatternScanCap));
  }
  Count total = 0;
  for_each_bounded_composition_set(n, k, [&](const DescentSet& s) {
    total += beta_cyc(direction == Direction::Increasing ? s : s.complement());
  });
  return total;
}

}  // namespace cycdesc
