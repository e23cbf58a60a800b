#pragma once

#include <cstdint>
#include <functional>

#include "cycdesc/count.hpp"
#include "cycdesc/descent_set.hpp"

namespace cycdesc {

enum class Direction { Increasing, Decreasing };

/// Signed weights attached to part sizes of compositions.
///   chi(r)      =  1 if r = 1 mod k, -1 if r = 0 mod k, else 0;
///   chi_star(r) =  1 if r = 2 mod 3, -1 if r = 0 mod 3, else 0.
struct ChiWeights {
  int k = 3;

  int chi(int r) const;
  static int chi_star(int r);
};

/// theta(n): 1 if n = 3^a, -2 if n = 2*3^a, else 0 (a >= 1 throughout).
int theta(int n);
/// theta~(n): 1 if n = 3^a (a >= 1), else 0.
int theta_tilde(int n);

/// Largest n accepted by the cycle sums over G_n.
inline constexpr int kPatternScanCap = 24;

/// gamma_n: permutations of [n] without two consecutive ascents, from
///   gamma_n = sum_{r >= 1} chi(r) C(n, r) gamma_{n-r},  gamma_0 = 1.
Count gamma(int n);

/// gamma*_n: permutations of [n] avoiding consecutive 321 that begin and end
/// with an ascent, from
///   gamma*_n = sum_{r >= 2} (-1)^r chi*(r) C(n, r) gamma*_{n-r},
/// gamma*_0 = 1, gamma*_1 = 0.
Count gamma_star(int n);

/// Same recurrence as gamma() for a general pattern length k >= 2.
Count monotone_avoiders_by_recurrence(int n, int k);

/// Permutations with no k-1 consecutive ascents (Increasing) or descents
/// (Decreasing), by a relative-rank DP that also tracks the current run.
Count monotone_avoiders(int n, int k, Direction direction);

/// Calls visit for every I in G_n (all parts of co(I) below k). Depth-first
/// over compositions, so the cost is proportional to |G_n|.
void for_each_bounded_composition_set(int n, int k, const std::function<void(const DescentSet&)>& visit);

/// Same for G*_n (all parts of co(I) at least 2).
void for_each_long_part_set(int n, const std::function<void(const DescentSet&)>& visit);

/// sum_{I in G_n} beta_n(I) and sum_{I in G*_n} beta_n(I).
Count avoiders_by_beta_sum(int n, int k);
Count gamma_star_by_beta_sum(int n);

/// n-cycles with no two consecutive ascents:
///   (1/n) [theta(n) + sum_{d = 1 (3)} mu(d) gamma_{n/d}
///                   + sum_{d = 2 (3)} mu(d) (-1)^{n/d} gamma*_{n/d}].
Count cycles_avoiding_incr3(int n);

/// n-cycles with no two consecutive descents:
///   (1/n) [theta~(n) + sum_{d = 1 (3)} mu(d) (-1)^{(d-1)n/d} gamma_{n/d}
///                    + (-1)^n sum_{d = 2 (3)} mu(d) gamma*_{n/d}].
Count cycles_avoiding_decr3(int n);

/// n-cycles avoiding the monotone consecutive pattern of length k, as
/// sum beta^cyc_n(I) over I in G_n (Increasing) or over complements of G_n
/// members (Decreasing). Throws CapacityError for n > kPatternScanCap.
Count cycles_avoiding_monotone(int n, int k, Direction direction);

}  // namespace cycdesc
