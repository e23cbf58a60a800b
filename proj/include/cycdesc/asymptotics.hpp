#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "cycdesc/count.hpp"
#include "cycdesc/descent_set.hpp"

namespace cycdesc {

/// Largest n accepted by the exhaustive 2^{n-1} scans.
inline constexpr int kScanCap = 24;

/// A family of subsets of [n-1] to scan.
struct Family {
  enum class Kind { AllProper, Periodic, AltThreshold };

  Kind kind = Kind::AllProper;
  int n = 1;
  int period = 0;            // Periodic
  std::vector<int> pattern;  // Periodic: residues in [period], nonempty and proper
  Rational epsilon;          // AltThreshold: 0 < epsilon < 1

  static Family all_proper(int n);
  static Family periodic(int n, int period, std::vector<int> pattern);
  static Family alt_threshold(int n, const Rational& epsilon);

  /// "all-proper", "periodic:<period>:<i,j,...>" or "alt-threshold:<decimal>".
  /// Throws std::domain_error on anything else.
  static Family parse(std::string_view spec, int n);

  /// Canonical text form, independent of n.
  std::string descriptor() const;

  bool contains(const DescentSet& set) const;
};

/// Exact decimal (e.g. "0.25", "1/4") to a rational. Denominators are capped
/// at 1000 so threshold comparisons stay cheap.
Rational parse_rational(std::string_view text);

/// alt(I) > n/2 - n^{1-epsilon}, decided exactly for rational epsilon in (0, 1).
bool alt_threshold_member(int n, int alt, const Rational& epsilon);

struct ScanReport {
  int n = 0;
  std::string family;
  Rational max_deviation;
  DescentSet argmax_set;
  Count member_count;
  std::chrono::milliseconds elapsed{0};
  int jobs = 1;
  int shards = 1;
};

/// max over the family of |n beta^cyc_n(I) / beta_n(I) - 1| with its argmax.
/// Masks are split into 2^p contiguous shards by their high bits; shard
/// maxima merge by (deviation, then lex_less on the set), so the result does
/// not depend on `jobs`. Throws std::domain_error on an empty family and
/// CapacityError above kScanCap.
ScanReport beta_deviation_scan(const Family& family, int jobs = 1);

struct AlphaScanReport {
  ScanReport scan;
  int divisor_count = 0;
  /// max deviation <= d(n) / sqrt(n), compared exactly as dev^2 * n <= d(n)^2.
  bool within_bound = false;
};

/// max over nonempty I of |n alpha^cyc_n(I) / alpha_n(I) - 1|. Requires
/// 2 <= n <= kScanCap.
AlphaScanReport alpha_deviation_scan(int n, int jobs = 1);

struct BoundReport {
  int n = 0;
  bool passed = true;
  long long checks = 0;
  std::vector<std::string> failures;  // first few witnesses
};

/// For every I in [n-1]:
///   |n beta^cyc_n(I) - beta_n(I)| <= (n/2) floor(n/2)!;
///   beta_n(I) >= beta_n({2,4,..,m}) (m = alt(I) even) or beta_n({1,3,..,m}) (odd);
///   beta_n(I) >= beta_n({2,4,..,2k}) whenever alt(I) >= 2k;
/// and once per n:
///   beta_n({2,..,2k}) >= C(n,2k) E_{2k} / 2 for 2k <= n/2;
///   beta_n({2,..,2i-2}) + beta_n({2,..,2i}) = C(n,2i) E_{2i} for 1 <= i <= (n-1)/2.
/// Requires 2 <= n <= 14.
BoundReport bound_checks(int n);

/// |{I in [n-1] : alt(I) > n/2 - n^{1-epsilon}}| / 2^{n-1}, exhaustively.
/// Requires 0 < epsilon < 1/2 and n <= kScanCap.
Rational almost_all_fraction(int n, const Rational& epsilon);

}  // namespace cycdesc
