#include "cycdesc/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <thread>

#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/number_theory.hpp"

namespace cycdesc {
namespace {

void check_scan_n(int n) {
  if (n < 1) throw std::domain_error("scan: n must be positive");
  if (n > kScanCap) throw CapacityError("scan: n=" + std::to_string(n) + " above cap 24");
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::domain_error(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

// Best (deviation, set) seen so far; larger deviation wins, ties go to the
// lexicographically smaller set.
struct Best {
  std::optional<std::pair<Rational, DescentSet>> top;
  Count members = 0;

  void offer(Rational dev, const DescentSet& set) {
    ++members;
    if (!top || dev > top->first || (dev == top->first && lex_less(set, top->second))) {
      top.emplace(std::move(dev), set);
    }
  }
  void merge(const Best& other) {
    members += other.members;
    if (other.top) {
      const auto& [dev, set] = *other.top;
      if (!top || dev > top->first || (dev == top->first && lex_less(set, top->second))) top = other.top;
    }
  }
};

template <typename Member, typename Deviation>
ScanReport sharded_scan(int n, int jobs, std::string family, Member&& member, Deviation&& deviation) {
  const auto start = std::chrono::steady_clock::now();
  jobs = std::max(1, jobs);
  const int width = n - 1;
  const int shard_bits = std::min(width, 6);
  const std::uint64_t shards = std::uint64_t{1} << shard_bits;
  const int low = width - shard_bits;

  std::vector<Best> results(shards);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) {
      Best& best = results[s];
      const std::uint64_t begin = s << low;
      const std::uint64_t end = (s + 1) << low;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const DescentSet set(n, mask);
        if (member(set)) best.offer(deviation(set), set);
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Best total;
  for (const auto& r : results) total.merge(r);
  if (!total.top) throw std::domain_error("scan: empty family " + family + " at n=" + std::to_string(n));

  ScanReport report;
  report.n = n;
  report.family = std::move(family);
  report.max_deviation = total.top->first;
  report.argmax_set = total.top->second;
  report.member_count = total.members;
  report.jobs = jobs;
  report.shards = static_cast<int>(shards);
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

Count rational_pow_check(const Count& base, long long e) {
  Count r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Family Family::all_proper(int n) {
  check_scan_n(n);
  Family f;
  f.n = n;
  return f;
}

Family Family::periodic(int n, int period, std::vector<int> pattern) {
  check_scan_n(n);
  if (period < 1) throw std::domain_error("periodic family: period must be positive");
  std::sort(pattern.begin(), pattern.end());
  if (pattern.empty() || static_cast<int>(pattern.size()) >= period ||
      std::adjacent_find(pattern.begin(), pattern.end()) != pattern.end() || pattern.front() < 1 ||
      pattern.back() > period) {
    throw std::domain_error("periodic family: pattern must be a nonempty proper subset of [period]");
  }
  Family f;
  f.kind = Kind::Periodic;
  f.n = n;
  f.period = period;
  f.pattern = std::move(pattern);
  return f;
}

Family Family::alt_threshold(int n, const Rational& epsilon) {
  check_scan_n(n);
  if (epsilon <= 0 || epsilon >= 1) throw std::domain_error("alt-threshold: epsilon must lie in (0, 1)");
  Family f;
  f.kind = Kind::AltThreshold;
  f.n = n;
  f.epsilon = epsilon;
  return f;
}

Family Family::parse(std::string_view spec, int n) {
  if (spec == "all-proper") return all_proper(n);
  constexpr std::string_view periodic_prefix = "periodic:";
  constexpr std::string_view alt_prefix = "alt-threshold:";
  if (spec.starts_with(periodic_prefix)) {
    spec.remove_prefix(periodic_prefix.size());
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw std::domain_error("periodic family needs period:pattern");
    const int period = parse_int(spec.substr(0, colon), "period");
    std::vector<int> pattern;
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      pattern.push_back(parse_int(rest.substr(0, comma), "pattern element"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return periodic(n, period, std::move(pattern));
  }
  if (spec.starts_with(alt_prefix)) {
    spec.remove_prefix(alt_prefix.size());
    return alt_threshold(n, parse_rational(spec));
  }
  throw std::domain_error("unknown family '" + std::string(spec) + "'");
}

std::string Family::descriptor() const {
  switch (kind) {
    case Kind::AllProper: return "all-proper";
    case Kind::Periodic: {
      std::string s = "periodic:" + std::to_string(period) + ":";
      for (std::size_t i = 0; i < pattern.size(); ++i) s += (i ? "," : "") + std::to_string(pattern[i]);
      return s;
    }
    case Kind::AltThreshold:
      return "alt-threshold:" + numerator(epsilon).str() + "/" + denominator(epsilon).str();
  }
  return "unknown";
}

bool Family::contains(const DescentSet& set) const {
  switch (kind) {
    case Kind::AllProper:
      return !set.empty() && set != DescentSet::full(set.n());
    case Kind::Periodic:
      for (int i = 1; i < set.n(); ++i) {
        const int residue = (i - 1) % period + 1;
        const bool in_pattern = std::binary_search(pattern.begin(), pattern.end(), residue);
        if (in_pattern != set.contains(i)) return false;
      }
      return true;
    case Kind::AltThreshold:
      return alt_threshold_member(set.n(), alternation(set).count, epsilon);
  }
  return false;
}

Rational parse_rational(std::string_view text) {
  if (text.starts_with('-')) {
    text.remove_prefix(1);
    if (text.starts_with('-')) throw std::domain_error("malformed number");
    return -parse_rational(text);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const int num = parse_int(text.substr(0, slash), "numerator");
    const int den = parse_int(text.substr(slash + 1), "denominator");
    if (den <= 0) throw std::domain_error("rational: denominator must be positive");
    value = Rational(num, den);
  } else {
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::domain_error("malformed number '" + std::string(text) + "'");
    if (frac.size() > 6) throw std::domain_error("rational: too many decimal digits");
    const int w = whole.empty() ? 0 : parse_int(whole, "number");
    const int f = frac.empty() ? 0 : parse_int(frac, "number");
    if (frac.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::domain_error("malformed number '" + std::string(text) + "'");
    }
    int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(w * scale + f, scale);
  }
  if (denominator(value) > 1000) throw std::domain_error("rational: denominator above 1000");
  return value;
}

bool alt_threshold_member(int n, int alt, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw std::domain_error("alt threshold: epsilon must lie in (0, 1)");
  // alt > n/2 - n^{1-eps}  <=>  n^{(q-p)/q} > (n - 2 alt) / 2 with eps = p/q.
  const long long t2 = static_cast<long long>(n) - 2LL * alt;
  if (t2 < 0) return true;
  const long long p = numerator(epsilon).convert_to<long long>();
  const long long q = denominator(epsilon).convert_to<long long>();
  const Count lhs = rational_pow_check(Count(n), q - p) * rational_pow_check(Count(2), q);
  const Count rhs = rational_pow_check(Count(t2), q);
  return lhs > rhs;
}

ScanReport beta_deviation_scan(const Family& family, int jobs) {
  const int n = family.n;
  check_scan_n(n);
  return sharded_scan(
      n, jobs, family.descriptor(), [&](const DescentSet& s) { return family.contains(s); },
      [n](const DescentSet& s) {
        const Count b = beta(s);
        const Count diff = n * beta_cyc(s) - b;
        return Rational(abs(diff), b);
      });
}

AlphaScanReport alpha_deviation_scan(int n, int jobs) {
  check_scan_n(n);
  if (n < 2) throw std::domain_error("alpha_deviation_scan: need n >= 2");
  AlphaScanReport out;
  out.scan = sharded_scan(
      n, jobs, "nonempty", [](const DescentSet& s) { return !s.empty(); },
      [n](const DescentSet& s) {
        const Count a = alpha(s);
        const Count diff = n * alpha_cyc(s) - a;
        return Rational(abs(diff), a);
      });
  out.divisor_count = divisor_count(n);
  const Rational lhs = out.scan.max_deviation * out.scan.max_deviation * n;
  out.within_bound = lhs <= Rational(out.divisor_count * out.divisor_count);
  return out;
}

BoundReport bound_checks(int n) {
  if (n < 2 || n > 14) throw std::domain_error("bound_checks: need 2 <= n <= 14");
  BoundReport report;
  report.n = n;
  auto fail = [&](std::string msg) {
    report.passed = false;
    if (report.failures.size() < 10) report.failures.push_back(std::move(msg));
  };

  auto evens_up_to = [n](int top) {
    std::uint64_t mask = 0;
    for (int i = 2; i <= top; i += 2) mask |= std::uint64_t{1} << (i - 1);
    return DescentSet(n, mask);
  };
  auto odds_up_to = [n](int top) {
    std::uint64_t mask = 0;
    for (int i = 1; i <= top; i += 2) mask |= std::uint64_t{1} << (i - 1);
    return DescentSet(n, mask);
  };

  // beta_n({2,4,...,2k}) for 2k <= n-1.
  std::vector<Count> even_prefix;
  for (int k = 0; 2 * k <= n - 1; ++k) even_prefix.push_back(beta(evens_up_to(2 * k)));

  const Count bound_twice = n * factorial(n / 2);  // 2 * (n/2) floor(n/2)!
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const DescentSet set(n, mask);
    const Count b = beta(set);
    const Count bc = beta_cyc(set);
    Count diff = n * bc - b;
    if (diff < 0) diff = -diff;
    ++report.checks;
    if (2 * diff > bound_twice) fail("cycle bound fails at I={" + set.to_string() + "}");

    const int m = alternation(set).count;
    const DescentSet ref = (m % 2 == 0) ? evens_up_to(m) : odds_up_to(m);
    ++report.checks;
    if (b < beta(ref)) fail("alternation minimizer fails at I={" + set.to_string() + "}");

    for (int k = 0; 2 * k <= m; ++k) {
      ++report.checks;
      if (b < even_prefix[static_cast<std::size_t>(k)]) {
        fail("2k minorization fails at I={" + set.to_string() + "} k=" + std::to_string(k));
      }
    }
  }

  for (int k = 0; 4 * k <= n; ++k) {
    ++report.checks;
    if (2 * even_prefix[static_cast<std::size_t>(k)] < binomial(n, 2 * k) * euler_zigzag(2 * k)) {
      fail("Euler half-binomial bound fails at k=" + std::to_string(k));
    }
  }
  for (int i = 1; 2 * i <= n - 1; ++i) {
    ++report.checks;
    const Count lhs = even_prefix[static_cast<std::size_t>(i - 1)] + even_prefix[static_cast<std::size_t>(i)];
    if (lhs != binomial(n, 2 * i) * euler_zigzag(2 * i)) {
      fail("alternating prefix identity fails at i=" + std::to_string(i));
    }
  }
  return report;
}

Rational almost_all_fraction(int n, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= Rational(1, 2)) {
    throw std::domain_error("almost_all_fraction: epsilon must lie in (0, 1/2)");
  }
  check_scan_n(n);
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  // Membership only depends on alt(I); decide each value once.
  std::vector<char> qualifies(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) qualifies[static_cast<std::size_t>(a)] = alt_threshold_member(n, a, epsilon);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    count += qualifies[static_cast<std::size_t>(alternation(DescentSet(n, mask)).count)];
  }
  return Rational(Count(count), Count(subsets));
}

}  // namespace cycdesc
