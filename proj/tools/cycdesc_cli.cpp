// cycdesc: exact descent-set counts for permutations and n-cycles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycdesc/asymptotics.hpp"
#include "cycdesc/consec_patterns.hpp"
#include "cycdesc/cyclic_counts.hpp"
#include "cycdesc/errors.hpp"
#include "cycdesc/linear_counts.hpp"
#include "cycdesc/lyndon.hpp"
#include "cycdesc/oracle.hpp"
#include "cycdesc/verify.hpp"

using nlohmann::ordered_json;
using namespace cycdesc;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError(std::string("malformed ") + what + " '" + text + "'");
    out.push_back(v);
  }
  if (text.back() == ',') throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  return out;
}

std::string approx(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r.convert_to<double>());
  return buf;
}

std::string rational_text(const Rational& r) { return numerator(r).str() + "/" + denominator(r).str(); }

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  std::string statistic;
  std::optional<int> n;
  std::string set;
  std::optional<int> k;
  std::string lambda;
  std::string mu;
  bool exact = false;
  std::string format = "plain";
  std::size_t cache_entries = BetaEngine::kDefaultCacheEntries;
};

const std::vector<std::string> kStatistics = {
    "alpha",   "beta",       "alpha-cyc",        "beta-cyc",         "eulerian",     "eulerian-cyc",
    "euler",   "euler-k",    "alt-cycles",       "kz-cycles",        "gamma",        "gamma-star",
    "cycles-avoid-123",      "cycles-avoid-321", "lyndon-count",     "type-descent-count"};

int need(const std::optional<int>& v, const char* flag, const std::string& statistic) {
  if (!v) throw UsageError(statistic + " requires " + flag);
  return *v;
}

int run_compute(const ComputeArgs& a) {
  const std::string& s = a.statistic;
  ordered_json args = ordered_json::object();
  Count value;
  int n = 0;

  if (s == "alpha" || s == "beta" || s == "alpha-cyc" || s == "beta-cyc") {
    n = need(a.n, "--n", s);
    const auto set = DescentSet::parse(n, a.set);
    args["set"] = set.to_string();
    const BetaEngine engine(BetaStrategy::DP, a.cache_entries);
    if (s == "alpha") value = alpha(set);
    if (s == "beta") value = engine.beta(set);
    if (s == "alpha-cyc") value = alpha_cyc(set, engine);
    if (s == "beta-cyc") value = beta_cyc(set, engine);
  } else if (s == "eulerian" || s == "eulerian-cyc" || s == "euler-k" || s == "kz-cycles") {
    n = need(a.n, "--n", s);
    const int k = need(a.k, "--k", s);
    args["k"] = k;
    if (s == "eulerian") value = eulerian(n, k);
    if (s == "eulerian-cyc") value = cyclic_eulerian(n, k);
    if (s == "euler-k") value = generalized_euler(n, k);
    if (s == "kz-cycles") value = kz_cycles(n, k);
  } else if (s == "euler" || s == "alt-cycles" || s == "gamma" || s == "gamma-star" || s == "cycles-avoid-123" ||
             s == "cycles-avoid-321") {
    n = need(a.n, "--n", s);
    if (n < 0) throw std::domain_error("n must be nonnegative");
    if (s == "euler") value = euler_zigzag(n);
    if (s == "alt-cycles") value = alternating_cycles(n);
    if (s == "gamma") value = gamma(n);
    if (s == "gamma-star") value = gamma_star(n);
    if (s == "cycles-avoid-123") value = cycles_avoiding_incr3(n);
    if (s == "cycles-avoid-321") value = cycles_avoiding_decr3(n);
  } else if (s == "lyndon-count") {
    const Evaluation mu = parse_int_list(a.mu, "--mu");
    if (mu.empty()) throw UsageError("lyndon-count requires --mu");
    int total = 0;
    for (int m : mu) total += m;
    n = a.n.value_or(total);
    args["mu"] = a.mu;
    value = count_lyndon(n, mu);
  } else if (s == "type-descent-count") {
    const auto parts = parse_int_list(a.lambda, "--lambda");
    if (parts.empty()) throw UsageError("type-descent-count requires --lambda");
    const Partition lambda(parts);
    n = lambda.n();
    if (a.n && *a.n != n) throw std::domain_error("--n does not match the size of --lambda");
    const auto set = DescentSet::parse(n, a.set);
    args["lambda"] = lambda.to_string();
    args["set"] = set.to_string();
    args["exact"] = a.exact;
    value = count_by_type_and_descents(lambda, set, a.exact);
  } else {
    throw UsageError("unknown statistic '" + s + "'");
  }

  if (a.format == "json") {
    ordered_json doc;
    doc["statistic"] = s;
    doc["n"] = n;
    doc["args"] = args;
    doc["value"] = value.str();
    std::cout << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "statistic,n,value\n" << s << "," << n << "," << value.str() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& suite, int max_n, const std::string& format) {
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    if (max_n < 1) throw UsageError("--max-n must be positive");
    reports = run_all(max_n);
  } else {
    const auto& names = verify_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
    if (max_n < 1 || max_n > verify_cap(suite)) {
      throw UsageError("--max-n for " + suite + " must lie in [1, " + std::to_string(verify_cap(suite)) + "]");
    }
    reports.push_back(run_suite(suite, max_n));
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;

  if (format == "json") {
    ordered_json doc;
    doc["passed"] = ok;
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json item;
      item["suite"] = r.suite;
      item["max_n"] = r.max_n;
      item["checks"] = r.checks;
      item["passed"] = r.passed;
      item["first_failure"] = r.first_failure;
      doc["reports"].push_back(item);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " max_n=" << r.max_n << " checks=" << r.checks;
      if (!r.passed) std::cout << " first_failure: " << r.first_failure;
      std::cout << "\n";
    }
  }
  return ok ? 0 : kExitFailure;
}

// ---------------------------------------------------------------- scan

std::vector<int> parse_range(const std::string& text) {
  const auto parts = parse_int_list([&] {
    std::string t = text;
    std::replace(t.begin(), t.end(), ':', ',');
    return t;
  }(), "--n-range");
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("--n-range expects a:b or a:b:step");
  const int step = parts.size() == 3 ? parts[2] : 1;
  if (step < 1 || parts[0] > parts[1]) throw UsageError("--n-range needs a <= b and step >= 1");
  std::vector<int> out;
  for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
  return out;
}

int run_scan(const std::string& family_spec, std::optional<int> n, const std::string& range, int jobs,
             const std::string& format, bool timing) {
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  if (n.has_value() == !range.empty()) throw UsageError("give exactly one of --n and --n-range");
  const std::vector<int> sizes = n ? std::vector<int>{*n} : parse_range(range);

  std::vector<Family> families;
  try {
    for (int size : sizes) families.push_back(Family::parse(family_spec, size));
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }

  ordered_json doc;
  doc["reports"] = ordered_json::array();
  if (format == "csv") std::cout << "n,family,max_deviation_num,max_deviation_den,argmax_set,member_count\n";

  for (const auto& family : families) {
    const ScanReport r = beta_deviation_scan(family, jobs);
    std::optional<Rational> fraction;
    if (family.kind == Family::Kind::AltThreshold && family.epsilon < Rational(1, 2)) {
      fraction = almost_all_fraction(family.n, family.epsilon);
    }
    if (format == "json") {
      ordered_json item;
      item["n"] = r.n;
      item["family"] = r.family;
      item["max_deviation_num"] = numerator(r.max_deviation).str();
      item["max_deviation_den"] = denominator(r.max_deviation).str();
      item["max_deviation_approx"] = approx(r.max_deviation);
      item["argmax_set"] = r.argmax_set.to_string();
      item["member_count"] = r.member_count.str();
      if (fraction) {
        item["member_fraction_num"] = numerator(*fraction).str();
        item["member_fraction_den"] = denominator(*fraction).str();
      }
      if (timing) item["elapsed_ms"] = r.elapsed.count();
      doc["reports"].push_back(item);
    } else if (format == "csv") {
      std::cout << r.n << "," << r.family << "," << numerator(r.max_deviation) << "," << denominator(r.max_deviation)
                << ",\"" << r.argmax_set.to_string() << "\"," << r.member_count << "\n";
    } else {
      std::cout << "n=" << r.n << " family=" << r.family << " max_deviation=" << rational_text(r.max_deviation)
                << " (~" << approx(r.max_deviation) << ") argmax={" << r.argmax_set.to_string()
                << "} members=" << r.member_count;
      if (fraction) std::cout << " fraction=" << rational_text(*fraction);
      if (timing) std::cout << " elapsed_ms=" << r.elapsed.count();
      std::cout << "\n";
    }
  }
  if (format == "json") std::cout << doc.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- sequence

const std::vector<std::string> kSequences = {"alt-cycles", "cycles-avoid-123", "cycles-avoid-321", "gamma",
                                             "gamma-star", "euler",            "eulerian-cyc-row"};

int run_sequence(const std::string& name, int max_n, const std::string& format) {
  if (std::find(kSequences.begin(), kSequences.end(), name) == kSequences.end()) {
    throw UsageError("unknown sequence '" + name + "'");
  }
  if (max_n < 1) throw UsageError("--max-n must be positive");

  std::vector<std::pair<int, Count>> rows;
  const bool by_k = name == "eulerian-cyc-row";
  for (int i = 1; i <= max_n; ++i) {
    Count v;
    if (by_k) v = cyclic_eulerian(max_n, i);
    else if (name == "alt-cycles") v = alternating_cycles(i);
    else if (name == "cycles-avoid-123") v = cycles_avoiding_incr3(i);
    else if (name == "cycles-avoid-321") v = cycles_avoiding_decr3(i);
    else if (name == "gamma") v = gamma(i);
    else if (name == "gamma-star") v = gamma_star(i);
    else v = euler_zigzag(i);
    rows.emplace_back(i, v);
  }

  const char* index = by_k ? "k" : "n";
  if (format == "json") {
    ordered_json doc;
    doc["sequence"] = name;
    doc["max_n"] = max_n;
    doc["index"] = index;
    doc["rows"] = ordered_json::array();
    for (const auto& [i, v] : rows) doc["rows"].push_back({{index, i}, {"value", v.str()}});
    std::cout << doc.dump(2) << "\n";
  } else {
    const char* sep = format == "csv" ? "," : ", ";
    if (format == "csv") std::cout << index << ",value\n";
    for (const auto& [i, v] : rows) std::cout << i << sep << v << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- golden

int run_golden(const std::string& dir, int max_n, bool bless) {
  if (max_n < 1 || max_n > oracle::kMaxPermutationN) throw UsageError("--max-n must lie in [1, 10]");
  if (bless) {
    oracle::write_golden(dir, max_n);
    std::cout << "wrote " << 2 * max_n << " golden files to " << dir << "\n";
    return 0;
  }
  const auto stale = oracle::check_golden(dir, max_n);
  for (const auto& name : stale) std::cout << "MISMATCH " << name << "\n";
  if (stale.empty()) std::cout << "golden files match (" << 2 * max_n << " files)\n";
  return stale.empty() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact descent-set statistics of permutations and n-cycles"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate one statistic exactly");
  c->add_option("statistic", compute.statistic, "Statistic name")->required()->check(CLI::IsMember(kStatistics));
  c->add_option("--n", compute.n, "Ambient size n");
  c->add_option("--set", compute.set, "Descent set, ascending and comma separated (\"\" is empty)");
  c->add_option("--k", compute.k, "Eulerian index, period k, or similar");
  c->add_option("--lambda", compute.lambda, "Cycle type, comma separated");
  c->add_option("--mu", compute.mu, "Evaluation (letter multiplicities), comma separated");
  c->add_flag("--exact", compute.exact, "type-descent-count: descent set equal to --set instead of contained in it");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"plain", "json", "csv"}));
  c->add_option("--cache-entries", compute.cache_entries, "Beta cache size (0 disables)");

  std::string suite;
  int verify_max_n = 9;
  std::string verify_format = "plain";
  auto* v = app.add_subcommand("verify", "Run an exhaustive self-check suite");
  std::vector<std::string> suite_names{"all"};
  for (auto s : verify_suites()) suite_names.emplace_back(s);
  v->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names));
  v->add_option("--max-n", verify_max_n);
  v->add_option("--format", verify_format)->check(CLI::IsMember({"plain", "json"}));

  std::string family;
  std::optional<int> scan_n;
  std::string scan_range;
  int jobs = 1;
  std::string scan_format = "plain";
  bool timing = false;
  auto* s = app.add_subcommand("scan", "Exact deviation scan |n beta^cyc / beta - 1| over a family");
  s->add_option("--family", family, "all-proper | periodic:<l>:<i,j,..> | alt-threshold:<eps>")->required();
  s->add_option("--n", scan_n);
  s->add_option("--n-range", scan_range, "a:b[:step]");
  s->add_option("--jobs", jobs);
  s->add_option("--format", scan_format)->check(CLI::IsMember({"plain", "json", "csv"}));
  s->add_flag("--timing", timing, "Include wall-clock time (output is then no longer reproducible)");

  std::string seq_name;
  int seq_max_n = 10;
  std::string seq_format = "plain";
  auto* q = app.add_subcommand("sequence", "Print a sequence for n = 1..max_n");
  q->add_option("name", seq_name)->required()->check(CLI::IsMember(kSequences));
  q->add_option("--max-n", seq_max_n);
  q->add_option("--format", seq_format)->check(CLI::IsMember({"plain", "json", "csv"}));

  std::string golden_dir = "golden";
  int golden_max_n = 8;
  bool bless = false;
  auto* g = app.add_subcommand("golden", "Compare (or with --bless, regenerate) golden CSV tables");
  g->add_option("--dir", golden_dir);
  g->add_option("--max-n", golden_max_n);
  g->add_flag("--bless", bless);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*v) return run_verify(suite, verify_max_n, verify_format);
    if (*s) return run_scan(family, scan_n, scan_range, jobs, scan_format, timing);
    if (*q) return run_sequence(seq_name, seq_max_n, seq_format);
    if (*g) return run_golden(golden_dir, golden_max_n, bless);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
