#include "cycdesc/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cycdesc/errors.hpp"

namespace cycdesc::oracle {
namespace {

void check_perm_n(int n) {
  if (n < 1 || n > kMaxPermutationN) {
    throw CapacityError("oracle: n=" + std::to_string(n) + " outside [1, 10]");
  }
}

std::uint64_t descent_mask(const std::vector<int>& p) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<int> lengths;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(p[i] - 1)) {
      seen[i] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

PermRecord make_record(const std::vector<int>& p) {
  PermRecord r;
  r.one_line = p;
  r.descents = DescentSet(static_cast<int>(p.size()), descent_mask(p));
  r.cycle_type = Partition(cycle_lengths(p));
  r.is_n_cycle = r.cycle_type.parts().size() == 1;
  return r;
}

}  // namespace

PermutationStream::PermutationStream(int n) : n_(n) {
  check_perm_n(n);
  perm_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i + 1;
}

bool PermutationStream::next() {
  if (!started_) {
    started_ = true;
  } else if (!std::next_permutation(perm_.begin(), perm_.end())) {
    return false;
  }
  fill();
  return true;
}

void PermutationStream::fill() { record_ = make_record(perm_); }

void enumerate(int n, const std::function<void(const PermRecord&)>& visit, int first) {
  check_perm_n(n);
  if (first < 0 || first > n) throw std::domain_error("enumerate: first entry out of range");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  if (first == 0) {
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    do visit(make_record(p));
    while (std::next_permutation(p.begin(), p.end()));
    return;
  }
  do {
    p[0] = first;
    std::copy(rest.begin(), rest.end(), p.begin() + 1);
    visit(make_record(p));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

Count CountTable::at(std::uint64_t mask) const {
  const auto it = values.find(mask);
  return it == values.end() ? Count(0) : it->second;
}

Count CountTable::total() const {
  Count t = 0;
  for (const auto& [mask, v] : values) t += v;
  return t;
}

BruteTables brute_tables(int n, int jobs) {
  check_perm_n(n);
  jobs = std::clamp(jobs, 1, n);
  const std::size_t subsets = std::size_t{1} << (n - 1);
  const std::vector<Partition> types = [&] {
    // Every cycle type of S_n, found by walking partitions of n directly.
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
  }();
  std::map<std::vector<int>, std::size_t> type_index;
  for (std::size_t t = 0; t < types.size(); ++t) type_index[types[t].parts()] = t;

  struct Tally {
    std::vector<std::uint64_t> all, cyc;
    std::vector<std::vector<std::uint64_t>> by_type;
  };
  std::vector<Tally> shards(static_cast<std::size_t>(n));
  auto run_shard = [&](int first) {
    Tally& t = shards[static_cast<std::size_t>(first - 1)];
    t.all.assign(subsets, 0);
    t.cyc.assign(subsets, 0);
    t.by_type.assign(types.size(), std::vector<std::uint64_t>(subsets, 0));
    enumerate(n, [&](const PermRecord& r) {
      const std::uint64_t m = r.descents.mask();
      ++t.all[m];
      if (r.is_n_cycle) ++t.cyc[m];
      ++t.by_type[type_index.at(r.cycle_type.parts())][m];
    }, first);
  };
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (int first = w + 1; first <= n; first += jobs) run_shard(first);
    });
  }
  for (auto& th : workers) th.join();

  BruteTables out;
  out.beta = {"beta", n, {}};
  out.beta_cyc = {"beta_cyc", n, {}};
  for (const auto& p : types) out.by_type[p] = {"beta_type_" + p.to_string(), n, {}};
  for (std::size_t m = 0; m < subsets; ++m) {
    std::uint64_t a = 0, c = 0;
    std::vector<std::uint64_t> bt(types.size(), 0);
    for (const auto& s : shards) {
      a += s.all[m];
      c += s.cyc[m];
      for (std::size_t t = 0; t < types.size(); ++t) bt[t] += s.by_type[t][m];
    }
    out.beta.values[m] = a;
    out.beta_cyc.values[m] = c;
    for (std::size_t t = 0; t < types.size(); ++t) out.by_type[types[t]].values[m] = bt[t];
  }
  return out;
}

Count brute_avoiders(int n, int k, Direction direction, bool cyclic_only, bool ascent_boundary) {
  check_perm_n(n);
  if (k < 2) throw std::domain_error("brute_avoiders: k must be at least 2");
  std::uint64_t count = 0;
  enumerate(n, [&](const PermRecord& r) {
    if (cyclic_only && !r.is_n_cycle) return;
    const auto& p = r.one_line;
    int run = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const bool step = direction == Direction::Increasing ? p[i] < p[i + 1] : p[i] > p[i + 1];
      run = step ? run + 1 : 0;
      if (run >= k - 1) return;
    }
    if (ascent_boundary) {
      if (p.size() < 2) return;
      if (!(p[0] < p[1]) || !(p[p.size() - 2] < p[p.size() - 1])) return;
    }
    ++count;
  });
  return count;
}

bool is_lyndon(const Word& word) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  for (std::size_t s = 1; s < n; ++s) {
    Word rotated(word.begin() + static_cast<std::ptrdiff_t>(s), word.end());
    rotated.insert(rotated.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(s));
    if (!(word < rotated)) return false;
  }
  return true;
}

std::vector<Word> factorize(const Word& word) {
  std::vector<Word> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t best = 1;
    for (std::size_t len = word.size() - pos; len >= 1; --len) {
      const Word prefix(word.begin() + static_cast<std::ptrdiff_t>(pos),
                        word.begin() + static_cast<std::ptrdiff_t>(pos + len));
      if (is_lyndon(prefix)) {
        best = len;
        break;
      }
    }
    out.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(pos),
                     word.begin() + static_cast<std::ptrdiff_t>(pos + best));
    pos += best;
  }
  return out;
}

namespace {

template <typename Visit>
void for_each_word(int n, int alphabet, Visit&& visit) {
  if (n < 1 || alphabet < 1) throw std::domain_error("word enumeration: need n, alphabet >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= alphabet;
    if (total > kMaxWords) throw CapacityError("word enumeration: alphabet^n exceeds 10^7");
  }
  Word w(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == alphabet) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
}

}  // namespace

std::map<WordKey, Count> brute_words(int n, int alphabet) {
  std::map<WordKey, std::uint64_t> tally;
  for_each_word(n, alphabet, [&](const Word& w) {
    std::vector<int> lengths;
    for (const auto& f : factorize(w)) lengths.push_back(static_cast<int>(f.size()));
    Evaluation ev(static_cast<std::size_t>(alphabet), 0);
    for (int letter : w) ++ev[static_cast<std::size_t>(letter - 1)];
    while (!ev.empty() && ev.back() == 0) ev.pop_back();
    ++tally[{Partition(std::move(lengths)), std::move(ev)}];
  });
  std::map<WordKey, Count> out;
  for (auto& [key, v] : tally) out.emplace(key, Count(v));
  return out;
}

Count brute_primitive_words(int n, int alphabet) {
  std::uint64_t count = 0;
  for_each_word(n, alphabet, [&](const Word& w) {
    for (int s = 1; s < n; ++s) {
      bool same = true;
      for (int i = 0; i < n && same; ++i) {
        same = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>((i + s) % n)];
      }
      if (same) return;
    }
    ++count;
  });
  return count;
}

std::string to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "mask,set,count\n";
  for (const auto& [mask, value] : table.values) {
    out << mask << ",\"" << DescentSet(table.n, mask).to_string() << "\"," << value.str() << '\n';
  }
  return out.str();
}

std::vector<std::pair<std::string, std::string>> golden_files(int max_n) {
  std::vector<std::pair<std::string, std::string>> files;
  for (int n = 1; n <= max_n; ++n) {
    const BruteTables t = brute_tables(n);
    files.emplace_back("beta_n" + std::to_string(n) + ".csv", to_csv(t.beta));
    files.emplace_back("beta_cyc_n" + std::to_string(n) + ".csv", to_csv(t.beta_cyc));
  }
  return files;
}

void write_golden(const std::filesystem::path& dir, int max_n) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, body] : golden_files(max_n)) {
    std::ofstream f(dir / name, std::ios::binary);
    f << body;
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
  }
}

std::vector<std::string> check_golden(const std::filesystem::path& dir, int max_n) {
  std::vector<std::string> bad;
  for (const auto& [name, body] : golden_files(max_n)) {
    std::ifstream f(dir / name, std::ios::binary);
    if (!f) {
      bad.push_back(name);
      continue;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    if (ss.str() != body) bad.push_back(name);
  }
  return bad;
}

}  // namespace cycdesc::oracle
