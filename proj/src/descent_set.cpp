#include "cycdesc/descent_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cycdesc {
namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN) {
    throw std::domain_error("ambient size n=" + std::to_string(n) + " outside [1, 64]");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

DescentSet::DescentSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_n(n);
  if ((mask & ~low_bits(n - 1)) != 0) {
    throw std::domain_error("mask has elements outside [n-1] for n=" + std::to_string(n));
  }
}

DescentSet DescentSet::from_elements(int n, std::span<const int> elements) {
  check_n(n);
  std::uint64_t mask = 0;
  for (int i : elements) {
    if (i < 1 || i > n - 1) {
      throw std::domain_error("element " + std::to_string(i) + " outside [1, " +
                              std::to_string(n - 1) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (mask & bit) throw std::domain_error("duplicate element " + std::to_string(i));
    mask |= bit;
  }
  return DescentSet(n, mask);
}

DescentSet DescentSet::from_elements(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

DescentSet DescentSet::full(int n) {
  check_n(n);
  return DescentSet(n, low_bits(n - 1));
}

DescentSet DescentSet::multiples(int n, int k) {
  check_n(n);
  if (k < 1) throw std::domain_error("multiples: k must be positive");
  std::uint64_t mask = 0;
  for (int i = k; i < n; i += k) mask |= std::uint64_t{1} << (i - 1);
  return DescentSet(n, mask);
}

DescentSet DescentSet::parse(int n, std::string_view text) {
  check_n(n);
  std::vector<int> elems;
  text = trim(text);
  if (text.empty()) return DescentSet(n, 0);
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::domain_error("malformed set element '" + std::string(token) + "'");
    }
    if (!elems.empty() && value <= elems.back()) {
      throw std::domain_error("set elements must be strictly ascending");
    }
    elems.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_elements(n, elems);
}

int DescentSet::size() const { return std::popcount(mask_); }

std::vector<int> DescentSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

DescentSet DescentSet::complement() const {
  return DescentSet(n_, ~mask_ & low_bits(n_ - 1));
}

DescentSet DescentSet::reversed() const {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m) + 1;
    out |= std::uint64_t{1} << (n_ - i - 1);
  }
  return DescentSet(n_, out);
}

DescentSet DescentSet::with(int i) const {
  if (i < 1 || i > n_ - 1) throw std::domain_error("with: element outside [n-1]");
  return DescentSet(n_, mask_ | (std::uint64_t{1} << (i - 1)));
}

DescentSet DescentSet::lifted(int m) const {
  if (m < n_) throw std::domain_error("lifted: target ambient size is smaller");
  return DescentSet(m, mask_);
}

std::string DescentSet::to_string() const {
  std::string out;
  for (int i : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

int descent_gcd(const DescentSet& set) {
  int g = set.n();
  for (int i : set.elements()) g = std::gcd(g, i);
  return g;
}

DescentSet subset_quotient(const DescentSet& set, int d) {
  if (d < 1 || set.n() % d != 0) {
    throw std::domain_error("subset_quotient: " + std::to_string(d) + " does not divide n=" +
                            std::to_string(set.n()));
  }
  if (d == 1) return set;
  std::uint64_t out = 0;
  for (int i = d; i < set.n(); i += d) {
    if (set.contains(i)) out |= std::uint64_t{1} << (i / d - 1);
  }
  return DescentSet(set.n() / d, out);
}

bool lex_less(const DescentSet& a, const DescentSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::domain_error("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::domain_error("composition parts must be positive");
    n_ += p;
  }
}

Composition::Composition(std::vector<int> parts, int declared_n) : Composition(std::move(parts)) {
  if (n_ != declared_n) {
    throw std::domain_error("composition parts sum to " + std::to_string(n_) + ", declared n=" +
                            std::to_string(declared_n));
  }
}

Composition Composition::quotient(int d) const {
  if (d < 1) throw std::domain_error("quotient: d must be positive");
  std::vector<int> out;
  out.reserve(parts_.size());
  for (int p : parts_) {
    if (p % d != 0) throw std::domain_error("quotient: part not divisible by d");
    out.push_back(p / d);
  }
  return Composition(std::move(out));
}

Composition composition_of(const DescentSet& set) {
  std::vector<int> parts;
  int prev = 0;
  for (int i : set.elements()) {
    parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(set.n() - prev);
  return Composition(std::move(parts), set.n());
}

DescentSet set_of(const Composition& composition) {
  if (composition.n() > kMaxN) throw std::domain_error("set_of: composition of n > 64");
  std::uint64_t mask = 0;
  int pos = 0;
  const auto& parts = composition.parts();
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    pos += parts[j];
    mask |= std::uint64_t{1} << (pos - 1);
  }
  return DescentSet(composition.n(), mask);
}

std::vector<int> Alternation::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Alternation alternation(const DescentSet& set) {
  if (set.n() < 2) return {};
  const std::uint64_t m = set.mask();
  // Bit i-1 of m ^ (m >> 1) compares membership of i and i+1.
  const std::uint64_t alt = (m ^ (m >> 1)) & low_bits(set.n() - 2);
  return {alt, std::popcount(alt)};
}

}  // namespace cycdesc
