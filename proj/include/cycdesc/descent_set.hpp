#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cycdesc {

/// Largest supported ambient size; subsets of [n-1] live in a 64-bit mask.
inline constexpr int kMaxN = 64;

/// Mask with bits 0..width-1 set.
constexpr std::uint64_t low_bits(int width) {
  return width <= 0 ? 0 : (width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1);
}

/// A subset I of [n-1] = {1, ..., n-1} together with its ambient n.
/// Bit i-1 of the mask is set iff i is in I.
class DescentSet {
 public:
  /// The empty subset of [0], i.e. n = 1.
  DescentSet() = default;

  /// Throws std::domain_error if n is outside [1, 64] or the mask has bits
  /// at or above n-1.
  DescentSet(int n, std::uint64_t mask = 0);

  /// Elements may come in any order; duplicates and out-of-range values throw.
  static DescentSet from_elements(int n, std::span<const int> elements);
  static DescentSet from_elements(int n, std::initializer_list<int> elements);

  /// [n-1].
  static DescentSet full(int n);

  /// kZ intersected with [n-1].
  static DescentSet multiples(int n, int k);

  /// Canonical text: comma-separated strictly ascending integers, "" for the
  /// empty set. Whitespace around elements is tolerated; anything else throws.
  static DescentSet parse(int n, std::string_view text);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const {
    return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1U) != 0;
  }

  std::vector<int> elements() const;

  /// [n-1] \ I.
  DescentSet complement() const;

  /// {n - i : i in I}.
  DescentSet reversed() const;

  /// I with i added; i must lie in [n-1].
  DescentSet with(int i) const;

  /// The same elements viewed inside a larger ambient [m-1], m >= n.
  DescentSet lifted(int m) const;

  std::string to_string() const;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  int n_ = 1;
  std::uint64_t mask_ = 0;
};

/// gcd(I u {n}); equals n when I is empty.
int descent_gcd(const DescentSet& set);

/// I/d = {i/d : i in I, d | i}, as a subset of [n/d - 1]. Requires d | n.
DescentSet subset_quotient(const DescentSet& set, int d);

/// Strict total order on sets by their ascending element sequences
/// (a proper prefix sorts first). Used for deterministic tie-breaking.
bool lex_less(const DescentSet& a, const DescentSet& b);

/// An ordered list of positive parts summing to n.
class Composition {
 public:
  /// Throws std::domain_error on an empty list or a nonpositive part.
  explicit Composition(std::vector<int> parts);

  /// Additionally requires the parts to sum to `declared_n`.
  Composition(std::vector<int> parts, int declared_n);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// mu/d; every part must be divisible by d.
  Composition quotient(int d) const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// co(I): the gaps of I u {n} starting from 0.
Composition composition_of(const DescentSet& set);

/// Inverse of composition_of.
DescentSet set_of(const Composition& composition);

/// Alt(I) = {i in [n-2] : exactly one of i, i+1 lies in I}, as a mask where
/// bit i-1 stands for i, plus alt(I) = |Alt(I)|. For n = 1 both are empty.
struct Alternation {
  std::uint64_t mask = 0;
  int count = 0;

  std::vector<int> elements() const;
};

Alternation alternation(const DescentSet& set);

}  // namespace cycdesc
