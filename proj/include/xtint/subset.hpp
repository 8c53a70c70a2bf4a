#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace xtint {

/// Largest ground set a single incidence word can hold.
inline constexpr int kWordCap = 64;

using Word = std::uint64_t;

/// A subset of [n] stored as an n-bit incidence word; element e lives in bit e-1.
///
/// The canonical order on subsets is the numeric order of their words, so
/// {1} < {2} < {1,2} < {3} < ...
class Subset {
 public:
  Subset() = default;
  /// Throws CapacityError for n > 64 and UsageError when bits fall outside [n].
  Subset(int n, Word bits);

  static Subset of(int n, std::initializer_list<int> elements);
  static Subset from_elements(int n, std::span<const int> elements);
  /// [m] = {1, ..., m}.
  static Subset prefix(int n, int m);

  int n() const { return n_; }
  Word bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const;
  /// Largest element, 0 for the empty set.
  int max_element() const;
  std::vector<int> elements() const;

  Subset with(int e) const;
  Subset without(int e) const;
  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  int n_ = 0;
  Word bits_ = 0;
};

/// Mask with bits for elements 1..n set.
constexpr Word ground_mask(int n) {
  return n >= kWordCap ? ~Word{0} : ((Word{1} << n) - 1);
}

inline int popcount(Word w) { return __builtin_popcountll(w); }

/// Comma-separated ascending elements, e.g. "1,2,5"; "{}" for the empty set.
std::string to_string(const Subset& s);

/// Compact digit form, e.g. "1246"; only unambiguous when n <= 9.
std::string to_digits(const Subset& s);

/// |A ∩ B|. Throws UsageError when the ground sets differ.
int intersection_size(const Subset& a, const Subset& b);

}  // namespace xtint
