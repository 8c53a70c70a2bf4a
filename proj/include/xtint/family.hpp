#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xtint/subset.hpp"

namespace xtint {

struct FamilyParams {
  int n = 0;
  int k = 0;
  int t = 0;

  /// Throws UsageError unless 1 <= t <= k <= n.
  void validate() const;
};

/// A duplicate-free family of k-subsets of [n], kept in canonical word order.
///
/// The empty family is valid. Members are stored as raw incidence words;
/// member(i) wraps one back into a Subset.
class UniformFamily {
 public:
  UniformFamily() = default;
  UniformFamily(int n, int k);
  /// Sorts and deduplicates; throws UsageError if a word has the wrong
  /// popcount or leaves [n].
  UniformFamily(int n, int k, std::vector<Word> words);

  static UniformFamily from_subsets(int n, int k, std::span<const Subset> members);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  std::span<const Word> words() const { return words_; }
  Subset member(std::size_t index) const { return Subset(n_, words_[index]); }
  std::vector<Subset> members() const;

  bool contains(Word w) const;
  bool contains(const Subset& s) const { return s.n() == n_ && contains(s.bits()); }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  friend bool operator==(const UniformFamily&, const UniformFamily&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Word> words_;
};

/// All C(n,k) k-subsets of [n] in canonical order.
UniformFamily enumerate_k_subsets(int n, int k);

/// Calls fn(word) for every k-subset of [n] in canonical order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Word{0});
    return;
  }
  const Word last = ground_mask(n) & ~ground_mask(n - k);
  Word w = ground_mask(k);
  while (true) {
    fn(w);
    if (w == last) break;
    // Gosper's hack: next word with the same popcount.
    const Word c = w & (~w + 1);
    const Word r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
}

bool is_t_intersecting(const UniformFamily& family, int t);

/// Throws UsageError when (n,k) differ.
bool is_cross_t_intersecting(const UniformFamily& a, const UniformFamily& b, int t);

/// The (j+1)-subsets of [n] that contain some member of a family of j-subsets.
/// Throws UsageError when j = n.
UniformFamily shade(const UniformFamily& family);

}  // namespace xtint
