#include "xtint/family.hpp"

#include <algorithm>
#include <string>

#include "xtint/errors.hpp"

namespace xtint {

void FamilyParams::validate() const {
  if (!(1 <= t && t <= k && k <= n)) {
    throw UsageError("family parameters need 1 <= t <= k <= n (got n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " t=" + std::to_string(t) + ")");
  }
}

UniformFamily::UniformFamily(int n, int k) : n_(n), k_(k) {
  if (n > kWordCap) {
    throw CapacityError("ground set size " + std::to_string(n) + " exceeds word cap " +
                        std::to_string(kWordCap));
  }
  if (n < 0 || k < 0 || k > n) throw UsageError("family needs 0 <= k <= n");
}

UniformFamily::UniformFamily(int n, int k, std::vector<Word> words)
    : UniformFamily(n, k) {
  const Word mask = ground_mask(n);
  for (Word w : words) {
    if ((w & ~mask) != 0) throw UsageError("family member outside [" + std::to_string(n) + "]");
    if (popcount(w) != k) {
      throw UsageError("family member " + to_string(Subset(n, w)) + " does not have size " +
                       std::to_string(k));
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  words_ = std::move(words);
}

UniformFamily UniformFamily::from_subsets(int n, int k, std::span<const Subset> members) {
  std::vector<Word> words;
  words.reserve(members.size());
  for (const Subset& s : members) {
    if (s.n() != n) throw UsageError("member ground set differs from family ground set");
    words.push_back(s.bits());
  }
  return UniformFamily(n, k, std::move(words));
}

std::vector<Subset> UniformFamily::members() const {
  std::vector<Subset> out;
  out.reserve(words_.size());
  for (Word w : words_) out.emplace_back(n_, w);
  return out;
}

bool UniformFamily::contains(Word w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

UniformFamily enumerate_k_subsets(int n, int k) {
  if (n > kWordCap) {
    throw CapacityError("cannot enumerate k-subsets of [" + std::to_string(n) +
                        "]: word cap is " + std::to_string(kWordCap));
  }
  if (k < 0 || k > n) throw UsageError("enumerate_k_subsets needs 0 <= k <= n");
  std::vector<Word> words;
  for_each_k_subset(n, k, [&](Word w) { words.push_back(w); });
  return UniformFamily(n, k, std::move(words));
}

bool is_t_intersecting(const UniformFamily& family, int t) {
  const auto words = family.words();
  if (!words.empty() && family.k() < t) return false;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (popcount(words[a] & words[b]) < t) return false;
    }
  }
  return true;
}

bool is_cross_t_intersecting(const UniformFamily& a, const UniformFamily& b, int t) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw UsageError("cross-intersection check needs families with the same (n,k)");
  }
  for (Word x : a) {
    for (Word y : b) {
      if (popcount(x & y) < t) return false;
    }
  }
  return true;
}

UniformFamily shade(const UniformFamily& family) {
  const int n = family.n();
  const int j = family.k();
  if (j >= n) throw UsageError("shade of a family of n-subsets is undefined");
  std::vector<Word> out;
  for (Word w : family) {
    Word free = ground_mask(n) & ~w;
    for (; free != 0; free &= free - 1) out.push_back(w | (free & (~free + 1)));
  }
  return UniformFamily(n, j + 1, std::move(out));
}

}  // namespace xtint
