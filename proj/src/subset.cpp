#include "xtint/subset.hpp"

#include "xtint/errors.hpp"

namespace xtint {

Subset::Subset(int n, Word bits) : n_(n), bits_(bits) {
  if (n < 0) throw UsageError("ground set size must be nonnegative");
  if (n > kWordCap) {
    throw CapacityError("ground set size " + std::to_string(n) + " exceeds word cap " +
                        std::to_string(kWordCap));
  }
  if ((bits & ~ground_mask(n)) != 0) {
    throw UsageError("subset has elements outside [" + std::to_string(n) + "]");
  }
}

Subset Subset::of(int n, std::initializer_list<int> elements) {
  return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::from_elements(int n, std::span<const int> elements) {
  if (n > kWordCap) {
    throw CapacityError("ground set size " + std::to_string(n) + " exceeds word cap");
  }
  Word bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw UsageError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
    }
    bits |= Word{1} << (e - 1);
  }
  return Subset(n, bits);
}

Subset Subset::prefix(int n, int m) {
  if (m < 0 || m > n) throw UsageError("prefix length outside [0, n]");
  return Subset(n, ground_mask(m));
}

int Subset::size() const { return popcount(bits_); }

bool Subset::contains(int e) const {
  return e >= 1 && e <= n_ && ((bits_ >> (e - 1)) & 1U) != 0;
}

int Subset::max_element() const {
  return bits_ == 0 ? 0 : kWordCap - __builtin_clzll(bits_);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Word w = bits_; w != 0; w &= w - 1) out.push_back(__builtin_ctzll(w) + 1);
  return out;
}

Subset Subset::with(int e) const {
  if (e < 1 || e > n_) throw UsageError("element outside ground set");
  return Subset(n_, bits_ | (Word{1} << (e - 1)));
}

Subset Subset::without(int e) const {
  if (e < 1 || e > n_) throw UsageError("element outside ground set");
  return Subset(n_, bits_ & ~(Word{1} << (e - 1)));
}

std::string to_string(const Subset& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::string to_digits(const Subset& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (int e : s.elements()) out += std::to_string(e);
  return out;
}

int intersection_size(const Subset& a, const Subset& b) {
  if (a.n() != b.n()) {
    throw UsageError("intersection of subsets of different ground sets (" +
                     std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  }
  return popcount(a.bits() & b.bits());
}

}  // namespace xtint
