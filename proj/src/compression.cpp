#include "xtint/compression.hpp"

#include <string>
#include <vector>

#include "xtint/errors.hpp"

namespace xtint {
namespace {

void check_pair(int n, int i, int j) {
  if (i == j) throw UsageError("shift needs i != j");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw UsageError("shift indices (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside [" + std::to_string(n) + "]");
  }
}

Word shift_word(Word w, Word bit_i, Word bit_j, const UniformFamily& family) {
  if ((w & bit_j) == 0 || (w & bit_i) != 0) return w;
  const Word moved = (w & ~bit_j) | bit_i;
  return family.contains(moved) ? w : moved;
}

}  // namespace

Subset shift_set(const Subset& a, int i, int j, const UniformFamily& family) {
  check_pair(family.n(), i, j);
  if (!family.contains(a)) throw UsageError("shift_set: " + to_string(a) + " is not a member");
  const Word bit_i = Word{1} << (i - 1);
  const Word bit_j = Word{1} << (j - 1);
  return Subset(family.n(), shift_word(a.bits(), bit_i, bit_j, family));
}

UniformFamily shift_family(const UniformFamily& family, int i, int j) {
  check_pair(family.n(), i, j);
  const Word bit_i = Word{1} << (i - 1);
  const Word bit_j = Word{1} << (j - 1);
  std::vector<Word> out;
  out.reserve(family.size());
  for (Word w : family) out.push_back(shift_word(w, bit_i, bit_j, family));
  UniformFamily shifted(family.n(), family.k(), std::move(out));
  if (shifted.size() != family.size()) {
    throw IntegrityError("shift changed the family size");
  }
  return shifted;
}

UniformFamily left_compress(const UniformFamily& family) {
  UniformFamily current = family;
  const int n = family.n();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        UniformFamily next = shift_family(current, i, j);
        if (next != current) {
          changed = true;
          current = std::move(next);
        }
      }
    }
  }
  return current;
}

bool is_left_compressed(const UniformFamily& family) {
  const int n = family.n();
  for (Word w : family) {
    for (int j = 2; j <= n; ++j) {
      const Word bit_j = Word{1} << (j - 1);
      if ((w & bit_j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        const Word bit_i = Word{1} << (i - 1);
        if ((w & bit_i) != 0) continue;
        if (!family.contains((w & ~bit_j) | bit_i)) return false;
      }
    }
  }
  return true;
}

}  // namespace xtint
