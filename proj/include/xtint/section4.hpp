#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xtint/bigint.hpp"

namespace xtint {

/// A family given by a generating set, with its closed size formula.
struct SizeCheck {
  std::string construction;
  std::string family;
  BigInt formula;
  BigInt from_genset;
  std::optional<BigInt> enumerated;  ///< present when the family was expanded
  bool ok() const { return formula == from_genset && (!enumerated || *enumerated == formula); }
};

/// An identity between size expressions.
struct IdentityCheck {
  std::string construction;
  std::string claim;
  bool holds = false;
};

struct PairCheck {
  std::string construction;
  std::string pair;
  int t = 0;
  bool gensets_cross = false;
  std::optional<bool> families_cross;
  bool ok() const { return gensets_cross && families_cross.value_or(true); }
};

/// A strict (or non-strict) comparison, evaluated exactly.
struct ComparisonCheck {
  std::string construction;
  std::string claim;
  bool holds = false;
  bool in_domain = false;  ///< n meets the bound under which the comparison is asserted
};

/// Pairs of nonempty cross-3-intersecting subfamilies of C([6],4) used at
/// the end of the (6,4,3) analysis.
struct SplitCheck {
  int max_sum = 0;                ///< max |G_A| + |G_B|
  bool product_bound = false;     ///< every pair gives |A||B| <= |F(n,k,3,1)|^2
  int equality_pairs = 0;
  bool equality_characterized = false;  ///< equality only for G_A = G_B = C(T,4), |T| = 5
};

struct Section4Report {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<SizeCheck> sizes;
  std::vector<IdentityCheck> identities;
  std::vector<PairCheck> pairs;
  std::vector<ComparisonCheck> comparisons;
  SplitCheck split;

  bool sizes_ok() const;
  bool comparisons_ok() const;
  bool in_domain_comparisons_ok() const;
  /// Human-readable list of every failed size, identity, pair or comparison.
  std::vector<std::string> failures() const;
};

/// Instantiates the explicit generating sets of the product argument at
/// (n,k): the i = t branch for t in [3,k-1] and s in [t+1,k], the s = t+2
/// case for every such t, and the t = 3 subcases around (s,i,t) = (6,4,3).
/// Families are expanded when C(n,k) is at most 250000.
/// Throws UsageError unless 5 <= k < n, and IntegrityError naming the
/// construction when a size formula, identity or cross-intersection fails.
/// Comparisons are recorded, not thrown.
Section4Report verify_section4_constructions(std::int64_t n, std::int64_t k);

}  // namespace xtint
