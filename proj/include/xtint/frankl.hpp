#pragma once

#include <cstdint>
#include <vector>

#include "xtint/bigint.hpp"
#include "xtint/family.hpp"

namespace xtint {

/// Parameters of F(n,k,t,r) = {A ∈ C([n],k) : |A ∩ [t+2r]| >= t+r}.
struct FranklParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::int64_t r = 0;

  /// Throws UsageError unless 1 <= t <= k <= n, r >= 0 and t + 2r <= n.
  void validate() const;
};

UniformFamily frankl_family(const FranklParams& p);

/// Σ_{j=t+r}^{min(k,t+2r)} C(t+2r, j) C(n-t-2r, k-j); zero when k < t+r.
BigInt frankl_size(const FranklParams& p);

struct FranklMax {
  std::vector<std::int64_t> argmax;  ///< every r attaining the maximum, ascending
  BigInt size;
};

/// Maximum of frankl_size over 0 <= r <= (n-t)/2.
FranklMax frankl_max(std::int64_t n, std::int64_t k, std::int64_t t);

/// Which F(n,k,t,r) the Ahlswede-Khachatrian thresholds predict to be largest.
struct AkRegime {
  std::int64_t r = 0;
  bool boundary = false;  ///< n sits on a threshold: F(r) and F(r+1) tie
};

/// Locates n among the thresholds (k-t+1)(2 + (t-1)/(r+1)), comparing with
/// cross-multiplied integers. A threshold whose upper neighbour r+1 would
/// leave the range t+2(r+1) <= n is reported as the strict regime r.
/// Throws OutOfScopeError for n < 2k-t+1.
AkRegime ak_regime(std::int64_t n, std::int64_t k, std::int64_t t);

}  // namespace xtint
