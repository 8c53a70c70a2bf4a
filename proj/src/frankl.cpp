#include "xtint/frankl.hpp"

#include <algorithm>
#include <string>

#include "xtint/errors.hpp"

namespace xtint {

void FranklParams::validate() const {
  if (!(1 <= t && t <= k && k <= n)) {
    throw UsageError("Frankl family needs 1 <= t <= k <= n");
  }
  if (r < 0 || t + 2 * r > n) {
    throw UsageError("Frankl family needs 0 <= r and t + 2r <= n (r=" + std::to_string(r) + ")");
  }
}

UniformFamily frankl_family(const FranklParams& p) {
  p.validate();
  if (p.n > kWordCap) throw CapacityError("frankl_family: n exceeds the word cap");
  const int n = static_cast<int>(p.n);
  const int k = static_cast<int>(p.k);
  const Word core = ground_mask(static_cast<int>(p.t + 2 * p.r));
  const int need = static_cast<int>(p.t + p.r);
  std::vector<Word> words;
  for_each_k_subset(n, k, [&](Word w) {
    if (popcount(w & core) >= need) words.push_back(w);
  });
  return UniformFamily(n, k, std::move(words));
}

BigInt frankl_size(const FranklParams& p) {
  p.validate();
  const std::int64_t core = p.t + 2 * p.r;
  BigInt total = 0;
  for (std::int64_t j = p.t + p.r; j <= std::min(p.k, core); ++j) {
    total += binomial(core, j) * binomial(p.n - core, p.k - j);
  }
  return total;
}

FranklMax frankl_max(std::int64_t n, std::int64_t k, std::int64_t t) {
  FranklMax best;
  best.size = -1;
  for (std::int64_t r = 0; t + 2 * r <= n; ++r) {
    const BigInt size = frankl_size({n, k, t, r});
    if (size > best.size) {
      best.size = size;
      best.argmax = {r};
    } else if (size == best.size) {
      best.argmax.push_back(r);
    }
  }
  return best;
}

AkRegime ak_regime(std::int64_t n, std::int64_t k, std::int64_t t) {
  if (!(1 <= t && t <= k && k <= n)) throw UsageError("ak_regime needs 1 <= t <= k <= n");
  if (n < 2 * k - t + 1) {
    throw OutOfScopeError("ak_regime needs n >= 2k - t + 1");
  }
  const std::int64_t width = k - t + 1;
  // n vs (k-t+1)(2 + (t-1)/(r+1)), multiplied through by r+1.
  for (std::int64_t r = 0;; ++r) {
    const std::int64_t lhs = n * (r + 1);
    const std::int64_t rhs = width * (2 * (r + 1) + t - 1);
    if (lhs > rhs) return {r, false};
    // r+1 must stay within 0 <= r+1 <= (n-t)/2.
    if (lhs == rhs) return {r, t + 2 * (r + 1) <= n};
  }
}

}  // namespace xtint
