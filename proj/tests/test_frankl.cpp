#include <doctest.h>

#include "oracles.hpp"
#include "xtint/errors.hpp"
#include "xtint/frankl.hpp"

using namespace xtint;

TEST_CASE("Frankl family examples") {
  CHECK(frankl_family({8, 4, 3, 0}).size() == 5);
  const auto f = frankl_family({8, 4, 3, 1});
  CHECK(f.size() == 5);
  for (Word w : f) CHECK((w & ~ground_mask(5)) == 0);
  CHECK(frankl_size({8, 4, 3, 1}) == 5);
  CHECK(frankl_size({12, 5, 3, 1}) == 36);
  CHECK(frankl_size({30, 6, 3, 0}) == binomial(27, 3));
  CHECK(frankl_size({9, 3, 2, 2}) == 0);
  CHECK_THROWS_AS(frankl_family({6, 3, 2, 3}), UsageError);
  CHECK_THROWS_AS(frankl_size({6, 3, 2, -1}), UsageError);
}

TEST_CASE("Frankl families are t-intersecting") {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k <= std::min(n, 5); ++k) {
      for (int t = 1; t <= k; ++t) {
        for (int r = 0; t + 2 * r <= n; ++r) CHECK(is_t_intersecting(frankl_family({n, k, t, r}), t));
      }
    }
  }
}

TEST_CASE("frankl_size agrees with enumeration") {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= std::min(n, 6); ++k) {
      for (int t = 1; t <= k; ++t) {
        for (int r = 0; t + 2 * r <= n; ++r) {
          const BigInt size = frankl_size({n, k, t, r});
          CHECK(size == BigInt(frankl_family({n, k, t, r}).size()));
          if (n <= 11) CHECK(size == BigInt(oracle::frankl_count(n, k, t, r)));
        }
      }
    }
  }
}

TEST_CASE("frankl_max examples") {
  const FranklMax a = frankl_max(9, 4, 3);
  CHECK(a.argmax == std::vector<std::int64_t>{0});
  CHECK(a.size == 6);
  const FranklMax b = frankl_max(8, 4, 3);
  CHECK(b.argmax == std::vector<std::int64_t>{0, 1});
  CHECK(b.size == 5);
}

TEST_CASE("ak_regime examples") {
  const AkRegime a = ak_regime(8, 4, 3);
  CHECK(a.r == 0);
  CHECK(a.boundary);
  const AkRegime b = ak_regime(9, 4, 3);
  CHECK(b.r == 0);
  CHECK_FALSE(b.boundary);
  CHECK_THROWS_AS(ak_regime(5, 4, 3), OutOfScopeError);
  CHECK(ak_regime(6, 4, 3).r >= 1);
}

TEST_CASE("regime prediction matches the argmax on the small grid") {
  for (int t = 2; t <= 6; ++t) {
    for (int k = t; k <= t + 8; ++k) {
      for (int n = 2 * k - t + 1; n <= 2 * k - t + 40; ++n) {
        const AkRegime regime = ak_regime(n, k, t);
        const FranklMax best = frankl_max(n, k, t);
        std::vector<std::int64_t> predicted{regime.r};
        if (regime.boundary) predicted.push_back(regime.r + 1);
        if (k == t) {
          // every r gives the same star-like family
          CHECK(best.size == 1);
          continue;
        }
        CHECK_MESSAGE(predicted == best.argmax, "n=" << n << " k=" << k << " t=" << t);
      }
    }
  }
}

TEST_CASE("t = 1 at n = 2k: every r ties") {
  for (int k = 2; k <= 7; ++k) {
    const FranklMax best = frankl_max(2 * k, k, 1);
    CHECK(best.argmax.size() == static_cast<std::size_t>(k));
    CHECK(ak_regime(2 * k, k, 1).boundary);
  }
}

TEST_CASE("top of the r range is a strict regime") {
  const AkRegime r = ak_regime(5, 3, 2);
  CHECK(r.r == 1);
  CHECK_FALSE(r.boundary);
}

TEST_CASE("the star is the unique maximum above (t+1)(k-t+1) on the sweep grid") {
  for (int t = 3; t <= 8; ++t) {
    for (int k = t + 1; k <= t + 12; ++k) {
      const int n0 = (t + 1) * (k - t + 1);
      for (int n = n0 + 1; n <= n0 + 40; ++n) {
        CHECK(frankl_max(n, k, t).argmax == std::vector<std::int64_t>{0});
      }
    }
  }
}
