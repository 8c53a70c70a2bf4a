#include <doctest.h>

#include "generators.hpp"
#include "xtint/compression.hpp"
#include "xtint/errors.hpp"
#include "xtint/frankl.hpp"

using namespace xtint;

namespace {

UniformFamily fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> members;
  for (auto s : sets) members.push_back(Subset::of(n, s));
  return UniformFamily::from_subsets(n, k, members);
}

}  // namespace

TEST_CASE("shift_set clauses") {
  const auto f1 = fam(4, 2, {{2, 3}});
  CHECK(shift_set(Subset::of(4, {2, 3}), 1, 2, f1) == Subset::of(4, {1, 3}));
  const auto f2 = fam(4, 2, {{1, 3}, {2, 3}});
  CHECK(shift_set(Subset::of(4, {2, 3}), 1, 2, f2) == Subset::of(4, {2, 3}));
  CHECK(shift_set(Subset::of(4, {1, 3}), 1, 2, f2) == Subset::of(4, {1, 3}));
  CHECK_THROWS_AS(shift_set(Subset::of(4, {1, 4}), 1, 2, f2), UsageError);
  CHECK_THROWS_AS(shift_set(Subset::of(4, {1, 3}), 2, 2, f2), UsageError);
  CHECK_THROWS_AS(shift_set(Subset::of(4, {1, 3}), 1, 5, f2), UsageError);
}

TEST_CASE("shift_family and left_compress examples") {
  const auto f = fam(4, 2, {{2, 3}, {2, 4}});
  CHECK(shift_family(f, 1, 2) == fam(4, 2, {{1, 3}, {1, 4}}));
  CHECK(left_compress(f) == fam(4, 2, {{1, 2}, {1, 3}}));
  const auto star = frankl_family({7, 3, 2, 0});
  CHECK(shift_family(star, 1, 2) == star);
  CHECK(left_compress(star) == star);
  CHECK(is_left_compressed(fam(4, 2, {{1, 2}})));
  CHECK_FALSE(is_left_compressed(fam(4, 2, {{2, 3}})));
}

TEST_CASE("Frankl families are left-compressed") {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 1; k <= std::min(n, 5); ++k) {
      for (int t = 1; t <= k; ++t) {
        for (int r = 0; t + 2 * r <= n; ++r) {
          CHECK(is_left_compressed(frankl_family({n, k, t, r})));
        }
      }
    }
  }
}

TEST_CASE("property: shifts preserve size and cross-t-intersection") {
  gen::Rng rng(20240601);
  int nontrivial = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = gen::uniform(rng, 4, 9);
    const int k = gen::uniform(rng, 2, std::min(4, n - 1));
    const int t = gen::uniform(rng, 1, k);
    const auto [a, b] = gen::random_cross_pair(rng, n, k, t);
    REQUIRE(is_cross_t_intersecting(a, b, t));
    if (!b.empty()) ++nontrivial;
    const int i = gen::uniform(rng, 1, n - 1);
    const int j = gen::uniform(rng, i + 1, n);
    const auto sa = shift_family(a, i, j);
    const auto sb = shift_family(b, i, j);
    CHECK(sa.size() == a.size());
    CHECK(sb.size() == b.size());
    CHECK(is_cross_t_intersecting(sa, sb, t));
  }
  CHECK(nontrivial > 600);
}

TEST_CASE("property: left_compress reaches a fixpoint of the same size") {
  gen::Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = gen::uniform(rng, 3, 8);
    const int k = gen::uniform(rng, 1, n);
    const auto f = gen::random_family(rng, n, k);
    const auto g = left_compress(f);
    CHECK(g.size() == f.size());
    CHECK(is_left_compressed(g));
  }
}

TEST_CASE("property: normalized matching on random families") {
  gen::Rng rng(4242);
  int checked = 0;
  while (checked < 1000) {
    const int n = gen::uniform(rng, 2, 10);
    const int j = gen::uniform(rng, 1, n - 1);
    const auto f = gen::random_family(rng, n, j, 1, gen::uniform(rng, 2, 8));
    if (f.empty()) continue;
    const auto up = shade(f);
    CHECK(BigInt(up.size()) * binomial(n, j) >= BigInt(f.size()) * binomial(n, j + 1));
    ++checked;
  }
}

TEST_CASE("property: self cross-intersection is t-intersection") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen::uniform(rng, 3, 8);
    const int k = gen::uniform(rng, 1, n);
    const int t = gen::uniform(rng, 1, k);
    const auto f = gen::random_small_family(rng, n, k, gen::uniform(rng, 1, 5));
    CHECK(is_cross_t_intersecting(f, f, t) == is_t_intersecting(f, t));
  }
}
