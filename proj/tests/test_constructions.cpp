#include <doctest.h>

#include "oracles.hpp"
#include "xtint/errors.hpp"
#include "xtint/section4.hpp"

using namespace xtint;

namespace {

const SizeCheck* find_size(const Section4Report& r, const std::string& construction,
                           const std::string& family) {
  for (const auto& s : r.sizes) {
    if (s.construction == construction && s.family == family) return &s;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("constructions at (10,6) and (12,6)") {
  for (int n : {10, 12}) {
    const Section4Report r = verify_section4_constructions(n, 6);
    CHECK(r.sizes_ok());
    CHECK(r.sizes.size() == 49);
    for (const auto& s : r.sizes) CHECK(s.enumerated.has_value());
    for (const auto& p : r.pairs) CHECK(p.ok());
    for (const auto& c : r.identities) CHECK(c.holds);
    // Every failure sits below the bound for its construction.
    for (const auto& c : r.comparisons) {
      if (c.in_domain) CHECK(c.holds);
    }
    CHECK(r.in_domain_comparisons_ok());
    CHECK_FALSE(r.comparisons_ok());
  }
  const Section4Report r = verify_section4_constructions(10, 6);
  const SizeCheck* b = find_size(r, "(6,4,3) first subcase", "B");
  REQUIRE(b != nullptr);
  CHECK(b->formula == 9);
  CHECK(*b->enumerated == 9);
  CHECK(r.failures().size() == 19);
}

TEST_CASE("C([6],4) split") {
  const SplitCheck s = verify_section4_constructions(20, 6).split;
  CHECK(s.max_sum == 10);
  CHECK(s.product_bound);
  CHECK(s.equality_pairs == 6);
  CHECK(s.equality_characterized);
}

TEST_CASE("in-domain comparisons fail only where the binomial ratio is at most 3") {
  for (int k = 5; k <= 9; ++k) {
    for (int n = 4 * (k - 2); n <= 4 * (k - 2) + 3; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const Section4Report r = verify_section4_constructions(n, k);
      CHECK(r.sizes_ok());
      const bool ratio_ok = oracle::binom(n - 6, k - 3) > 3 * oracle::binom(n - 6, k - 4);
      CHECK(ratio_ok == (n > 4 * k - 7));
      for (const auto& c : r.comparisons) {
        if (!c.in_domain) continue;
        if (c.claim == "C(n-6,k-3) > 3 C(n-6,k-4)") {
          CHECK(c.holds == ratio_ok);
        } else {
          CHECK_MESSAGE(c.holds, c.construction << ": " << c.claim);
        }
      }
    }
  }
}

TEST_CASE("construction argument checks") {
  CHECK_THROWS_AS(verify_section4_constructions(10, 4), UsageError);
  CHECK_THROWS_AS(verify_section4_constructions(6, 6), UsageError);
  CHECK_THROWS_AS(verify_section4_constructions(70, 6), CapacityError);
}
