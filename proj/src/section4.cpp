#include "xtint/section4.hpp"

#include <algorithm>

#include "xtint/errors.hpp"
#include "xtint/family.hpp"
#include "xtint/frankl.hpp"
#include "xtint/gensets.hpp"

namespace xtint {

bool Section4Report::sizes_ok() const {
  return std::all_of(sizes.begin(), sizes.end(), [](const SizeCheck& c) { return c.ok(); }) &&
         std::all_of(identities.begin(), identities.end(),
                     [](const IdentityCheck& c) { return c.holds; }) &&
         std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& c) { return c.ok(); });
}

bool Section4Report::comparisons_ok() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const ComparisonCheck& c) { return c.holds; }) &&
         split.product_bound && split.max_sum <= 10 && split.equality_characterized;
}

bool Section4Report::in_domain_comparisons_ok() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const ComparisonCheck& c) { return c.holds || !c.in_domain; });
}

std::vector<std::string> Section4Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : sizes) {
    if (!c.ok()) out.push_back(c.construction + ": size of " + c.family);
  }
  for (const auto& c : identities) {
    if (!c.holds) out.push_back(c.construction + ": " + c.claim);
  }
  for (const auto& c : pairs) {
    if (!c.ok()) out.push_back(c.construction + ": " + c.pair + " not cross-intersecting");
  }
  for (const auto& c : comparisons) {
    if (!c.holds) {
      out.push_back(c.construction + ": " + c.claim + (c.in_domain ? "" : " (below domain)"));
    }
  }
  if (split.max_sum > 10) out.push_back("C([6],4) split: |G_A|+|G_B| exceeds 10");
  if (!split.product_bound) out.push_back("C([6],4) split: product exceeds |F(n,k,3,1)|^2");
  if (!split.equality_characterized) out.push_back("C([6],4) split: unexpected equality pair");
  return out;
}

namespace {

constexpr std::int64_t kExpandCap = 250'000;

class Builder {
 public:
  Builder(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
    report_.n = n;
    report_.k = k;
    expand_ = n <= kWordCap && binomial(n, k) <= kExpandCap;
  }

  BigInt c(std::int64_t a, std::int64_t b) const { return binomial(a, b); }
  BigInt c6(std::int64_t j) const { return binomial(n_ - 6, k_ - j); }

  GenSet genset(std::initializer_list<std::string_view> digits) const {
    return GenSet::from_digits(static_cast<int>(n_), static_cast<int>(k_), digits);
  }
  GenSet genset(std::vector<Subset> elements) const {
    return GenSet(static_cast<int>(n_), static_cast<int>(k_), std::move(elements));
  }
  Subset prefix(int m) const { return Subset::prefix(static_cast<int>(n_), m); }

  /// All j-subsets of [m].
  std::vector<Subset> layer(int m, int j) const {
    std::vector<Subset> out;
    for_each_k_subset(m, j, [&](Word w) { out.emplace_back(static_cast<int>(n_), w); });
    return out;
  }

  BigInt size(const std::string& construction, const std::string& family, const GenSet& g,
              const BigInt& formula) {
    SizeCheck check{construction, family, formula,
                    size_from_genset(g, n_, k_, Validation::never), std::nullopt};
    if (expand_) check.enumerated = BigInt(upset_k(g).size());
    const bool ok = check.ok();
    report_.sizes.push_back(std::move(check));
    if (!ok) throw IntegrityError(construction + ": size formula for " + family + " fails");
    return formula;
  }

  void identity(const std::string& construction, const std::string& claim, bool holds) {
    report_.identities.push_back({construction, claim, holds});
    if (!holds) throw IntegrityError(construction + ": identity fails: " + claim);
  }

  void pair(const std::string& construction, const std::string& name, const GenSet& a,
            const GenSet& b, int t) {
    PairCheck check{construction, name, t, gensets_cross_t_intersecting(a, b, t), std::nullopt};
    if (expand_) check.families_cross = is_cross_t_intersecting(upset_k(a), upset_k(b), t);
    const bool ok = check.ok();
    report_.pairs.push_back(std::move(check));
    if (!ok) throw IntegrityError(construction + ": " + name + " is not cross-" +
                                  std::to_string(t) + "-intersecting");
  }

  void compare(const std::string& construction, const std::string& claim, bool holds,
               bool in_domain) {
    report_.comparisons.push_back({construction, claim, holds, in_domain});
  }

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }
  Section4Report& report() { return report_; }

 private:
  std::int64_t n_, k_;
  bool expand_ = false;
  Section4Report report_;
};

void top_level_branch(Builder& b, int t, int s) {
  const std::int64_t n = b.n(), k = b.k();
  const std::string name = "i=t branch (t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")";
  const bool domain = n >= (t + 1) * (k - t + 1);
  BigInt fa = 0, fa1 = 0;
  for (int i = t; i <= s; ++i) fa += b.c(s, i) * b.c(n - s, k - i);
  for (int i = t; i <= s - 1; ++i) fa1 += b.c(s - 1, i) * b.c(n - s + 1, k - i);
  const GenSet ga = b.genset(b.layer(s, t));
  const GenSet gb = b.genset({b.prefix(s)});
  const GenSet ga1 = b.genset(b.layer(s - 1, t));
  const GenSet gb1 = b.genset({b.prefix(s - 1)});
  const BigInt A = b.size(name, "A", ga, fa);
  const BigInt B = b.size(name, "B", gb, b.c(n - s, k - s));
  const BigInt A1 = b.size(name, "A1", ga1, fa1);
  const BigInt B1 = b.size(name, "B1", gb1, b.c(n - s + 1, k - s + 1));
  b.pair(name, "(A,B)", ga, gb, t);
  b.pair(name, "(A1,B1)", ga1, gb1, t);
  b.identity(name, "|A|-|A1| = C(s-1,t-1)C(n-s,k-t)", A - A1 == b.c(s - 1, t - 1) * b.c(n - s, k - t));
  b.identity(name, "|B1|-|B| = C(n-s,k-s+1)", B1 - B == b.c(n - s, k - s + 1));
  const BigInt lhs = b.c(s - 1, t - 1) * b.c(n - s + 1, k - s + 1);
  const BigInt rhs = b.c(s, t) * b.c(n - s, k - s + 1);
  b.identity(name, "ratio equals t(n-s+1)/(s(n-k))",
             lhs * BigInt(s) * BigInt(n - k) == rhs * BigInt(t) * BigInt(n - s + 1));
  b.compare(name, "t(n-s+1) < s(n-k)", BigInt(t) * (n - s + 1) < BigInt(s) * (n - k), domain);
  b.compare(name, "C(s-1,t-1)C(n-s+1,k-s+1) < C(s,t)C(n-s,k-s+1)", lhs < rhs, domain);
  b.compare(name, "|A1||B1| > |A||B|", A1 * B1 > A * B, domain);
}

void case_s_t_plus_2(Builder& b, int t) {
  const std::int64_t n = b.n(), k = b.k();
  const std::string name = "s=t+2 case (t=" + std::to_string(t) + ")";
  const bool domain = n >= (t + 1) * (k - t + 1);
  std::vector<Subset> ea{b.prefix(t)};
  for (int j = 1; j <= t; ++j) ea.push_back(b.prefix(t + 2).without(j));
  const GenSet ga = b.genset(ea);
  const GenSet gb = b.genset({b.prefix(t + 1), b.prefix(t + 2).without(t + 1)});
  const BigInt star = b.c(n - t, k - t);
  const BigInt A = b.size(name, "A", ga, star + BigInt(t) * b.c(n - t - 2, k - t - 1));
  const BigInt B = b.size(name, "B", gb, star - b.c(n - t - 2, k - t));
  b.pair(name, "(A,B)", ga, gb, t);
  const GenSet gf = b.genset(b.layer(t + 2, t + 1));
  b.size(name, "F(n,k,t,1)", gf, frankl_size({n, k, t, 1}));
  b.pair(name, "(F,F)", gf, gf, t);
  b.compare(name, "t C(n-t-2,k-t-1) <= C(n-t-2,k-t)",
            BigInt(t) * b.c(n - t - 2, k - t - 1) <= b.c(n - t - 2, k - t), domain);
  b.compare(name, "|A||B| < C(n-t,k-t)^2", A * B < star * star, domain);
}

void subcase_31(Builder& b, bool domain) {
  const std::int64_t n = b.n(), k = b.k();
  const std::string name = "(6,4,3) first subcase";
  const GenSet ga = b.genset({"123", "124", "134", "234", "1256", "1356", "1456", "2356", "2456",
                              "3456"});
  const GenSet gb = b.genset({"12345", "12346"});
  const GenSet ga1 = b.genset(b.layer(4, 3));
  const GenSet gb1 = b.genset({"1234"});
  const BigInt A = b.size(name, "A", ga,
                          4 * b.c(n - 4, k - 3) + b.c(n - 4, k - 4) + 6 * b.c6(4));
  const BigInt B = b.size(name, "B", gb, 2 * b.c6(5) + b.c6(6));
  const BigInt A1 = b.size(name, "A1", ga1, b.c(n - 4, k - 4) + 4 * b.c(n - 4, k - 3));
  const BigInt B1 = b.size(name, "B1", gb1, b.c(n - 4, k - 4));
  b.pair(name, "(A,B)", ga, gb, 3);
  b.pair(name, "(A1,B1)", ga1, gb1, 3);
  b.identity(name, "|A1||B1|-|A||B| = (|A1|-6|B|)C(n-6,k-4)",
             A1 * B1 - A * B == (A1 - 6 * B) * b.c6(4));
  b.compare(name, "|A1| > 13 C(n-4,k-4)", A1 > 13 * b.c(n - 4, k - 4), domain);
  b.compare(name, "C(n-4,k-4) > |B|", b.c(n - 4, k - 4) > B, domain);
  b.compare(name, "|A1||B1| > |A||B|", A1 * B1 > A * B, domain);
}

void subcase_32(Builder& b, bool domain) {
  const std::int64_t n = b.n(), k = b.k();
  {
    const std::string name = "(6,4,3) second subcase (g4(B) empty)";
    const GenSet ga = b.genset({"123", "1245", "1246", "1256", "1345", "1346", "1356", "1456",
                                "2345", "2346", "2356", "2456", "3456"});
    const GenSet gb = b.genset({"12346", "12345", "12356"});
    const GenSet ga1 = b.genset({"123", "1245", "1345", "2345"});
    const GenSet gb1 = b.genset({"1234", "1235"});
    const BigInt A = b.size(name, "A", ga, b.c6(6) + 6 * b.c6(5) + 15 * b.c6(4) + b.c6(3));
    const BigInt B = b.size(name, "B", gb, b.c6(6) + 3 * b.c6(5));
    const BigInt A1 = b.size(name, "A1", ga1,
                             b.c(n - 5, k - 5) + 5 * b.c(n - 5, k - 4) + b.c(n - 5, k - 3));
    const BigInt B1 = b.size(name, "B1", gb1, 2 * b.c(n - 5, k - 4) + b.c(n - 5, k - 5));
    b.pair(name, "(A,B)", ga, gb, 3);
    b.pair(name, "(A1,B1)", ga1, gb1, 3);
    b.identity(name, "|A1| = |A| - 9 C(n-6,k-4)", A1 == A - 9 * b.c6(4));
    b.identity(name, "|B1| = |B| + 2 C(n-6,k-4)", B1 == B + 2 * b.c6(4));
    const BigInt bracket = -7 * b.c6(6) - 15 * b.c6(5) + 12 * b.c6(4) + 2 * b.c6(3);
    b.identity(name, "|A1||B1|-|A||B| = C(n-6,k-4)(-7c6+-15c5+12c4+2c3)",
               A1 * B1 - A * B == b.c6(4) * bracket);
    b.compare(name, "C(n-6,k-4) > C(n-6,k-5)", b.c6(4) > b.c6(5), domain);
    b.compare(name, "C(n-6,k-5) > C(n-6,k-6)", b.c6(5) > b.c6(6), domain);
    b.compare(name, "C(n-6,k-4) > 3 C(n-6,k-5)", b.c6(4) > 3 * b.c6(5), domain);
    b.compare(name, "-7c6-15c5+12c4+2c3 > 0", bracket > 0, domain);
    b.compare(name, "|A1||B1| > |A||B|", A1 * B1 > A * B, domain);
  }
  {
    const std::string name = "(6,4,3) second subcase (g4(B) = {[4]})";
    const GenSet ga = b.genset({"123", "1245", "1246", "1345", "1346", "2345", "2346"});
    const GenSet gb = b.genset({"1234", "12356"});
    const GenSet ga1 = b.genset({"123", "1245", "1345", "2345"});
    const GenSet gb1 = b.genset({"1234", "1235"});
    const BigInt A = b.size(name, "A", ga, b.c6(3) + 9 * b.c6(4) + 6 * b.c6(5) + b.c6(6));
    const BigInt B = b.size(name, "B", gb, b.c6(4) + 3 * b.c6(5) + b.c6(6));
    const BigInt A1 = b.size(name, "A1", ga1, A - 3 * b.c6(4));
    const BigInt B1 = b.size(name, "B1", gb1, B + b.c6(4));
    b.pair(name, "(A,B)", ga, gb, 3);
    b.pair(name, "(A1,B1)", ga1, gb1, 3);
    const BigInt bracket = b.c6(3) + 3 * b.c6(4) - 3 * b.c6(5) - 2 * b.c6(6);
    b.identity(name, "|A1||B1|-|A||B| = C(n-6,k-4)(c3+3c4-3c5-2c6)",
               A1 * B1 - A * B == b.c6(4) * bracket);
    const PerturbResult moved =
        perturb_pair_counts(ga, gb, 4, 3, Direction::down_up, n, k);
    b.identity(name, "A1, B1 arise from moving g*_4(A) to g*_5(B)'",
               moved.delta_first == A1 - A && moved.delta_second == B1 - B);
    b.compare(name, "c3+3c4-3c5-2c6 > 0", bracket > 0, domain);
    b.compare(name, "|A1||B1| > |A||B|", A1 * B1 > A * B, domain);
  }
}

void subcase_33(Builder& b, bool domain) {
  const std::int64_t n = b.n(), k = b.k();
  const BigInt star = b.c(n - 3, k - 3);
  {
    const std::string name = "(6,4,3) third subcase (g3(B) nonempty)";
    const GenSet ga = b.genset({"1234", "1235", "1236"});
    const GenSet gb = b.genset({"123", "12456", "13456", "23456"});
    const BigInt A = b.size(name, "A", ga, star - b.c6(3));
    const BigInt B = b.size(name, "B", gb, star + 3 * b.c6(5));
    b.pair(name, "(A,B)", ga, gb, 3);
    b.compare(name, "C(n-6,k-3) > 3 C(n-6,k-4)", b.c6(3) > 3 * b.c6(4), domain);
    b.compare(name, "3 C(n-6,k-4) > 9 C(n-6,k-5)", 3 * b.c6(4) > 9 * b.c6(5), domain);
    b.compare(name, "|A||B| < C(n-3,k-3)^2", A * B < star * star, domain);
  }
  const BigInt F = frankl_size({n, k, 3, 1});
  {
    const std::string name = "(6,4,3) third subcase (g4(B) empty)";
    const GenSet ga = b.genset(b.layer(6, 4));
    const GenSet gb = b.genset(b.layer(6, 5));
    const BigInt A = b.size(name, "A", ga, F + 10 * b.c6(4));
    const BigInt B = b.size(name, "B", gb, F - 5 * b.c6(4));
    b.identity(name, "|F(n,k,3,1)| = 5C(n-5,k-4)+C(n-5,k-5)",
               F == 5 * b.c(n - 5, k - 4) + b.c(n - 5, k - 5));
    b.pair(name, "(A,B)", ga, gb, 3);
    const BigInt inner = 5 * b.c(n - 5, k - 4) + b.c(n - 5, k - 5) - 10 * b.c6(4);
    b.identity(name, "|A||B|-|F|^2 = 5C(n-6,k-4)(5C(n-5,k-4)+C(n-5,k-5)-10C(n-6,k-4))",
               A * B - F * F == 5 * b.c6(4) * inner);
    if (k > 4 && n > 5) {
      b.identity(name, "bracket = C(n-5,k-5)(1-5(n-k)(n-2k+3)/((k-4)(n-5)))",
                 inner * BigInt(k - 4) * BigInt(n - 5) ==
                     b.c(n - 5, k - 5) *
                         (BigInt(k - 4) * (n - 5) - BigInt(5) * (n - k) * (n - 2 * k + 3)));
    }
    b.compare(name, "|A||B| < |F(n,k,3,1)|^2", A * B < F * F, domain);
  }
  {
    // Nonempty cross-3-intersecting G_A, G_B ⊆ C([6],4); maximal pairs suffice
    // for both the sum and the product bound.
    std::vector<Word> four;
    for_each_k_subset(6, 4, [&](Word w) { four.push_back(w); });
    const int m = static_cast<int>(four.size());
    std::vector<std::uint32_t> compat(m, 0);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (popcount(four[x] & four[y]) >= 3) compat[x] |= 1u << y;
      }
    }
    std::vector<std::uint32_t> five_stars;
    for (int miss = 1; miss <= 6; ++miss) {
      std::uint32_t mask = 0;
      for (int x = 0; x < m; ++x) {
        if (!(four[x] >> (miss - 1) & 1)) mask |= 1u << x;
      }
      five_stars.push_back(mask);
    }
    SplitCheck& split = b.report().split;
    split.product_bound = true;
    split.equality_characterized = true;
    const BigInt rest = 6 * b.c6(5) + b.c6(6);
    for (std::uint32_t ga = 1; ga < (1u << m); ++ga) {
      std::uint32_t gb = (1u << m) - 1;
      for (int x = 0; x < m; ++x) {
        if (ga >> x & 1) gb &= compat[x];
      }
      if (gb == 0) continue;
      const int a = popcount(ga), bb = popcount(gb);
      split.max_sum = std::max(split.max_sum, a + bb);
      const BigInt product = (a * b.c6(4) + rest) * (bb * b.c6(4) + rest);
      if (product > F * F) split.product_bound = false;
      if (product == F * F) {
        ++split.equality_pairs;
        const bool star_pair =
            ga == gb && std::find(five_stars.begin(), five_stars.end(), ga) != five_stars.end();
        if (!star_pair) split.equality_characterized = false;
      }
    }
    if (split.equality_pairs != 6) split.equality_characterized = false;
  }
}

}  // namespace

Section4Report verify_section4_constructions(std::int64_t n, std::int64_t k) {
  if (!(5 <= k && k < n)) throw UsageError("verify-case4 needs 5 <= k < n");
  if (n > kWordCap) throw CapacityError("verify-case4: n exceeds the word cap");
  Builder b(n, k);
  for (int t = 3; t <= k - 1; ++t) {
    for (int s = t + 1; s <= k; ++s) top_level_branch(b, t, s);
    case_s_t_plus_2(b, t);
  }
  const bool domain = n >= 4 * (k - 2);
  subcase_31(b, domain);
  subcase_32(b, domain);
  subcase_33(b, domain);
  return std::move(b.report());
}

}  // namespace xtint
