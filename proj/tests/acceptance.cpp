// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails. Every bound below is exact except the pinned time limits.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "xtint/compression.hpp"
#include "xtint/errors.hpp"
#include "xtint/frankl.hpp"
#include "xtint/inequality.hpp"
#include "xtint/search.hpp"
#include "xtint/section4.hpp"
#include "xtint/sweep.hpp"

using namespace xtint;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kKeyValueLimitMs = 1.0;
constexpr double kBruteForceLimitS = 10.0;
constexpr double kGensetLimitS = 60.0;
constexpr int kShiftPairs = 1000;
constexpr int kMatchingFamilies = 1000;
constexpr int kBasefactQuadruples = 100000;
constexpr int kGaloisFamilies = 1000;
constexpr int kDualFormTuples = 100000;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

Verdict key_value() {
  Verdict v;
  const auto start = Clock::now();
  const KeyInequality r = check_key_inequality({18, 7, 8, 6, 5});
  const double ms = seconds_since(start) * 1e3;
  v.require(r.ratio == Rational(615, 572), "T = " + to_string(r.ratio));
  v.require(r.status == Status::holds && r.ratio > 1, "T > 1");
  v.require(ms < kKeyValueLimitMs, "runtime");
  v.detail << " T(18,7,8,6,5) = " << to_string(r.ratio) << " in " << ms << " ms";
  return v;
}

int slot(Status s) {
  switch (s) {
    case Status::holds: return 0;
    case Status::excluded: return 1;
    case Status::violated: return 2;
  }
  return 2;
}

struct GridTally {
  std::map<std::string, std::array<std::uint64_t, 3>> counts;  // holds, excluded, violated
  std::vector<std::string> violations;
  std::uint64_t points = 0;
  std::uint64_t appendix_points = 0;
  std::uint64_t appendix_expected = 0;
  std::vector<std::string> errors;
};

GridTally run_grid() {
  GridTally g;
  SweepConfig config;  // t in [3,8], k in [t,t+12], n over 41 values from (t+1)(k-t+1)
  for_each_grid_point(config, [&](const SectionParams& p) {
    ++g.points;
    if (is_appendix_triple(p.s, p.i, p.t)) ++g.appendix_expected;
    try {
      const VerificationRecord r = verify_point(p);
      for (const CheckValue& c : r.checks) {
        ++g.counts[c.name][slot(c.status)];
        if (c.status == Status::violated) g.violations.push_back(c.name + " at " + to_string(p));
        if (c.name == "appendix") ++g.appendix_points;
      }
    } catch (const Error& e) {
      g.errors.push_back(e.what());
    }
  });
  return g;
}

std::string tally(const GridTally& g, const std::string& name) {
  const auto it = g.counts.find(name);
  if (it == g.counts.end()) return name + " missing";
  const auto& c = it->second;
  return name + " " + std::to_string(c[0]) + "/" + std::to_string(c[1]) + "/" +
         std::to_string(c[2]);
}

std::uint64_t violated(const GridTally& g, const std::string& name) {
  const auto it = g.counts.find(name);
  return it == g.counts.end() ? 0 : it->second[2];
}

Verdict key_sweep(const GridTally& g) {
  Verdict v;
  v.require(g.errors.empty(), std::to_string(g.errors.size()) + " integrity errors");
  v.require(g.points > 0, "empty grid");
  v.require(violated(g, "thm32") == 0, std::to_string(violated(g, "thm32")) + " violations");
  v.require(violated(g, "dual_forms") == 0 && violated(g, "ratio_identity") == 0,
            "auxiliary identities");
  v.detail << " " << g.points << " points; " << tally(g, "thm32")
           << " (holds/excluded/violated)";
  return v;
}

Verdict lemma_sweeps(const GridTally& g) {
  Verdict v;
  v.require(g.errors.empty(), std::to_string(g.errors.size()) + " integrity errors");
  for (const char* name : {"lemma33", "lemma34", "lemma35", "lemma36", "appendix"}) {
    v.require(violated(g, name) == 0, std::string(name) + " violated");
  }
  for (const char* name : {"lemma35", "lemma36"}) {
    const auto it = g.counts.find(name);
    v.require(it != g.counts.end() && it->second[1] == 0, std::string(name) + " excluded");
  }
  v.require(g.appendix_points == g.appendix_expected, "specialized forms missing");
  v.detail << " " << tally(g, "lemma33") << ", " << tally(g, "lemma34") << ", "
           << tally(g, "lemma35") << ", " << tally(g, "lemma36") << ", "
           << tally(g, "appendix");
  for (const auto& s : g.violations) {
    if (s.rfind("thm32", 0) != 0) v.detail << "; violated: " << s;
  }
  return v;
}

Verdict brute_force() {
  Verdict v;
  const auto start = Clock::now();
  const SearchResult p = brute_force_best(6, 2, 1, Objective::product);
  v.require(p.value == 25 && p.value == BigInt(oracle::binom(5, 1) * oracle::binom(5, 1)),
            "(6,2,1) product = " + to_string(p.value));
  const SearchResult s = brute_force_best(5, 3, 2, Objective::sum);
  v.require(s.value == 8 && s.value == oracle::sum_bound(5, 3, 2),
            "(5,3,2) sum = " + to_string(s.value));
  std::vector<Subset> four;
  for (const Subset& x : enumerate_k_subsets(4, 3).members()) {
    four.push_back(Subset::from_elements(5, x.elements()));
  }
  const UniformFamily c43 = UniformFamily::from_subsets(5, 3, four);
  v.require(std::any_of(s.witnesses.begin(), s.witnesses.end(),
                        [&](const Witness& w) { return *w.a == c43 && *w.b == c43; }),
            "C([4],3) witness");
  const SearchResult s6 = brute_force_best(6, 3, 2, Objective::sum);
  v.require(s6.value == 11 && s6.value == oracle::sum_bound(6, 3, 2),
            "(6,3,2) sum = " + to_string(s6.value));
  const double secs = seconds_since(start);
  v.require(secs < kBruteForceLimitS, "runtime");
  v.detail << " 25, 8, 11 in " << secs << " s";
  return v;
}

Verdict genset_search() {
  Verdict v;
  double worst = 0;
  const auto timed = [&](int n) {
    const auto start = Clock::now();
    SearchResult r = genset_search_best_product(n, 4, 3);
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    v.require(secs < kGensetLimitS, "runtime at n=" + std::to_string(n));
    return r;
  };
  const SearchResult r8 = timed(8);
  v.require(r8.value == 25, "(8,4,3) = " + to_string(r8.value));
  const UniformFamily star8 = frankl_family({8, 4, 3, 0});
  const UniformFamily f8 = frankl_family({8, 4, 3, 1});
  const auto has_pair = [](const SearchResult& r, const UniformFamily& f) {
    return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                       [&](const Witness& w) { return w.a && *w.a == f && *w.b == f; });
  };
  v.require(has_pair(r8, star8), "star witness at n=8");
  v.require(has_pair(r8, f8), "F(8,4,3,1) witness");
  const SearchResult r9 = timed(9);
  v.require(r9.value == 36, "(9,4,3) = " + to_string(r9.value));
  const UniformFamily star9 = frankl_family({9, 4, 3, 0});
  v.require(r9.witnesses.size() == 1 && has_pair(r9, star9), "star-only witness at n=9");
  const SearchResult r10 = timed(10);
  v.require(r10.value == 49, "(10,4,3) = " + to_string(r10.value));
  v.detail << " 25 (" << r8.witnesses.size() << " witnesses), 36 ("
           << r9.witnesses.size() << "), 49; slowest " << worst << " s";
  return v;
}

Verdict counting() {
  Verdict v;
  int frankl_cases = 0, frankl_bad = 0;
  for (int n = 1; n <= 14; ++n) {
    for (int k = 1; k <= std::min(n, 6); ++k) {
      for (int t = 1; t <= k; ++t) {
        for (int r = 0; t + 2 * r <= n; ++r) {
          ++frankl_cases;
          const FranklParams p{n, k, t, r};
          const BigInt size = frankl_size(p);
          if (size != BigInt(frankl_family(p).size()) ||
              size != BigInt(oracle::frankl_count(n, k, t, r))) {
            ++frankl_bad;
          }
        }
      }
    }
  }
  v.require(frankl_bad == 0, std::to_string(frankl_bad) + " Frankl size mismatches");
  v.detail << " " << frankl_cases << " Frankl sizes match enumeration;";
  for (int n : {10, 12}) {
    try {
      const Section4Report r = verify_section4_constructions(n, 6);
      std::size_t enumerated = 0;
      for (const auto& s : r.sizes) enumerated += s.enumerated.has_value();
      v.require(r.sizes_ok() && enumerated == r.sizes.size(),
                "generating-set sizes at n=" + std::to_string(n));
      int strict = 0, failed = 0, failed_in_domain = 0;
      for (const auto& c : r.comparisons) {
        if (c.claim.find("<=") != std::string::npos) continue;
        ++strict;
        if (!c.holds) {
          ++failed;
          failed_in_domain += c.in_domain;
        }
      }
      v.require(failed == 0, std::to_string(failed) + " of " + std::to_string(strict) +
                                 " strict comparisons fail at (" + std::to_string(n) +
                                 ",6), " + std::to_string(failed_in_domain) +
                                 " of them inside their stated range of n");
      v.detail << " (" << n << ",6): " << r.sizes.size() << " sizes ok, " << strict - failed
               << "/" << strict << " strict comparisons hold;";
    } catch (const Error& e) {
      v.require(false, e.what());
    }
  }
  return v;
}

Verdict properties() {
  Verdict v;
  gen::Rng rng(20260101);
  int shift_bad = 0;
  for (int trial = 0; trial < kShiftPairs; ++trial) {
    const int n = gen::uniform(rng, 4, 9);
    const int k = gen::uniform(rng, 2, std::min(4, n - 1));
    const int t = gen::uniform(rng, 1, k);
    const auto [a, b] = gen::random_cross_pair(rng, n, k, t);
    const int i = gen::uniform(rng, 1, n - 1);
    const int j = gen::uniform(rng, i + 1, n);
    const auto sa = shift_family(a, i, j);
    const auto sb = shift_family(b, i, j);
    if (sa.size() != a.size() || sb.size() != b.size() || !is_cross_t_intersecting(sa, sb, t)) {
      ++shift_bad;
    }
  }
  v.require(shift_bad == 0, std::to_string(shift_bad) + " shift failures");

  int matching_bad = 0;
  for (int checked = 0; checked < kMatchingFamilies;) {
    const int n = gen::uniform(rng, 2, 10);
    const int j = gen::uniform(rng, 1, n - 1);
    const auto f = gen::random_family(rng, n, j, 1, gen::uniform(rng, 2, 8));
    if (f.empty()) continue;
    ++checked;
    if (BigInt(shade(f).size()) * binomial(n, j) < BigInt(f.size()) * binomial(n, j + 1)) {
      ++matching_bad;
    }
  }
  v.require(matching_bad == 0, std::to_string(matching_bad) + " normalized-matching failures");

  int basefact_bad = 0;
  std::uniform_int_distribution<int> num(1, 1000), den(1, 50);
  const auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < kBasefactQuadruples; ++trial) {
    const auto [lhs, rhs] = basefact(draw(), draw(), draw(), draw());
    basefact_bad += lhs != rhs;
  }
  v.require(basefact_bad == 0, std::to_string(basefact_bad) + " basefact failures");

  int galois_bad = 0;
  for (int trial = 0; trial < kGaloisFamilies; ++trial) {
    const int n = gen::uniform(rng, 3, 8);
    const int k = gen::uniform(rng, 1, std::min(n, 4));
    const int t = gen::uniform(rng, 1, k);
    const auto a = gen::random_small_family(rng, n, k, gen::uniform(rng, 0, 4));
    const auto sub = gen::thin(rng, a);
    const auto cl = closure_t(a, t);
    const auto cl2 = closure_t(cl, t);
    bool ok = closure_t(cl2, t) == cl;
    for (auto w : a) ok = ok && cl2.contains(w);
    const auto cl_sub = closure_t(sub, t);
    for (auto w : cl) ok = ok && cl_sub.contains(w);
    galois_bad += !ok;
  }
  v.require(galois_bad == 0, std::to_string(galois_bad) + " closure failures");

  int dual_bad = 0;
  std::mt19937_64& r64 = rng;
  using D = std::uniform_int_distribution<std::int64_t>;
  for (int checked = 0; checked < kDualFormTuples;) {
    const std::int64_t t = D(3, 40)(r64);
    const std::int64_t k = D(t + 2, t + 60)(r64);
    const std::int64_t n0 = (t + 1) * (k - t + 1);
    const std::int64_t n = D(n0, n0 + 5000)(r64);
    const std::int64_t s = D(t + 3, 2 * k - t)(r64);
    const std::int64_t lo = std::max(t + 1, s + t - k), hi = std::min(k, (s + t) / 2);
    if (lo > hi) continue;
    ++checked;
    dual_bad += !core_forms({n, k, s, D(lo, hi)(r64), t}).agree();
  }
  v.require(dual_bad == 0, std::to_string(dual_bad) + " dual-form failures");
  v.detail << " shifts " << kShiftPairs << ", normalized matching " << kMatchingFamilies
           << ", basefact " << kBasefactQuadruples << ", closure " << kGaloisFamilies
           << ", dual forms " << kDualFormTuples;
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const Verdict& v) {
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << v.detail.str()
              << std::endl;
    failures += !v.pass;
  };
  report(1, key_value());
  const GridTally grid = run_grid();
  report(2, key_sweep(grid));
  report(3, lemma_sweeps(grid));
  report(4, brute_force());
  report(5, genset_search());
  report(6, counting());
  report(7, properties());
  return failures == 0 ? 0 : 1;
}
