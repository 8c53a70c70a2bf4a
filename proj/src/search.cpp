#include "xtint/search.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <unordered_map>

#include "xtint/compression.hpp"
#include "xtint/errors.hpp"
#include "xtint/frankl.hpp"

namespace xtint {

UniformFamily closure_t(const UniformFamily& a, int t) {
  const int n = a.n();
  const int k = a.k();
  if (n > kWordCap) throw CapacityError("closure_t: n exceeds the word cap");
  std::vector<Word> out;
  for_each_k_subset(n, k, [&](Word w) {
    for (Word x : a) {
      if (popcount(w & x) < t) return;
    }
    out.push_back(w);
  });
  return UniformFamily(n, k, std::move(out));
}

std::string to_string(Objective o) { return o == Objective::product ? "product" : "sum"; }
std::string to_string(Method m) { return m == Method::brute ? "brute" : "genset"; }

Objective parse_objective(const std::string& text) {
  if (text == "product") return Objective::product;
  if (text == "sum") return Objective::sum;
  throw UsageError("unknown objective '" + text + "' (product|sum)");
}

Method parse_method(const std::string& text) {
  if (text == "brute") return Method::brute;
  if (text == "genset") return Method::genset;
  throw UsageError("unknown method '" + text + "' (brute|genset)");
}

namespace {

void check_nkt(int n, int k, int t) {
  if (!(1 <= t && t <= k && k <= n)) throw UsageError("search needs 1 <= t <= k <= n");
}

bool witness_less(const Witness& x, const Witness& y) {
  if (x.a && y.a) {
    const auto xa = x.a->words(), ya = y.a->words();
    if (!std::equal(xa.begin(), xa.end(), ya.begin(), ya.end())) {
      return std::lexicographical_compare(xa.begin(), xa.end(), ya.begin(), ya.end());
    }
    const auto xb = x.b->words(), yb = y.b->words();
    return std::lexicographical_compare(xb.begin(), xb.end(), yb.begin(), yb.end());
  }
  if (x.ga && y.ga) {
    const auto xa = x.ga->elements(), ya = y.ga->elements();
    if (!std::equal(xa.begin(), xa.end(), ya.begin(), ya.end())) {
      return std::lexicographical_compare(xa.begin(), xa.end(), ya.begin(), ya.end());
    }
    const auto xb = x.gb->elements(), yb = y.gb->elements();
    return std::lexicographical_compare(xb.begin(), xb.end(), yb.begin(), yb.end());
  }
  return false;
}

}  // namespace

SearchResult brute_force_best(int n, int k, int t, Objective objective, std::size_t cap) {
  check_nkt(n, k, t);
  if (cap > 30) throw UsageError("brute force cap must be at most 30");
  if (binomial(n, k) > cap) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds the brute-force cap " + std::to_string(cap) +
                        "; use the genset search");
  }
  const UniformFamily all = enumerate_k_subsets(n, k);
  const auto words = all.words();
  const int size = static_cast<int>(words.size());
  std::vector<std::uint32_t> compat(size, 0);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (popcount(words[x] & words[y]) >= t) compat[x] |= std::uint32_t{1} << y;
    }
  }

  SearchResult result;
  result.n = n;
  result.k = k;
  result.t = t;
  result.objective = objective;
  result.method = Method::brute;
  std::int64_t best = -1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> found;
  const bool sum = objective == Objective::sum;

  std::function<void(int, std::uint32_t, std::uint32_t, int)> rec =
      [&](int idx, std::uint32_t a, std::uint32_t cl, int size_a) {
        ++result.stats.nodes;
        const std::int64_t size_b = popcount(cl);
        const std::int64_t reach = size_a + (size - idx);
        const std::int64_t bound = sum ? reach + size_b : reach * size_b;
        if (bound < best) {
          ++result.stats.pruned;
          return;
        }
        if (idx == size) {
          if (a == 0 || (sum && cl == 0)) return;
          const std::int64_t value = sum ? size_a + size_b : size_a * size_b;
          if (value > best) {
            best = value;
            found.clear();
            result.stats.witnesses_total = 0;
          }
          if (value == best) {
            ++result.stats.witnesses_total;
            if (found.size() < kWitnessCap) found.emplace_back(a, cl);
          }
          return;
        }
        rec(idx + 1, a | (std::uint32_t{1} << idx), cl & compat[idx], size_a + 1);
        rec(idx + 1, a, cl, size_a);
      };
  const std::uint32_t full = size == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1;
  rec(0, 0, full, 0);

  result.value = best < 0 ? 0 : best;
  result.stats.witnesses_truncated = result.stats.witnesses_total > found.size();
  const auto expand = [&](std::uint32_t mask) {
    std::vector<Word> out;
    for (int x = 0; x < size; ++x) {
      if (mask >> x & 1) out.push_back(words[x]);
    }
    return UniformFamily(n, k, std::move(out));
  };
  for (const auto& [a, b] : found) {
    Witness w;
    w.a = expand(a);
    w.b = expand(b);
    w.size_a = w.a->size();
    w.size_b = w.b->size();
    result.witnesses.push_back(std::move(w));
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(), witness_less);
  return result;
}

namespace {

using TraceBits = std::bitset<kMaxTraces>;

struct TraceSpace {
  int n = 0, k = 0, t = 0, s = 0;
  std::vector<Word> traces;    ///< ordered so that every stronger trace comes first
  std::vector<int> level;      ///< |X|
  std::vector<TraceBits> compat;
  std::vector<TraceBits> parents;
  std::vector<TraceBits> level_mask;  ///< indexed by |X|
  std::vector<BigInt> level_weight;   ///< C(n-s, k-|X|)
  std::vector<BigInt> suffix;         ///< weight of traces idx..end

  BigInt weight(const TraceBits& b) const {
    BigInt total = 0;
    for (int l = t; l < static_cast<int>(level_mask.size()); ++l) {
      total += level_weight[l] * static_cast<unsigned>((b & level_mask[l]).count());
    }
    return total;
  }
};

int element_sum(Word w) {
  int total = 0;
  for (int e = 1; w; ++e, w >>= 1) {
    if (w & 1) total += e;
  }
  return total;
}

TraceSpace build_space(int n, int k, int t, int s) {
  TraceSpace sp;
  sp.n = n;
  sp.k = k;
  sp.t = t;
  sp.s = s;
  const int top = std::min(k, s);
  for (int l = t; l <= top; ++l) {
    for_each_k_subset(s, l, [&](Word w) { sp.traces.push_back(w); });
  }
  if (sp.traces.size() > kMaxTraces) {
    throw CapacityError("genset search: " + std::to_string(sp.traces.size()) +
                        " traces exceed the limit " + std::to_string(kMaxTraces));
  }
  std::stable_sort(sp.traces.begin(), sp.traces.end(), [](Word x, Word y) {
    if (popcount(x) != popcount(y)) return popcount(x) > popcount(y);
    if (element_sum(x) != element_sum(y)) return element_sum(x) < element_sum(y);
    return x < y;
  });
  const std::size_t m = sp.traces.size();
  std::unordered_map<Word, std::size_t> index;
  for (std::size_t x = 0; x < m; ++x) index[sp.traces[x]] = x;
  sp.level.resize(m);
  sp.compat.resize(m);
  sp.parents.resize(m);
  sp.level_mask.resize(top + 1);
  sp.level_weight.resize(top + 1);
  for (int l = t; l <= top; ++l) sp.level_weight[l] = binomial(n - s, k - l);
  for (std::size_t x = 0; x < m; ++x) {
    const Word w = sp.traces[x];
    sp.level[x] = popcount(w);
    sp.level_mask[sp.level[x]].set(x);
    for (std::size_t y = 0; y < m; ++y) {
      if (popcount(w & sp.traces[y]) >= t) sp.compat[x].set(y);
    }
    const auto add_parent = [&](Word p) {
      const auto it = index.find(p);
      if (it == index.end()) return;
      if (it->second >= x) throw IntegrityError("genset search: trace order is not a linear extension");
      sp.parents[x].set(it->second);
    };
    for (int e = 1; e <= s; ++e) {
      const Word bit = Word{1} << (e - 1);
      if (!(w & bit)) {
        add_parent(w | bit);
      } else if (e >= 2 && !(w & (bit >> 1))) {
        add_parent((w & ~bit) | (bit >> 1));
      }
    }
  }
  sp.suffix.assign(m + 1, 0);
  for (std::size_t x = m; x-- > 0;) sp.suffix[x] = sp.suffix[x + 1] + sp.level_weight[sp.level[x]];
  return sp;
}

GenSet trace_genset(const TraceSpace& sp, const TraceBits& b) {
  std::vector<Subset> elements;
  for (std::size_t x = 0; x < sp.traces.size(); ++x) {
    if (b.test(x)) elements.emplace_back(sp.n, sp.traces[x]);
  }
  return minimal_elements(GenSet(sp.n, sp.k, std::move(elements)));
}

std::optional<UniformFamily> trace_family(const TraceSpace& sp, const TraceBits& b) {
  if (sp.n > kWordCap || binomial(sp.n, sp.k) > 1'000'000) return std::nullopt;
  std::unordered_map<Word, std::size_t> index;
  for (std::size_t x = 0; x < sp.traces.size(); ++x) index[sp.traces[x]] = x;
  const Word inner = ground_mask(sp.s);
  std::vector<Word> out;
  for_each_k_subset(sp.n, sp.k, [&](Word w) {
    const auto it = index.find(w & inner);
    if (it != index.end() && b.test(it->second)) out.push_back(w);
  });
  return UniformFamily(sp.n, sp.k, std::move(out));
}

}  // namespace

SearchResult genset_search_best_product(int n, int k, int t, std::optional<int> s_max,
                                        std::uint64_t node_cap) {
  check_nkt(n, k, t);
  const int s = s_max.value_or(2 * k - t);
  if (s < t || s > n || s > kWordCap) {
    throw UsageError("genset search needs t <= s_max <= min(n, 64)");
  }
  if (n < s + 2 * (k - t)) {
    throw OutOfScopeError("genset search needs n >= s_max + 2(k-t) = " +
                          std::to_string(s + 2 * (k - t)));
  }
  const TraceSpace sp = build_space(n, k, t, s);
  const std::size_t m = sp.traces.size();

  SearchResult result;
  result.n = n;
  result.k = k;
  result.t = t;
  result.objective = Objective::product;
  result.method = Method::genset;
  result.s_max = s;
  BigInt best = 0;
  std::vector<std::pair<TraceBits, TraceBits>> found;

  TraceBits full;
  for (std::size_t x = 0; x < m; ++x) full.set(x);

  const auto finish = [&]() {
    result.value = best;
    result.stats.witnesses_truncated = result.stats.witnesses_total > found.size();
    result.witnesses.clear();
    for (const auto& [a, b] : found) {
      Witness w;
      w.size_a = sp.weight(a);
      w.size_b = sp.weight(b);
      w.ga = trace_genset(sp, a);
      w.gb = trace_genset(sp, b);
      w.a = trace_family(sp, a);
      w.b = trace_family(sp, b);
      if (w.a && (BigInt(w.a->size()) != w.size_a || BigInt(w.b->size()) != w.size_b)) {
        throw IntegrityError("genset search: trace weights disagree with expanded families");
      }
      result.witnesses.push_back(std::move(w));
    }
    std::sort(result.witnesses.begin(), result.witnesses.end(), witness_less);
  };

  std::function<void(std::size_t, const TraceBits&, const BigInt&, const TraceBits&)> rec =
      [&](std::size_t idx, const TraceBits& in, const BigInt& w_in, const TraceBits& cl) {
        if (++result.stats.nodes > node_cap) {
          finish();
          throw SearchBudgetExceeded("genset search exceeded its node budget", result);
        }
        const BigInt w_cl = sp.weight(cl);
        if ((w_in + sp.suffix[idx]) * w_cl < best) {
          ++result.stats.pruned;
          return;
        }
        if (idx == m) {
          if (w_in == 0) return;
          const BigInt value = w_in * w_cl;
          if (value > best) {
            best = value;
            found.clear();
            result.stats.witnesses_total = 0;
          }
          if (value == best && value > 0) {
            ++result.stats.witnesses_total;
            if (found.size() < kWitnessCap) found.emplace_back(in, cl);
          }
          return;
        }
        if ((sp.parents[idx] & ~in).none()) {
          TraceBits with = in;
          with.set(idx);
          rec(idx + 1, with, w_in + sp.level_weight[sp.level[idx]], cl & sp.compat[idx]);
        }
        rec(idx + 1, in, w_in, cl);
      };
  rec(0, TraceBits{}, BigInt(0), full);
  finish();
  return result;
}

SearchResult best_product(int n, int k, int t) {
  check_nkt(n, k, t);
  if (binomial(n, k) <= kBruteForceCap) return brute_force_best(n, k, t, Objective::product);
  return genset_search_best_product(n, k, t);
}

MainTheoremReport verify_main_theorem_small(int n, int k, int t) {
  MainTheoremReport report;
  report.search = best_product(n, k, t);
  report.bound = binomial(n - t, k - t) * binomial(n - t, k - t);
  report.bound_holds = report.search.value <= report.bound;
  if (static_cast<std::int64_t>(n) > static_cast<std::int64_t>(t + 1) * (k - t + 1) &&
      !report.search.stats.witnesses_truncated) {
    const bool expanded = std::all_of(report.search.witnesses.begin(),
                                      report.search.witnesses.end(),
                                      [](const Witness& w) { return w.a.has_value(); });
    if (expanded) {
      report.uniqueness_checked = true;
      const UniformFamily star = frankl_family({n, k, t, 0});
      report.star_only = !report.search.witnesses.empty() &&
                         std::all_of(report.search.witnesses.begin(),
                                     report.search.witnesses.end(), [&](const Witness& w) {
                                       return left_compress(*w.a) == star &&
                                              left_compress(*w.b) == star;
                                     });
    }
  }
  return report;
}

}  // namespace xtint
