#include "xtint/gensets.hpp"

#include <algorithm>
#include <unordered_set>

#include "xtint/errors.hpp"

namespace xtint {
namespace {

// Calls fn(word) for every member of D(E) inside C([n],k).
template <typename Fn>
void for_each_in_cell(Word e, int n, int k, Fn&& fn) {
  const int top = e == 0 ? 0 : kWordCap - __builtin_clzll(e);
  const int rest = k - popcount(e);
  if (top > n || rest < 0) return;
  for_each_k_subset(n - top, rest, [&](Word tail) { fn(e | (tail << top)); });
}

// The same generating set viewed inside a (possibly larger) ground set.
GenSet rebase(const GenSet& g, int n, int k) {
  std::vector<Subset> elements;
  elements.reserve(g.size());
  for (const Subset& e : g.elements()) elements.emplace_back(n, e.bits());
  return GenSet(n, k, std::move(elements));
}

}  // namespace

GenSet::GenSet(int n, int k, std::vector<Subset> elements) : n_(n), k_(k) {
  if (n < 0 || n > kWordCap) throw CapacityError("generating set ground size outside [0, 64]");
  if (k < 0 || k > n) throw UsageError("generating set needs 0 <= k <= n");
  for (const Subset& e : elements) {
    if (e.n() != n) throw UsageError("generating set element has a different ground set");
    if (e.size() > k) {
      throw UsageError("generating set element " + to_string(e) + " is larger than k=" +
                       std::to_string(k));
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
}

GenSet GenSet::from_digits(int n, int k, std::initializer_list<std::string_view> elements) {
  std::vector<Subset> out;
  for (std::string_view text : elements) {
    std::vector<int> members;
    for (char c : text) {
      if (c < '1' || c > '9') throw UsageError("bad digit in generating set element");
      members.push_back(c - '0');
    }
    out.push_back(Subset::from_elements(n, members));
  }
  return GenSet(n, k, std::move(out));
}

GenSet GenSet::from_family(const UniformFamily& family) {
  return GenSet(family.n(), family.k(), family.members());
}

bool GenSet::contains(const Subset& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool GenSet::is_antichain() const {
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = 0; b < elements_.size(); ++b) {
      if (a != b && elements_[a].is_subset_of(elements_[b])) return false;
    }
  }
  return true;
}

UniformFamily upset_k(const GenSet& g) {
  std::vector<Word> out;
  for_each_k_subset(g.n(), g.k(), [&](Word w) {
    for (const Subset& e : g.elements()) {
      if ((e.bits() & ~w) == 0) {
        out.push_back(w);
        break;
      }
    }
  });
  return UniformFamily(g.n(), g.k(), std::move(out));
}

bool is_generating(const GenSet& g, const UniformFamily& family) {
  if (g.n() != family.n() || g.k() != family.k()) {
    throw UsageError("is_generating needs matching (n,k)");
  }
  return upset_k(g) == family;
}

GenSet minimal_elements(const GenSet& g) {
  std::vector<Subset> out;
  for (const Subset& e : g.elements()) {
    bool minimal = true;
    for (const Subset& other : g.elements()) {
      if (other != e && other.is_subset_of(e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return GenSet(g.n(), g.k(), std::move(out));
}

int s_plus(const Subset& e) {
  if (e.empty()) throw UsageError("s+ of the empty set is undefined");
  return e.max_element();
}

int s_plus(const GenSet& g) {
  if (g.empty()) throw UsageError("s+ of an empty generating set is undefined");
  int best = 0;
  for (const Subset& e : g.elements()) best = std::max(best, s_plus(e));
  return best;
}

UniformFamily cell_D(const Subset& e, int k) {
  std::vector<Word> out;
  for_each_in_cell(e.bits(), e.n(), k, [&](Word w) { out.push_back(w); });
  return UniformFamily(e.n(), k, std::move(out));
}

BigInt cell_size(const Subset& e, std::int64_t n, std::int64_t k) {
  const int top = e.max_element();
  if (n < top) throw UsageError("cell_size needs n >= s+(E)");
  return binomial(n - top, k - e.size());
}

BigInt size_from_genset(const GenSet& g, std::int64_t n, std::int64_t k, Validation validation) {
  BigInt total = 0;
  for (const Subset& e : g.elements()) total += cell_size(e, n, k);

  const bool expand = validation == Validation::always ||
                      (validation == Validation::automatic && n <= 20);
  if (!expand) return total;
  if (n > kWordCap) throw CapacityError("cannot expand a generating set beyond the word cap");
  if (!g.is_antichain()) {
    throw IntegrityError("size_from_genset: generating set is not an antichain");
  }
  for (const Subset& e : g.elements()) {
    if (e.max_element() > n) throw UsageError("generating set element outside [n]");
  }
  const GenSet wide = rebase(g, static_cast<int>(n), static_cast<int>(k));
  const UniformFamily family = upset_k(wide);
  if (BigInt(family.size()) != total) {
    throw IntegrityError("size_from_genset: cell sum " + to_string(total) +
                         " differs from expanded size " + std::to_string(family.size()));
  }
  return total;
}

GenSet minimal_genset(const UniformFamily& family) {
  const int n = family.n();
  const int k = family.k();
  std::vector<char> covered(family.size(), 0);
  auto index_of = [&](Word w) -> std::ptrdiff_t {
    const auto words = family.words();
    const auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) return -1;
    return it - words.begin();
  };

  std::vector<Subset> kept;
  std::vector<std::ptrdiff_t> cell;
  for (int m = 0; m <= k; ++m) {
    for_each_k_subset(n, m, [&](Word e) {
      cell.clear();
      bool inside = true;
      for_each_in_cell(e, n, k, [&](Word w) {
        if (!inside) return;
        const auto idx = index_of(w);
        if (idx < 0) {
          inside = false;
        } else {
          cell.push_back(idx);
        }
      });
      if (!inside || cell.empty()) return;
      const bool adds = std::any_of(cell.begin(), cell.end(),
                                    [&](std::ptrdiff_t idx) { return covered[idx] == 0; });
      if (!adds) return;
      for (auto idx : cell) covered[idx] = 1;
      kept.emplace_back(n, e);
    });
  }

  GenSet g = minimal_elements(GenSet(n, k, std::move(kept)));
  if (!is_generating(g, family)) {
    throw IntegrityError("minimal_genset: result does not generate the family");
  }
  return g;
}

bool cells_partition(const GenSet& g) {
  std::unordered_set<Word> seen;
  std::size_t total = 0;
  for (const Subset& e : g.elements()) {
    bool disjoint = true;
    for_each_in_cell(e.bits(), g.n(), g.k(), [&](Word w) {
      ++total;
      if (!seen.insert(w).second) disjoint = false;
    });
    if (!disjoint) return false;
  }
  return total == upset_k(g).size();
}

GenSet slice_top(const GenSet& g, int i) { return slice_top(g, i, s_plus(g)); }

GenSet slice_top(const GenSet& g, int i, int top) {
  std::vector<Subset> out;
  for (const Subset& e : g.elements()) {
    if (e.size() == i && e.contains(top)) out.push_back(e);
  }
  return GenSet(g.n(), g.k(), std::move(out));
}

GenSet strip_top(const GenSet& g, int top) {
  std::vector<Subset> out;
  for (const Subset& e : g.elements()) out.push_back(e.contains(top) ? e.without(top) : e);
  return GenSet(g.n(), g.k(), std::move(out));
}

bool gensets_cross_t_intersecting(const GenSet& a, const GenSet& b, int t) {
  for (const Subset& x : a.elements()) {
    for (const Subset& y : b.elements()) {
      if (popcount(x.bits() & y.bits()) < t) return false;
    }
  }
  return true;
}

std::string to_string(Direction d) { return d == Direction::up_down ? "up-down" : "down-up"; }

bool PerturbResult::deltas_consistent() const {
  if (measured_first && *measured_first != delta_first) return false;
  if (measured_second && *measured_second != delta_second) return false;
  return true;
}

namespace {

struct PairSlices {
  int s = 0;
  GenSet a_slice;
  GenSet b_slice;
};

PairSlices pair_slices(const GenSet& ga, const GenSet& gb, int i, int t) {
  PairSlices out;
  out.s = std::max(s_plus(ga), s_plus(gb));
  out.a_slice = slice_top(ga, i, out.s);
  if (out.a_slice.empty()) {
    throw UsageError("perturb_pair: slice g*_" + std::to_string(i) + "(A) is empty");
  }
  out.b_slice = slice_top(gb, out.s + t - i, out.s);
  return out;
}

void fill_pair_deltas(PerturbResult& r, const PairSlices& sl, int i, int t, Direction d,
                      std::int64_t n, std::int64_t k) {
  const std::int64_t s = sl.s;
  const BigInt a_count = sl.a_slice.size();
  const BigInt b_count = sl.b_slice.size();
  if (d == Direction::up_down) {
    r.delta_first = a_count * binomial(n - s, k - i + 1);
    r.delta_second = -(b_count * binomial(n - s, k + i - s - t));
  } else {
    r.delta_first = -(a_count * binomial(n - s, k - i));
    r.delta_second = b_count * binomial(n - s, k - s - t + i + 1);
  }
  r.top = sl.s;
  if (sl.b_slice.empty()) r.flags.emplace_back("paired-slice-empty");
}

// family ∪ D(E) for every E in the slice with `top` removed.
std::vector<Word> grow(const UniformFamily& family, const GenSet& slice, int top) {
  std::vector<Word> out(family.begin(), family.end());
  for (const Subset& e : slice.elements()) {
    for_each_in_cell(e.without(top).bits(), family.n(), family.k(),
                     [&](Word w) { out.push_back(w); });
  }
  return out;
}

// family \ D(E) for every E in the slice.
std::vector<Word> shrink(std::vector<Word> words, int n, int k, const GenSet& slice) {
  std::unordered_set<Word> drop;
  for (const Subset& e : slice.elements()) {
    for_each_in_cell(e.bits(), n, k, [&](Word w) { drop.insert(w); });
  }
  std::erase_if(words, [&](Word w) { return drop.count(w) != 0; });
  return words;
}

}  // namespace

PerturbResult perturb_pair_counts(const GenSet& ga, const GenSet& gb, int i, int t,
                                  Direction direction, std::int64_t n, std::int64_t k) {
  PerturbResult r;
  fill_pair_deltas(r, pair_slices(ga, gb, i, t), i, t, direction, n, k);
  return r;
}

PerturbResult perturb_pair(const UniformFamily& a, const UniformFamily& b, const GenSet& ga,
                           const GenSet& gb, int i, int t, Direction direction) {
  if (a.n() != b.n() || a.k() != b.k()) throw UsageError("perturb_pair needs matching (n,k)");
  const int n = a.n();
  const int k = a.k();
  const GenSet wa = rebase(ga, n, k);
  const GenSet wb = rebase(gb, n, k);
  const PairSlices sl = pair_slices(wa, wb, i, t);

  PerturbResult r;
  fill_pair_deltas(r, sl, i, t, direction, n, k);

  UniformFamily first;
  UniformFamily second;
  if (direction == Direction::up_down) {
    first = UniformFamily(n, k, grow(a, sl.a_slice, sl.s));
    second = UniformFamily(n, k, shrink({b.begin(), b.end()}, n, k, sl.b_slice));
  } else {
    first = UniformFamily(n, k, shrink({a.begin(), a.end()}, n, k, sl.a_slice));
    second = UniformFamily(n, k, grow(b, sl.b_slice, sl.s));
  }
  r.measured_first = BigInt(first.size()) - BigInt(a.size());
  r.measured_second = BigInt(second.size()) - BigInt(b.size());
  r.intersecting = is_cross_t_intersecting(first, second, t);
  r.first = std::move(first);
  r.second = std::move(second);
  return r;
}

PerturbResult perturb_single(const UniformFamily& f, const GenSet& gf, int i, int t) {
  const int n = f.n();
  const int k = f.k();
  const GenSet g = rebase(gf, n, k);
  const int top = s_plus(g);
  const GenSet up = slice_top(g, i, top);
  if (up.empty()) {
    throw UsageError("perturb_single: slice g*_" + std::to_string(i) + "(F) is empty");
  }
  const int paired_size = top + t - i;
  const GenSet down = slice_top(g, paired_size, top);

  PerturbResult r;
  r.top = top;
  r.delta_first = BigInt(up.size()) * binomial(n - top, k - i + 1) -
                  BigInt(down.size()) * binomial(n - top, k + i - top - t);
  r.delta_second = 0;
  if (down.empty()) r.flags.emplace_back("paired-slice-empty");
  if (paired_size == i) r.flags.emplace_back("self-paired-slice");

  UniformFamily next(n, k, shrink(grow(f, up, top), n, k, down));
  r.measured_first = BigInt(next.size()) - BigInt(f.size());
  r.intersecting = is_t_intersecting(next, t);
  r.first = std::move(next);
  return r;
}

bool PairingReport::all_paired() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const PairingEntry& e) { return e.partner.has_value(); });
}

std::vector<PairingEntry> PairingReport::counterexamples() const {
  std::vector<PairingEntry> out;
  for (const auto& e : entries) {
    if (!e.partner) out.push_back(e);
  }
  return out;
}

PairingReport pairing_check(const GenSet& ga, const GenSet& gb, int t) {
  if (ga.n() != gb.n()) throw UsageError("pairing_check needs gensets over the same ground set");
  PairingReport report;
  report.t = t;
  report.s = std::max(s_plus(ga), s_plus(gb));
  const Word full = ground_mask(report.s);
  for (const Subset& e : ga.elements()) {
    if (!e.contains(report.s)) continue;
    PairingEntry entry{e, e.size(), std::nullopt};
    const int want = report.s + t - e.size();
    for (const Subset& f : gb.elements()) {
      if (f.size() != want || !f.contains(report.s)) continue;
      if (popcount(e.bits() & f.bits()) == t && (e.bits() | f.bits()) == full) {
        entry.partner = f;
        break;
      }
    }
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace xtint
