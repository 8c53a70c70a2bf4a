#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xtint/bigint.hpp"
#include "xtint/family.hpp"

namespace xtint {

/// A generating set: subsets of [n] of size at most k whose k-uniform up-set
/// is the family being described. Elements are kept in canonical word order.
class GenSet {
 public:
  GenSet() = default;
  /// Deduplicates; throws UsageError for an element larger than k or outside [n].
  GenSet(int n, int k, std::vector<Subset> elements);

  /// Compact notation used for small ground sets: {"123", "1245"}.
  /// Each character is one element in 1..9.
  static GenSet from_digits(int n, int k, std::initializer_list<std::string_view> elements);
  /// The family as a generating set of itself.
  static GenSet from_family(const UniformFamily& family);

  int n() const { return n_; }
  int k() const { return k_; }
  std::span<const Subset> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Subset& e) const;

  /// No element contains another.
  bool is_antichain() const;

  friend bool operator==(const GenSet&, const GenSet&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Subset> elements_;
};

/// U(g) ∩ C([n],k).
UniformFamily upset_k(const GenSet& g);

/// True iff upset_k(g) equals the family. (n,k) must match.
bool is_generating(const GenSet& g, const UniformFamily& family);

/// The ⊆-minimal elements of g.
GenSet minimal_elements(const GenSet& g);

/// Largest element of E. Throws UsageError for the empty set.
int s_plus(const Subset& e);
/// Largest element over all elements of g. Throws UsageError when g is empty
/// or contains the empty set.
int s_plus(const GenSet& g);

/// D(E) = {B ∈ C([n],k) : B ∩ [s⁺(E)] = E}. For E = ∅ this is all of C([n],k).
UniformFamily cell_D(const Subset& e, int k);

/// |D(E)| = C(n - s⁺(E), k - |E|) at an arbitrary ground set size n >= s⁺(E).
BigInt cell_size(const Subset& e, std::int64_t n, std::int64_t k);

enum class Validation {
  automatic,  ///< expand and compare when n is small enough (n <= 20)
  always,
  never,
};

/// Σ_{E ∈ g} C(n - s⁺(E), k - |E|): the size of upset_k(g) when g is a
/// minimal generating set of a left-compressed family whose D-cells
/// partition it. Validation expands upset_k(g) and throws IntegrityError when
/// the sum disagrees or g is not an antichain.
BigInt size_from_genset(const GenSet& g, std::int64_t n, std::int64_t k,
                        Validation validation = Validation::automatic);

/// A minimal generating set of the family whose D-cells partition it.
///
/// Scans candidate sets E ⊆ [n], |E| <= k, in size-then-canonical order and
/// keeps E when D(E) is a subset of the family and covers a member no kept
/// cell covers yet; then takes minimal elements. Throws IntegrityError when
/// the result does not generate the family.
GenSet minimal_genset(const UniformFamily& family);

/// True iff the D-cells of g are pairwise disjoint and their union is upset_k(g).
bool cells_partition(const GenSet& g);

/// g*_i: elements of size i that contain `top` (default s⁺(g)).
GenSet slice_top(const GenSet& g, int i);
GenSet slice_top(const GenSet& g, int i, int top);

/// Removes `top` from every element: g*_i(F)' when applied to a slice.
GenSet strip_top(const GenSet& g, int top);

/// Every element of a meets every element of b in at least t points.
bool gensets_cross_t_intersecting(const GenSet& a, const GenSet& b, int t);

enum class Direction {
  up_down,  ///< A grows by D(g*_i(A)'), B loses D(g*_{s+t-i}(B))
  down_up,  ///< A loses D(g*_i(A)), B grows by D(g*_{s+t-i}(B)')
};

std::string to_string(Direction d);

struct PerturbResult {
  std::optional<UniformFamily> first;   ///< A₁ (pair) or F₁ (single)
  std::optional<UniformFamily> second;  ///< B₁ (pair only)
  BigInt delta_first;                   ///< size change of the first family by formula
  BigInt delta_second;
  std::optional<BigInt> measured_first;  ///< |new| - |old| after expansion
  std::optional<BigInt> measured_second;
  /// After expansion: the pair is still cross-t-intersecting, or the single
  /// family is still t-intersecting.
  std::optional<bool> intersecting;
  int top = 0;  ///< s for pairs, ℓ for single families
  std::vector<std::string> flags;

  /// Measured deltas (when present) equal the formula deltas.
  bool deltas_consistent() const;
};

/// Moves mass between a maximal left-compressed cross-t-intersecting pair
/// along the slices g*_i(A) and g*_{s+t-i}(B), s = max(s⁺(gA), s⁺(gB)).
/// Expands the families when given. Throws UsageError when g*_i(A) is empty.
PerturbResult perturb_pair(const UniformFamily& a, const UniformFamily& b, const GenSet& ga,
                           const GenSet& gb, int i, int t, Direction direction);

/// Formula-only variant at arbitrary (n,k).
PerturbResult perturb_pair_counts(const GenSet& ga, const GenSet& gb, int i, int t,
                                  Direction direction, std::int64_t n, std::int64_t k);

/// F₁ = F ∪ D(g*_i(F)') \ D(g*_{ℓ+t-i}(F)) for a maximal left-compressed
/// t-intersecting family, ℓ = s⁺(gF). Throws UsageError when g*_i(F) is empty.
/// Flags "paired-slice-empty" when g*_{ℓ+t-i}(F) is empty and
/// "self-paired-slice" when i = ℓ+t-i.
PerturbResult perturb_single(const UniformFamily& f, const GenSet& gf, int i, int t);

struct PairingEntry {
  Subset element;
  int size = 0;
  std::optional<Subset> partner;
};

struct PairingReport {
  int s = 0;
  int t = 0;
  std::vector<PairingEntry> entries;

  bool all_paired() const;
  std::vector<PairingEntry> counterexamples() const;
};

/// For every E ∈ g*_i(A) (relative to s = max s⁺) looks for F ∈ g*_{s+t-i}(B)
/// with |E ∩ F| = t and E ∪ F = [s].
PairingReport pairing_check(const GenSet& ga, const GenSet& gb, int t);

}  // namespace xtint
