#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xtint/bigint.hpp"
#include "xtint/errors.hpp"
#include "xtint/family.hpp"
#include "xtint/gensets.hpp"

namespace xtint {

/// cl_t(A) = {B ∈ C([n],k) : |B ∩ A| >= t for all A ∈ A}. The empty family
/// has closure C([n],k).
UniformFamily closure_t(const UniformFamily& a, int t);

enum class Objective { product, sum };
enum class Method { brute, genset };

std::string to_string(Objective o);
std::string to_string(Method m);
/// Throws UsageError for unknown names.
Objective parse_objective(const std::string& text);
Method parse_method(const std::string& text);

struct Witness {
  BigInt size_a, size_b;
  std::optional<UniformFamily> a, b;  ///< present when the families were expanded
  std::optional<GenSet> ga, gb;       ///< present for genset search
};

struct SearchStats {
  std::uint64_t nodes = 0;      ///< search-tree nodes or candidate families visited
  std::uint64_t pruned = 0;
  std::uint64_t witnesses_total = 0;
  bool witnesses_truncated = false;
};

struct SearchResult {
  int n = 0, k = 0, t = 0;
  Objective objective = Objective::product;
  Method method = Method::brute;
  int s_max = 0;  ///< genset search only
  BigInt value;
  std::vector<Witness> witnesses;  ///< every optimal pair up to the witness cap, sorted
  SearchStats stats;
};

inline constexpr std::size_t kBruteForceCap = 22;
inline constexpr std::size_t kWitnessCap = 4096;

/// Enumerates every A ⊆ C([n],k) with partner B = cl_t(A). For the sum
/// objective both families must be nonempty. Throws CapacityError when
/// C(n,k) exceeds cap.
SearchResult brute_force_best(int n, int k, int t, Objective objective,
                              std::size_t cap = kBruteForceCap);

/// Thrown when the node budget runs out; carries the best found so far.
class SearchBudgetExceeded : public CapacityError {
 public:
  SearchBudgetExceeded(const std::string& what, SearchResult partial)
      : CapacityError(what), partial_(std::move(partial)) {}
  const SearchResult& partial() const { return partial_; }

 private:
  SearchResult partial_;
};

inline constexpr std::uint64_t kDefaultNodeCap = 50'000'000;
inline constexpr std::size_t kMaxTraces = 1024;

/// Maximizes |A||B| over left-compressed pairs whose generating sets live in
/// [s_max] (default 2k-t). A family is described by its traces F ∩ [s_max],
/// which form an up-set in the shifted order; B is the closure of A's traces.
/// Requires n >= s_max + 2(k-t) so that trace and family cross-intersection
/// coincide (OutOfScopeError otherwise).
SearchResult genset_search_best_product(int n, int k, int t,
                                        std::optional<int> s_max = std::nullopt,
                                        std::uint64_t node_cap = kDefaultNodeCap);

/// Brute force when C(n,k) <= kBruteForceCap, genset search otherwise.
SearchResult best_product(int n, int k, int t);

struct MainTheoremReport {
  SearchResult search;
  BigInt bound;                 ///< C(n-t,k-t)^2
  bool bound_holds = false;
  bool uniqueness_checked = false;  ///< n > (t+1)(k-t+1)
  bool star_only = false;           ///< every witness left-compresses to the star pair
};

MainTheoremReport verify_main_theorem_small(int n, int k, int t);

}  // namespace xtint
