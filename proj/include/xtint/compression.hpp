#pragma once

#include "xtint/family.hpp"

namespace xtint {

/// The shift δ_ij of one member: replace j by i when j ∈ A, i ∉ A and the
/// shifted set is not already in the family; otherwise A is returned.
/// Throws UsageError if A is not a member, i == j, or i, j fall outside [n].
Subset shift_set(const Subset& a, int i, int j, const UniformFamily& family);

/// Δ_ij applied to every member; the result has the same size.
UniformFamily shift_family(const UniformFamily& family, int i, int j);

/// Repeats full sweeps of Δ_ij over all pairs i < j in lexicographic order
/// until a sweep changes nothing.
UniformFamily left_compress(const UniformFamily& family);

/// True iff Δ_ij fixes the family for every 1 <= i < j <= n.
bool is_left_compressed(const UniformFamily& family);

}  // namespace xtint
