#pragma once

#include <iosfwd>
#include <string>

#include "xtint/family.hpp"
#include "xtint/gensets.hpp"

namespace xtint {

// Text format shared by families and generating sets:
//
//   n=<n> k=<k>
//   1,2,3
//   1,2,4
//
// One member per line as comma-separated ascending integers. Blank lines and
// lines starting with '#' are ignored. Generating-set files may also write an
// element in compact digit form ("1246") when n <= 9, and "{}" for the empty set.

void write_family(std::ostream& out, const UniformFamily& family);
std::string format_family(const UniformFamily& family);
/// Throws UsageError naming the line on malformed input.
UniformFamily read_family(std::istream& in);

void write_genset(std::ostream& out, const GenSet& g);
std::string format_genset(const GenSet& g);
GenSet read_genset(std::istream& in);

}  // namespace xtint
