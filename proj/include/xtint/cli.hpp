#pragma once

#include <iosfwd>

namespace xtint::cli {

/// Exit codes: 0 all checks passed, 1 usage error, 2 violation, integrity
/// or I/O failure. Machine output goes to `out` (or --out files), the human
/// summary to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace xtint::cli
