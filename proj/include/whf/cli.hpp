#pragma once

#include <iosfwd>

namespace whf {

/// Batch front-end. Subcommands: zak, check, tighten, bounds, plancherel,
/// selftest. Reports go to `out` as JSON; diagnostics and timing to `err`.
/// Exit codes: 0 success/tight, 1 well-formed but not tight (check),
/// 2 invalid input, 3 degenerate window, 4 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace whf
