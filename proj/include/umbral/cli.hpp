#pragma once

#include <iosfwd>

namespace umbral {

/// Command-line dispatcher.  Data goes to `out`, diagnostics to `err`.
/// Exit status: 0 for success or a PASS verdict, 1 for FAIL verdicts,
/// 2 for usage and input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace umbral
