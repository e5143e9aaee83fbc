#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpst::cli {

/// Parses and executes one command line (without the program name).
/// Reports go to `out`, the one-line "error: TAG: message" to `err`.
/// Returns the process exit status (0, 2, 3 or 4).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats x with 17 significant digits ("inf"/"nan" spelled out).
[[nodiscard]] std::string format_real(double x);

}  // namespace fpst::cli
