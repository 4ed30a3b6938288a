#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqtori::cli {

enum class OutputFormat { plain, csv, json };

// Floats are printed with 12 significant digits; integral values keep a
// trailing ".0" so they read as reals.
std::string format_real(double x);

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out`, diagnostics to `err`. Returns 0 on success, 2 on usage errors and
// 1 on runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sqtori::cli
