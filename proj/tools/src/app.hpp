#ifndef MOCURVE_TOOLS_APP_HPP
#define MOCURVE_TOOLS_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mocurve::cli {

enum ExitCode { kOk = 0, kInputError = 2, kInternalError = 3 };

/// Runs one command line (args excludes the program name). Results go to out,
/// structured errors to err, and stdin-style input is read from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mocurve::cli

#endif  // MOCURVE_TOOLS_APP_HPP
