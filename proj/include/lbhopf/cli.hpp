#ifndef LBHOPF_CLI_HPP
#define LBHOPF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lbhopf::cli {

enum ExitCode { ok = 0, domain_error = 1, usage_error = 2 };

// Runs one command line (without the program name). Output goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lbhopf::cli

#endif
