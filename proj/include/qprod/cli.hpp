#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qprod {

/// Runs one subcommand: eval, chars, psi, verify or suite.
/// Exit codes: 0 success / all pass, 1 verification failure, 2 usage or
/// argument error (one-line diagnostic on `err`).
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qprod
