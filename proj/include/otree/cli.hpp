#ifndef OTREE_CLI_HPP
#define OTREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace otree::cli {

enum ExitCode { ok = 0, domain_error = 1, usage_error = 2 };

// Runs one command line (without the program name). Forest arguments given
// as "-" are read from `in`, one line each.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace otree::cli

#endif
