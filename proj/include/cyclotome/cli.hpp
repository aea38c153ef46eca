#ifndef CYCLOTOME_CLI_HPP
#define CYCLOTOME_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclotome {

/// Runs the command-line front end. Exit status: 0 clean, 1 a mathematical
/// violation was found (with witnesses on stdout), 2 usage or environment
/// error. Reports go to `out`, human summaries and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclotome

#endif
