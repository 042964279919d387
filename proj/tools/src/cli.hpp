#ifndef COMAX_TOOLS_CLI_HPP
#define COMAX_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace comax::cli
{

enum ExitCode
{
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2,
  exit_resource = 3,
  exit_io = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace comax::cli

#endif // COMAX_TOOLS_CLI_HPP
