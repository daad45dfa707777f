#ifndef VGSB_TOOLS_CLI_HPP_
#define VGSB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace vgsb::cli {

  enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kLimit = 3 };

  // args excludes the program name. FILE "-" (or omitted) reads `in`.
  int run_command(std::vector<std::string> const& args, std::istream& in,
                  std::ostream& out, std::ostream& err);

}  // namespace vgsb::cli

#endif  // VGSB_TOOLS_CLI_HPP_
