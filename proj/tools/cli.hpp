#ifndef SEMIKIT_TOOLS_CLI_HPP_
#define SEMIKIT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace semikit::cli {

  inline constexpr int kExitSuccess  = 0;
  inline constexpr int kExitNegative = 1;
  inline constexpr int kExitInput    = 2;

  // args excludes the program name. The report goes to out, diagnostics to
  // err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace semikit::cli

#endif  // SEMIKIT_TOOLS_CLI_HPP_
