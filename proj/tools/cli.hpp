#ifndef LINCHOICE_TOOLS_CLI_HPP_
#define LINCHOICE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace linchoice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. JSON results and JSON
/// error objects go to `out`; help text goes to `out` as well. `in` backs
/// `validate -`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace linchoice::cli

#endif  // LINCHOICE_TOOLS_CLI_HPP_
