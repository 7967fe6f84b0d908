#ifndef CCOMP_TOOLS_CLI_H_
#define CCOMP_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ccomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

// Runs one ccomp command. args excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ccomp::cli

#endif  // CCOMP_TOOLS_CLI_H_
