#ifndef RNASTRUCT_TOOLS_CLI_HH
#define RNASTRUCT_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace rnastruct::cli {

    enum ExitCode : int { kOk = 0, kNoOccurrence = 1, kInputError = 2 };

    /// args[0] is the program name
    int
    run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rnastruct::cli

#endif // RNASTRUCT_TOOLS_CLI_HH
