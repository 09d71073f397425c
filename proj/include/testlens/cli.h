#ifndef TESTLENS_CLI_H_
#define TESTLENS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace testlens {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out`, errors and warnings to `err`. Returns 0 on success, 1 when lint
// reported diagnostics, 2 on usage, I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace testlens

#endif  // TESTLENS_CLI_H_
