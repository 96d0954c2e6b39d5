#ifndef KIRWAN_CLI_HPP
#define KIRWAN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kirwan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 1;
inline constexpr int kExitPrecondition = 2;
/// A bug: an exception that is neither a schema nor a precondition error.
inline constexpr int kExitInternal = 3;

/// Runs one command. args excludes the program name. The report goes to out
/// and diagnostics to err; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace kirwan

#endif
