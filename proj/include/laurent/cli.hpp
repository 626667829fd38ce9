#ifndef LAURENT_CLI_HPP
#define LAURENT_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/core.hpp"

namespace laurent::cli {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr double kDefaultVerifyTol = 1e-10;
inline constexpr const char* kTolEnvVar = "TRACE_LAURENT_TOL";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitDomain = 3,
    kExitVerifyFailed = 4,
};

/// Malformed textual input (matrix, complex literal, angle).
class ParseError : public UsageError {
public:
    using UsageError::UsageError;
};

/// "a+bi" style literal: "2", "-1.5e-3", "3i", "-i", "1-2i".
Complex parse_complex(std::string_view text);

/// "a,b;c,d" with complex entries, rows separated by ';'.
Matrix2C parse_matrix(std::string_view text);

/// Decimal radians, or "pi/K" for a positive integer K.
double parse_theta(std::string_view text);

/// Tolerance for --verify: TRACE_LAURENT_TOL when set, else kDefaultVerifyTol.
double verify_tolerance();

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laurent::cli

#endif  // LAURENT_CLI_HPP
