#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galelab::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Environment variable holding the worker-thread count. Results do not
/// depend on it.
inline constexpr const char* kWorkersEnv = "GALELAB_WORKERS";

unsigned workers_from_env();

/// Parses "lo:hi:count" (inclusive, evenly spaced) or "a,b,c".
std::vector<double> parse_grid(const std::string& spec);

/// Entry point of the `galelab` binary; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for in-process use.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galelab::cli
