#ifndef QUADCPG_TOOLS_CLI_H_
#define QUADCPG_TOOLS_CLI_H_

#include <iosfwd>

namespace quadcpg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

// Name of the environment variable holding a default registry overlay file.
inline constexpr const char* kRegistryEnvVar = "QUADCPG_REGISTRY";

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadcpg::cli

#endif  // QUADCPG_TOOLS_CLI_H_
