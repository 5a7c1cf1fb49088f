#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bookfree::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;
/// Environment variable that replaces kDefaultSeed. An explicit --seed
/// still wins.
inline constexpr const char* kSeedEnv = "BOOKFREE_SEED";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFail = 2, kExitInternal = 3 };

/// Runs one `bookfree` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Inclusive integer range list: "7", "5..8", "3,5,9..11".
std::vector<int> parse_range(const std::string& text);

}  // namespace bookfree::cli
