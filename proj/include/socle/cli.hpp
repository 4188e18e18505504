#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace socle {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitComputation = 3 };

/// $SOCLE_LAB_CACHE_DIR, else $XDG_CACHE_HOME/socle-lab, else ~/.cache/socle-lab.
std::optional<std::filesystem::path> default_cache_directory();

/// Runs one socle-lab invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace socle
