#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace ccexp {

// Run configuration shared by the CLI and the theorem runners.
// Resolution order: built-in defaults, then config file (key=value lines),
// then the CCEXP_CACHE_DIR environment variable, then command-line flags.
struct Config {
    std::filesystem::path cache_dir = ".ccexp-cache";
    std::uint64_t memory_ceiling_bytes = 0;  // 0 = unlimited
    std::uint64_t seed = 12345;              // randomized spot checks
    std::string sequence = "tm";             // "tm" | "pf"

    static Config load(const std::filesystem::path& config_file = {});
    void apply_environment();  // CCEXP_CACHE_DIR
};

}  // namespace ccexp
