#include "ccexp/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ccexp {

namespace {

std::string trim(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Config Config::load(const std::filesystem::path& config_file) {
    Config config;
    if (config_file.empty()) return config;
    std::ifstream in(config_file);
    if (!in)
        throw std::invalid_argument("cannot read config file " + config_file.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(entry.substr(0, eq));
        std::string value = trim(entry.substr(eq + 1));
        if (key == "cache_dir") config.cache_dir = value;
        else if (key == "memory_ceiling_bytes") config.memory_ceiling_bytes = std::stoull(value);
        else if (key == "seed") config.seed = std::stoull(value);
        else if (key == "sequence") config.sequence = value;
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    return config;
}

void Config::apply_environment() {
    if (const char* dir = std::getenv("CCEXP_CACHE_DIR")) cache_dir = dir;
}

}  // namespace ccexp
