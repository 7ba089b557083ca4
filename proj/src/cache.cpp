#include "ccexp/cache.hpp"

#include <fstream>
#include <sstream>

#include "ccexp/format.hpp"

namespace ccexp {

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskCache::path_for(const std::string& stem) const {
    return dir_ / (stem + ".aut");
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    // write-then-rename keeps interrupted runs from leaving torn files
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::optional<Dfa> DiskCache::load_predicate(const std::string& content_hash) const {
    auto text = read_file(path_for("pred-" + content_hash));
    if (!text) return std::nullopt;
    return dfa_from_text(*text);
}

void DiskCache::store_predicate(const std::string& content_hash, const Dfa& dfa) const {
    write_file(path_for("pred-" + content_hash), to_text(dfa));
}

bool DiskCache::has_named(const std::string& name) const {
    return std::filesystem::exists(path_for(name));
}

std::optional<Dfa> DiskCache::load_named_dfa(const std::string& name) const {
    auto text = read_file(path_for(name));
    if (!text) return std::nullopt;
    if (sniff_kind(*text) != AutomatonKind::Dfa) return std::nullopt;
    return dfa_from_text(*text);
}

std::optional<Dfao> DiskCache::load_named_dfao(const std::string& name) const {
    auto text = read_file(path_for(name));
    if (!text) return std::nullopt;
    if (sniff_kind(*text) != AutomatonKind::Dfao) return std::nullopt;
    return dfao_from_text(*text);
}

void DiskCache::store_named(const std::string& name, const Dfa& dfa) const {
    write_file(path_for(name), to_text(dfa));
}

void DiskCache::store_named(const std::string& name, const Dfao& dfao) const {
    write_file(path_for(name), to_text(dfao));
}

std::optional<std::string> DiskCache::named_text(const std::string& name) const {
    return read_file(path_for(name));
}

void DiskCache::clear() const {
    for (const auto& entry : std::filesystem::directory_iterator(dir_))
        if (entry.path().extension() == ".aut")
            std::filesystem::remove(entry.path());
}

}  // namespace ccexp
