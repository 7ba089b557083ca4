#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ccexp/dfa.hpp"
#include "ccexp/dfao.hpp"

namespace ccexp {

// On-disk store for compiled automata, all in the text format.
// Two kinds of entries share one directory:
//   pred-<hash>.aut   content-addressed compiled predicates
//   <name>.aut        named artifacts (crep, dfao_prefix, ...), exportable
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<Dfa> load_predicate(const std::string& content_hash) const;
    void store_predicate(const std::string& content_hash, const Dfa& dfa) const;

    bool has_named(const std::string& name) const;
    std::optional<Dfa> load_named_dfa(const std::string& name) const;
    std::optional<Dfao> load_named_dfao(const std::string& name) const;
    void store_named(const std::string& name, const Dfa& dfa) const;
    void store_named(const std::string& name, const Dfao& dfao) const;
    // raw text of a named artifact, for export
    std::optional<std::string> named_text(const std::string& name) const;

    void clear() const;

private:
    std::filesystem::path path_for(const std::string& stem) const;
    std::filesystem::path dir_;
};

// FNV-1a 64-bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace ccexp
