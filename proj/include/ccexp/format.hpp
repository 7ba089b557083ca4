#pragma once

#include <string>
#include <string_view>

#include "ccexp/dfa.hpp"
#include "ccexp/dfao.hpp"

namespace ccexp {

// Bit-exact text format shared by the cache and the golden tests.
//
//   tracks: v1 v2 ... vk        (or "tracks: -" for a DFAO's anonymous input,
//                                or bare "tracks:" for a zero-track automaton)
//   kind: dfa                   (or "kind: dfao")
//   state 0 accept              (dfa)  /  state 0 out=7/3   (dfao)
//   ...one line per state, canonical order, state 0 initial...
//   0 00 1
//   ...one line per transition, (state, symbol) lexicographic order; the
//   middle field concatenates one digit per track ("-" when zero tracks)...
//
// UTF-8, LF endings, no trailing whitespace.

std::string to_text(const Dfa& a);
std::string to_text(const Dfao& m);

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

enum class AutomatonKind { Dfa, Dfao };
AutomatonKind sniff_kind(std::string_view text);

Dfa dfa_from_text(std::string_view text);
Dfao dfao_from_text(std::string_view text);

// Graphviz export: one node per state (doubled circle when accepting; DFAO
// nodes labeled "id/output"), edges labeled by digit tuples, an incoming
// arrow marking state 0.
std::string to_dot(const Dfa& a, const std::string& name = "dfa");
std::string to_dot(const Dfao& m, const std::string& name = "dfao");

}  // namespace ccexp
