#include "ccexp/format.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace ccexp {

namespace {

std::string symbol_digits(int symbol, int k) {
    if (k == 0) return "-";
    std::string digits(k, '0');
    for (int j = 0; j < k; ++j)
        digits[j] = char('0' + (symbol >> (k - 1 - j) & 1));
    return digits;
}

void append_transitions(std::string& text, const std::vector<State>& next,
                        std::size_t num_states, int k) {
    int nsym = 1 << k;
    for (std::size_t q = 0; q < num_states; ++q)
        for (int s = 0; s < nsym; ++s) {
            text += std::to_string(q);
            text += ' ';
            text += symbol_digits(s, k);
            text += ' ';
            text += std::to_string(next[(q << k) | unsigned(s)]);
            text += '\n';
        }
}

struct ParsedLines {
    std::vector<std::string> tracks;
    bool anonymous = false;  // "tracks: -"
    AutomatonKind kind = AutomatonKind::Dfa;
    std::vector<std::string> state_fields;      // third field of each state line
    std::vector<State> next;
    std::size_t num_states = 0;
    int track_count = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

std::uint64_t parse_number(std::string_view field, const char* context) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw FormatError(std::string("bad number in ") + context + ": '" +
                          std::string(field) + "'");
    return value;
}

ParsedLines parse_common(std::string_view text) {
    ParsedLines p;
    auto lines = split_lines(text);
    std::size_t at = 0;
    auto next_line = [&]() -> std::string_view {
        while (at < lines.size() && lines[at].empty()) ++at;
        if (at >= lines.size()) throw FormatError("unexpected end of automaton text");
        return lines[at++];
    };

    std::string_view header = next_line();
    if (!header.starts_with("tracks:"))
        throw FormatError("expected 'tracks:' header");
    for (auto field : split_fields(header.substr(7))) {
        if (field == "-") p.anonymous = true;
        else p.tracks.emplace_back(field);
    }
    if (p.anonymous && !p.tracks.empty())
        throw FormatError("'-' cannot be mixed with named tracks");

    std::string_view kind_line = next_line();
    if (kind_line == "kind: dfa") p.kind = AutomatonKind::Dfa;
    else if (kind_line == "kind: dfao") p.kind = AutomatonKind::Dfao;
    else throw FormatError("expected 'kind: dfa' or 'kind: dfao'");
    if (p.anonymous && p.kind == AutomatonKind::Dfa)
        throw FormatError("'tracks: -' is only for DFAOs");

    // state lines
    while (at < lines.size()) {
        std::string_view line = lines[at];
        if (line.empty()) { ++at; continue; }
        if (!line.starts_with("state ")) break;
        ++at;
        auto fields = split_fields(line);
        if (fields.size() != 3) throw FormatError("malformed state line");
        if (parse_number(fields[1], "state id") != p.state_fields.size())
            throw FormatError("state ids must be dense and in order");
        p.state_fields.emplace_back(fields[2]);
    }
    p.num_states = p.state_fields.size();
    if (p.num_states == 0) throw FormatError("automaton needs at least one state");

    p.track_count = p.anonymous ? 1 : int(p.tracks.size());
    int nsym = 1 << p.track_count;
    p.next.assign(p.num_states << p.track_count, State(~State(0)));

    while (at < lines.size()) {
        std::string_view line = lines[at++];
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != 3) throw FormatError("malformed transition line");
        std::uint64_t from = parse_number(fields[0], "transition source");
        std::uint64_t to = parse_number(fields[2], "transition target");
        if (from >= p.num_states || to >= p.num_states)
            throw FormatError("transition references unknown state");
        int symbol = 0;
        if (p.track_count == 0) {
            if (fields[1] != "-") throw FormatError("zero-track transitions use '-'");
        } else {
            if (int(fields[1].size()) != p.track_count)
                throw FormatError("digit tuple width mismatch");
            for (char c : fields[1]) {
                if (c != '0' && c != '1') throw FormatError("digits must be 0 or 1");
                symbol = symbol * 2 + (c - '0');
            }
        }
        std::size_t slot = (std::size_t(from) << p.track_count) | unsigned(symbol);
        if (p.track_count == 0) slot = std::size_t(from);
        if (p.next[slot] != State(~State(0)))
            throw FormatError("duplicate transition");
        p.next[slot] = State(to);
    }
    for (State t : p.next)
        if (t == State(~State(0)))
            throw FormatError("transition map is not total");
    return p;
}

// zero-track automata keep their single empty-tuple symbol
int effective_track_count(const std::vector<std::string>& tracks) {
    return int(tracks.size());
}

}  // namespace

std::string to_text(const Dfa& a) {
    std::string text = "tracks:";
    for (const auto& t : a.tracks) {
        text += ' ';
        text += t;
    }
    text += "\nkind: dfa\n";
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        text += "state ";
        text += std::to_string(q);
        text += a.accept[q] ? " accept\n" : " reject\n";
    }
    append_transitions(text, a.next, a.num_states(), effective_track_count(a.tracks));
    return text;
}

std::string to_text(const Dfao& m) {
    std::string text = "tracks:";
    if (m.tracks.empty()) {
        text += " -";
    } else {
        for (const auto& t : m.tracks) {
            text += ' ';
            text += t;
        }
    }
    text += "\nkind: dfao\n";
    for (std::size_t q = 0; q < m.num_states(); ++q) {
        text += "state ";
        text += std::to_string(q);
        text += " out=";
        text += m.output[q];
        text += '\n';
    }
    append_transitions(text, m.next, m.num_states(), m.track_count());
    return text;
}

AutomatonKind sniff_kind(std::string_view text) {
    for (auto line : split_lines(text)) {
        if (line == "kind: dfa") return AutomatonKind::Dfa;
        if (line == "kind: dfao") return AutomatonKind::Dfao;
    }
    throw FormatError("no 'kind:' line found");
}

Dfa dfa_from_text(std::string_view text) {
    ParsedLines p = parse_common(text);
    if (p.kind != AutomatonKind::Dfa) throw FormatError("expected a dfa");
    Dfa a;
    a.tracks = p.tracks;
    a.next = p.next;
    a.accept.reserve(p.num_states);
    for (const auto& field : p.state_fields) {
        if (field == "accept") a.accept.push_back(1);
        else if (field == "reject") a.accept.push_back(0);
        else throw FormatError("state flag must be accept or reject");
    }
    return a;
}

Dfao dfao_from_text(std::string_view text) {
    ParsedLines p = parse_common(text);
    if (p.kind != AutomatonKind::Dfao) throw FormatError("expected a dfao");
    Dfao m;
    m.tracks = p.tracks;
    m.next = p.next;
    m.output.reserve(p.num_states);
    for (const auto& field : p.state_fields) {
        if (!field.starts_with("out="))
            throw FormatError("dfao state line needs out=<symbol>");
        m.output.emplace_back(field.substr(4));
    }
    return m;
}

namespace {

template <typename GetLabel>
std::string dot_of(const std::string& name, std::size_t num_states, int k,
                   const std::vector<State>& next, GetLabel&& node_attrs) {
    int nsym = 1 << k;
    std::string dot = "digraph " + name + " {\n  rankdir=LR;\n";
    dot += "  __start [shape=point];\n  __start -> 0;\n";
    for (std::size_t q = 0; q < num_states; ++q)
        dot += "  " + std::to_string(q) + " [" + node_attrs(q) + "];\n";
    for (std::size_t q = 0; q < num_states; ++q) {
        // merge parallel edges into one label
        std::map<State, std::string> edges;
        for (int s = 0; s < nsym; ++s) {
            State t = next[(q << k) | unsigned(s)];
            std::string& label = edges[t];
            if (!label.empty()) label += ',';
            label += symbol_digits(s, k);
        }
        for (const auto& [t, label] : edges)
            dot += "  " + std::to_string(q) + " -> " + std::to_string(t) +
                   " [label=\"" + label + "\"];\n";
    }
    dot += "}\n";
    return dot;
}

}  // namespace

std::string to_dot(const Dfa& a, const std::string& name) {
    return dot_of(name, a.num_states(), effective_track_count(a.tracks), a.next,
                  [&](std::size_t q) {
                      return std::string(a.accept[q] ? "shape=doublecircle" : "shape=circle");
                  });
}

std::string to_dot(const Dfao& m, const std::string& name) {
    return dot_of(name, m.num_states(), m.track_count(), m.next, [&](std::size_t q) {
        return "shape=circle, label=\"" + std::to_string(q) + "/" + m.output[q] + "\"";
    });
}

}  // namespace ccexp
