#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccexp {

using State = std::uint32_t;

// Thrown when an intermediate construction would exceed the configured
// memory ceiling (CLI exit code 3).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Engine-wide accounting: a construction-size ceiling and a high-water mark
// for the largest intermediate automaton (states), reported by long runs.
struct EngineLimits {
    static std::uint64_t memory_ceiling_bytes;  // 0 = unlimited
    static std::size_t largest_intermediate;    // states, high-water mark

    static void reset_high_water() { largest_intermediate = 0; }
    // Called by every construction as it grows; throws ResourceLimitError
    // when the estimated transition-table footprint crosses the ceiling.
    static void note(std::size_t states, int track_count);
};

// Deterministic automaton over bit-tuple columns, one track per variable.
//
// Conventions (fixed so that equal-language automata are bit-identical):
//   - tracks are sorted lexicographically by name; track 0 contributes the
//     most significant bit of a symbol index, so lexicographic order on the
//     printed digit tuples equals numeric order on symbol indices;
//   - state 0 is initial; states are numbered breadth-first with symbols
//     scanned in increasing order;
//   - the transition map is total (dead sinks are real states);
//   - numerals are MSD-first, the empty word encodes the all-zero tuple,
//     and every automaton built here is zero-robust: step(0, all-zero) = 0.
struct Dfa {
    std::vector<std::string> tracks;
    std::vector<State> next;            // indexed by (state << track_count) | symbol
    std::vector<std::uint8_t> accept;   // one flag per state

    std::size_t num_states() const noexcept { return accept.size(); }
    int track_count() const noexcept { return static_cast<int>(tracks.size()); }
    int alphabet_size() const noexcept { return 1 << tracks.size(); }

    State step(State q, int symbol) const {
        return next[(std::size_t(q) << tracks.size()) | unsigned(symbol)];
    }

    bool accepts_word(std::span<const int> symbols) const;
    // values given in track order; encoded with enough columns for the widest
    bool accepts(std::span<const std::uint64_t> values) const;

    // states from which some accepting state is reachable ("live");
    // the difference from num_states() is the dead-sink share
    std::size_t live_state_count() const;

    bool zero_robust() const { return num_states() == 0 || step(0, 0) == 0; }

    static Dfa constant(bool value, std::vector<std::string> tracks);

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

enum class BoolOp { And, Or, AndNot, Xor, Implies, Iff };

Dfa product(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& a);
Dfa project(const Dfa& a, const std::string& track);
Dfa minimize_dfa(const Dfa& a);

// Adds tracks (columns the automaton ignores); track list is re-sorted.
Dfa cylindrify(const Dfa& a, const std::vector<std::string>& extra_tracks);
// Renames tracks (bijective on the affected names); re-sorts columns.
Dfa rename_tracks(const Dfa& a,
                  const std::vector<std::pair<std::string, std::string>>& renames);

struct EquivalenceResult {
    bool equivalent = false;
    // shortest distinguishing tuple, decoded per track order (absent if equivalent)
    std::optional<std::vector<std::uint64_t>> counterexample;
};
// Same track sets required; throws std::invalid_argument otherwise.
EquivalenceResult equivalent(const Dfa& a, const Dfa& b);

// The `count` least accepted tuples: shortest encoding first, lexicographic
// within a length (single track: increasing value); zero-padding duplicates
// skipped. Returns fewer when the language runs out.
std::vector<std::vector<std::uint64_t>> enumerate_accepted(const Dfa& a,
                                                           std::size_t count);

// Numeral plumbing shared by the engine and its callers.
std::vector<int> encode_tuple(std::span<const std::uint64_t> values, int track_count);
std::vector<std::uint64_t> decode_word(std::span<const int> symbols, int track_count);

}  // namespace ccexp
