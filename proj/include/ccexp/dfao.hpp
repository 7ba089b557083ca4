#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccexp/dfa.hpp"

namespace ccexp {

// Deterministic automaton with output ("2-DFAO" when run on base-2 numerals).
// Same structural conventions as Dfa; instead of an accepting set each state
// carries an output symbol (kept as a string: "0", "7/3", "532", "undef", or
// comma-joined tuples from cross products).
//
// An empty track list means a single anonymous input track (the usual shape
// for sequence DFAOs, serialized as "tracks: -"); the alphabet is {0,1} then.
struct Dfao {
    std::vector<std::string> tracks;
    std::vector<State> next;            // indexed by (state << track_count) | symbol
    std::vector<std::string> output;    // one symbol per state

    std::size_t num_states() const noexcept { return output.size(); }
    int track_count() const noexcept {
        return tracks.empty() ? 1 : static_cast<int>(tracks.size());
    }
    int alphabet_size() const noexcept { return 1 << track_count(); }

    State step(State q, int symbol) const {
        return next[(std::size_t(q) << track_count()) | unsigned(symbol)];
    }

    const std::string& value_at_word(std::span<const int> symbols) const;
    const std::string& value(std::span<const std::uint64_t> values) const;
    // convenience for the single anonymous track
    const std::string& value1(std::uint64_t n) const;

    bool zero_robust() const { return num_states() == 0 || step(0, 0) == 0; }

    friend bool operator==(const Dfao&, const Dfao&) = default;
};

// Partition refinement seeded by output classes; canonical numbering.
Dfao minimize_dfao(const Dfao& m);

// Breadth-first reachable product with paired outputs "a,b".
// Inputs must be minimal (checked); the result is then minimal by
// construction, no extra minimization pass. Track lists must agree.
Dfao dfao_cross(const Dfao& m1, const Dfao& m2);

// A failed partition check in acceptors_to_dfao: some in-domain input is
// claimed by zero or by several acceptors.
class PartitionViolation : public std::runtime_error {
public:
    PartitionViolation(const std::string& what, std::vector<std::uint64_t> witness_)
        : std::runtime_error(what), witness(std::move(witness_)) {}
    std::vector<std::uint64_t> witness;  // decoded tuple, track order
};

struct LabeledAcceptor {
    Dfa dfa;
    std::string label;
};

// Combines disjoint acceptors into an output automaton: on an input accepted
// by exactly one acceptor the output is that acceptor's label; inputs outside
// every acceptor (and outside `domain`, when given) map to `undefined_label`.
// Inputs inside `domain` must be covered exactly once, else PartitionViolation.
Dfao acceptors_to_dfao(std::span<const LabeledAcceptor> acceptors,
                       const Dfa* domain,
                       const std::string& undefined_label = "undef");

// Acceptance as a 0/1-valued DFAO (outputs "1"/"0").
Dfao dfao_from_acceptor(const Dfa& a);

// Relabels outputs through a map; throws std::invalid_argument on a missing
// key. The map must be injective on the outputs that occur if minimality is
// to be preserved; callers re-minimize when unsure.
Dfao relabel_outputs(const Dfao& m,
                     const std::vector<std::pair<std::string, std::string>>& mapping);

std::vector<std::string> distinct_outputs(const Dfao& m);

}  // namespace ccexp
