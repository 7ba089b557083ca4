#include "ccexp/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "internal.hpp"

namespace ccexp {

const std::string& Dfao::value_at_word(std::span<const int> symbols) const {
    State q = 0;
    for (int s : symbols) q = step(q, s);
    return output[q];
}

const std::string& Dfao::value(std::span<const std::uint64_t> values) const {
    if (int(values.size()) != track_count())
        throw std::invalid_argument("Dfao::value: arity mismatch");
    return value_at_word(encode_tuple(values, track_count()));
}

const std::string& Dfao::value1(std::uint64_t n) const {
    std::uint64_t values[1] = {n};
    return value(values);
}

namespace {

Dfao canonicalize(const Dfao& m) {
    std::size_t n = m.num_states();
    int k = m.track_count();
    int nsym = m.alphabet_size();
    constexpr State kUnseen = ~State(0);
    std::vector<State> renum(n, kUnseen);
    std::vector<State> order;
    order.reserve(n);
    renum[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        State q = order[head];
        for (int s = 0; s < nsym; ++s) {
            State t = m.step(q, s);
            if (renum[t] == kUnseen) {
                renum[t] = State(order.size());
                order.push_back(t);
            }
        }
    }
    Dfao out;
    out.tracks = m.tracks;
    out.next.resize(order.size() << k);
    out.output.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        State q = order[i];
        out.output[i] = m.output[q];
        for (int s = 0; s < nsym; ++s)
            out.next[(i << k) | unsigned(s)] = renum[m.step(q, s)];
    }
    return out;
}

}  // namespace

Dfao minimize_dfao(const Dfao& m) {
    std::size_t n = m.num_states();
    if (n == 0) throw std::invalid_argument("minimize_dfao: no states");
    int k = m.track_count();
    int nsym = m.alphabet_size();
    // seed the partition with output classes
    std::map<std::string, std::uint32_t> classes;
    std::vector<std::uint32_t> label(n);
    for (std::size_t q = 0; q < n; ++q)
        label[q] = classes.emplace(m.output[q], std::uint32_t(classes.size())).first->second;
    std::vector<std::uint32_t> cls = detail::refine_partition(n, nsym, m.next, label);
    std::uint32_t nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<State> rep(nclasses, ~State(0));
    for (std::size_t q = 0; q < n; ++q)
        if (rep[cls[q]] == ~State(0)) rep[cls[q]] = State(q);
    std::vector<std::uint32_t> place(nclasses);
    {
        std::vector<std::uint32_t> shuffle(nclasses);
        for (std::uint32_t c = 0; c < nclasses; ++c) shuffle[c] = c;
        std::swap(shuffle[cls[0]], shuffle[0]);
        for (std::uint32_t c = 0; c < nclasses; ++c) place[shuffle[c]] = c;
        std::vector<State> shuffled(nclasses);
        for (std::uint32_t c = 0; c < nclasses; ++c) shuffled[c] = rep[shuffle[c]];
        rep = std::move(shuffled);
    }
    Dfao quotient;
    quotient.tracks = m.tracks;
    quotient.next.resize(std::size_t(nclasses) << k);
    quotient.output.resize(nclasses);
    for (std::uint32_t c = 0; c < nclasses; ++c) {
        quotient.output[c] = m.output[rep[c]];
        for (int s = 0; s < nsym; ++s)
            quotient.next[(std::size_t(c) << k) | unsigned(s)] = place[cls[m.step(rep[c], s)]];
    }
    return canonicalize(quotient);
}

Dfao dfao_cross(const Dfao& m1, const Dfao& m2) {
    if (m1.tracks != m2.tracks)
        throw std::invalid_argument("dfao_cross: track lists differ");
    if (minimize_dfao(m1) != m1 || minimize_dfao(m2) != m2)
        throw std::invalid_argument("dfao_cross: inputs must be minimal");
    int k = m1.track_count();
    int nsym = m1.alphabet_size();
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::uint64_t> pairs;
    auto intern = [&](State a, State b) {
        std::uint64_t key = (std::uint64_t(a) << 32) | b;
        auto [it, fresh] = ids.emplace(key, State(pairs.size()));
        if (fresh) {
            pairs.push_back(key);
            EngineLimits::note(pairs.size(), k);
        }
        return it->second;
    };
    Dfao out;
    out.tracks = m1.tracks;
    intern(0, 0);
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        State a = State(pairs[head] >> 32);
        State b = State(pairs[head] & 0xffffffffu);
        out.next.resize((head + 1) * std::size_t(nsym));
        for (int s = 0; s < nsym; ++s)
            out.next[head * nsym + s] = intern(m1.step(a, s), m2.step(b, s));
        out.output.push_back(m1.output[a] + "," + m2.output[b]);
    }
    // minimal already: states of minimal factors are pairwise distinguishable,
    // so distinct reachable pairs stay distinct (and the BFS order is canonical)
    return out;
}

Dfao dfao_from_acceptor(const Dfa& a) {
    Dfao out;
    out.tracks = a.tracks;
    if (out.tracks.empty())
        throw std::invalid_argument("dfao_from_acceptor: needs at least one track");
    out.next = a.next;
    out.output.reserve(a.num_states());
    for (std::uint8_t f : a.accept) out.output.push_back(f ? "1" : "0");
    return out;
}

Dfao acceptors_to_dfao(std::span<const LabeledAcceptor> acceptors,
                       const Dfa* domain,
                       const std::string& undefined_label) {
    if (acceptors.empty())
        throw std::invalid_argument("acceptors_to_dfao: no acceptors");
    std::vector<std::string> tracks;
    for (const auto& [dfa, label] : acceptors)
        tracks.insert(tracks.end(), dfa.tracks.begin(), dfa.tracks.end());
    if (domain) tracks.insert(tracks.end(), domain->tracks.begin(), domain->tracks.end());
    std::sort(tracks.begin(), tracks.end());
    tracks.erase(std::unique(tracks.begin(), tracks.end()), tracks.end());

    std::vector<Dfa> parts;
    parts.reserve(acceptors.size() + 1);
    for (const auto& [dfa, label] : acceptors) parts.push_back(cylindrify(dfa, tracks));
    if (domain) parts.push_back(cylindrify(*domain, tracks));

    int k = int(tracks.size());
    int nsym = 1 << k;
    std::size_t width = parts.size();

    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>> tuples;
    std::vector<std::pair<std::int64_t, int>> trace;  // (parent, symbol)
    auto intern = [&](std::vector<State> tuple, std::int64_t parent, int symbol) {
        auto [it, fresh] = ids.emplace(std::move(tuple), State(tuples.size()));
        if (fresh) {
            tuples.push_back(it->first);
            trace.emplace_back(parent, symbol);
            EngineLimits::note(tuples.size(), k);
        }
        return it->second;
    };
    auto witness_of = [&](State id) {
        std::vector<int> word;
        for (State q = id; trace[q].first >= 0; q = State(trace[q].first))
            word.push_back(trace[q].second);
        std::reverse(word.begin(), word.end());
        return decode_word(word, k);
    };

    Dfao out;
    out.tracks = tracks;
    intern(std::vector<State>(width, 0), -1, 0);
    for (std::size_t head = 0; head < tuples.size(); ++head) {
        std::vector<State> current = tuples[head];
        int hits = 0;
        const std::string* label = nullptr;
        for (std::size_t j = 0; j < acceptors.size(); ++j)
            if (parts[j].accept[current[j]]) {
                ++hits;
                label = &acceptors[j].label;
            }
        bool in_domain = domain == nullptr || parts.back().accept[current.back()] != 0;
        if (hits >= 2)
            throw PartitionViolation("acceptors_to_dfao: input accepted by several acceptors",
                                     witness_of(State(head)));
        if (hits == 0 && in_domain)
            throw PartitionViolation("acceptors_to_dfao: in-domain input accepted by no acceptor",
                                     witness_of(State(head)));
        out.output.push_back(hits == 1 ? *label : undefined_label);
        out.next.resize((head + 1) * std::size_t(nsym));
        for (int s = 0; s < nsym; ++s) {
            std::vector<State> successor(width);
            for (std::size_t j = 0; j < width; ++j)
                successor[j] = parts[j].step(current[j], s);
            out.next[head * nsym + s] = intern(std::move(successor), std::int64_t(head), s);
        }
    }
    return minimize_dfao(out);
}

Dfao relabel_outputs(const Dfao& m,
                     const std::vector<std::pair<std::string, std::string>>& mapping) {
    Dfao out = m;
    for (auto& o : out.output) {
        bool found = false;
        for (const auto& [from, to] : mapping)
            if (o == from) {
                o = to;
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("relabel_outputs: no mapping for output '" + o + "'");
    }
    return out;
}

std::vector<std::string> distinct_outputs(const Dfao& m) {
    std::set<std::string> seen(m.output.begin(), m.output.end());
    return {seen.begin(), seen.end()};
}

}  // namespace ccexp
