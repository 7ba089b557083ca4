#include "ccexp/dfa.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "internal.hpp"

namespace ccexp {

std::uint64_t EngineLimits::memory_ceiling_bytes = 0;
std::size_t EngineLimits::largest_intermediate = 0;

void EngineLimits::note(std::size_t states, int track_count) {
    if (states > largest_intermediate) largest_intermediate = states;
    if (memory_ceiling_bytes != 0) {
        std::uint64_t bytes = std::uint64_t(states) * (std::uint64_t(1) << track_count) *
                              sizeof(State);
        if (bytes > memory_ceiling_bytes)
            throw ResourceLimitError("construction exceeds the memory ceiling (" +
                                     std::to_string(states) + " states)");
    }
}

// ---------------------------------------------------------------------------
// Numeral plumbing.

std::vector<int> encode_tuple(std::span<const std::uint64_t> values, int track_count) {
    int width = 0;
    for (std::uint64_t v : values)
        width = std::max(width, v == 0 ? 0 : 64 - std::countl_zero(v));
    std::vector<int> symbols(width, 0);
    for (int column = 0; column < width; ++column) {
        int symbol = 0;
        for (int j = 0; j < track_count; ++j)
            symbol |= int(values[j] >> (width - 1 - column) & 1) << (track_count - 1 - j);
        symbols[column] = symbol;
    }
    return symbols;
}

std::vector<std::uint64_t> decode_word(std::span<const int> symbols, int track_count) {
    std::vector<std::uint64_t> values(track_count, 0);
    for (int symbol : symbols)
        for (int j = 0; j < track_count; ++j)
            values[j] = values[j] * 2 + (symbol >> (track_count - 1 - j) & 1);
    return values;
}

// ---------------------------------------------------------------------------
// Dfa basics.

bool Dfa::accepts_word(std::span<const int> symbols) const {
    State q = 0;
    for (int s : symbols) q = step(q, s);
    return accept[q] != 0;
}

bool Dfa::accepts(std::span<const std::uint64_t> values) const {
    if (int(values.size()) != track_count())
        throw std::invalid_argument("accepts: arity mismatch");
    return accepts_word(encode_tuple(values, track_count()));
}

std::size_t Dfa::live_state_count() const {
    std::size_t n = num_states();
    int nsym = alphabet_size();
    std::vector<std::vector<State>> preds(n);
    for (State q = 0; State(q) < n; ++q)
        for (int s = 0; s < nsym; ++s) preds[step(q, s)].push_back(q);
    std::vector<std::uint8_t> live(n, 0);
    std::deque<State> queue;
    for (State q = 0; State(q) < n; ++q)
        if (accept[q]) { live[q] = 1; queue.push_back(q); }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : preds[q])
            if (!live[p]) { live[p] = 1; queue.push_back(p); }
    }
    return std::size_t(std::count(live.begin(), live.end(), std::uint8_t(1)));
}

Dfa Dfa::constant(bool value, std::vector<std::string> tracks) {
    std::sort(tracks.begin(), tracks.end());
    if (std::adjacent_find(tracks.begin(), tracks.end()) != tracks.end())
        throw std::invalid_argument("constant: duplicate track names");
    Dfa a;
    a.tracks = std::move(tracks);
    a.next.assign(std::size_t(a.alphabet_size()), 0);
    a.accept.assign(1, value ? 1 : 0);
    return a;
}

// ---------------------------------------------------------------------------
// Canonical numbering: breadth-first from the initial state, symbols in
// increasing order; unreachable states are dropped.

namespace {

Dfa canonicalize(const Dfa& a) {
    std::size_t n = a.num_states();
    int nsym = a.alphabet_size();
    constexpr State kUnseen = ~State(0);
    std::vector<State> renum(n, kUnseen);
    std::vector<State> order;
    order.reserve(n);
    renum[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        State q = order[head];
        for (int s = 0; s < nsym; ++s) {
            State t = a.step(q, s);
            if (renum[t] == kUnseen) {
                renum[t] = State(order.size());
                order.push_back(t);
            }
        }
    }
    Dfa out;
    out.tracks = a.tracks;
    out.next.resize(order.size() << a.tracks.size());
    out.accept.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        State q = order[i];
        out.accept[i] = a.accept[q];
        for (int s = 0; s < nsym; ++s)
            out.next[(i << a.tracks.size()) | unsigned(s)] = renum[a.step(q, s)];
    }
    return out;
}

}  // namespace

// Partition refinement (Hopcroft's splitter worklist) starting from the given
// initial labels; returns the class of each state. The final partition is the
// coarsest congruence refining the labels, so it is unique and the caller's
// breadth-first renumbering makes the whole pipeline canonical.
std::vector<std::uint32_t> detail::refine_partition(std::size_t n, int nsym,
                                                    const std::vector<State>& next,
                                                    const std::vector<std::uint32_t>& label) {
    // inverse edges, CSR per symbol
    std::vector<std::uint32_t> offsets(std::size_t(nsym) * n + 1, 0);
    std::vector<State> preds(n * std::size_t(nsym));
    {
        auto idx = [&](std::size_t q, int s) { return q * nsym + std::size_t(s); };
        std::vector<std::uint32_t> counts(std::size_t(nsym) * n, 0);
        for (std::size_t q = 0; q < n; ++q)
            for (int s = 0; s < nsym; ++s) ++counts[std::size_t(s) * n + next[idx(q, s)]];
        std::uint32_t running = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            offsets[i] = running;
            running += counts[i];
        }
        offsets[counts.size()] = running;
        std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (std::size_t q = 0; q < n; ++q)
            for (int s = 0; s < nsym; ++s)
                preds[cursor[std::size_t(s) * n + next[idx(q, s)]]++] = State(q);
    }
    auto pred_range = [&](int s, State q) {
        std::size_t i = std::size_t(s) * n + q;
        return std::pair<const State*, const State*>(preds.data() + offsets[i],
                                                     preds.data() + offsets[i + 1]);
    };

    // partition structure: states grouped contiguously per block
    std::vector<State> elems(n);
    std::vector<std::uint32_t> loc(n), blk(n);
    std::vector<std::uint32_t> bfirst, bpast;
    {
        // dense-compress labels, group states by label
        std::unordered_map<std::uint32_t, std::uint32_t> dense;
        std::vector<std::uint32_t> compact(n);
        for (std::size_t q = 0; q < n; ++q) {
            auto [it, fresh] = dense.emplace(label[q], std::uint32_t(dense.size()));
            compact[q] = it->second;
        }
        std::uint32_t nblocks = std::uint32_t(dense.size());
        std::vector<std::uint32_t> counts(nblocks, 0);
        for (std::size_t q = 0; q < n; ++q) ++counts[compact[q]];
        bfirst.resize(nblocks);
        bpast.resize(nblocks);
        std::uint32_t running = 0;
        for (std::uint32_t b = 0; b < nblocks; ++b) {
            bfirst[b] = running;
            running += counts[b];
            bpast[b] = running;
        }
        std::vector<std::uint32_t> cursor(bfirst);
        for (std::size_t q = 0; q < n; ++q) {
            std::uint32_t b = compact[q];
            elems[cursor[b]] = State(q);
            loc[q] = cursor[b]++;
            blk[q] = b;
        }
    }

    std::deque<std::uint64_t> work;
    std::unordered_set<std::uint64_t> in_work;
    auto push_work = [&](std::uint32_t b, int s) {
        std::uint64_t key = std::uint64_t(b) * unsigned(nsym) + unsigned(s);
        if (in_work.insert(key).second) work.push_back(key);
    };
    for (std::uint32_t b = 0; b < bfirst.size(); ++b)
        for (int s = 0; s < nsym; ++s) push_work(b, s);

    std::vector<std::uint32_t> mark_count(bfirst.size(), 0);
    std::vector<std::uint8_t> marked(n, 0);
    std::vector<State> splitter;
    std::vector<std::uint32_t> touched;

    while (!work.empty()) {
        std::uint64_t key = work.front();
        work.pop_front();
        in_work.erase(key);
        std::uint32_t B = std::uint32_t(key / unsigned(nsym));
        int a = int(key % unsigned(nsym));

        splitter.assign(elems.begin() + bfirst[B], elems.begin() + bpast[B]);
        touched.clear();
        for (State q : splitter) {
            auto [lo, hi] = pred_range(a, q);
            for (const State* it = lo; it != hi; ++it) {
                State p = *it;
                if (marked[p]) continue;
                std::uint32_t b = blk[p];
                if (mark_count[b] == 0) touched.push_back(b);
                // swap p into the marked prefix of its block
                std::uint32_t dest = bfirst[b] + mark_count[b];
                State other = elems[dest];
                std::swap(elems[loc[p]], elems[dest]);
                std::swap(loc[p], loc[other]);
                marked[p] = 1;
                ++mark_count[b];
            }
        }
        for (std::uint32_t b : touched) {
            std::uint32_t mc = mark_count[b];
            mark_count[b] = 0;
            std::uint32_t size = bpast[b] - bfirst[b];
            if (mc == size) {
                for (std::uint32_t i = bfirst[b]; i < bfirst[b] + mc; ++i)
                    marked[elems[i]] = 0;
                continue;
            }
            // new block takes the marked prefix
            std::uint32_t b2 = std::uint32_t(bfirst.size());
            bfirst.push_back(bfirst[b]);
            bpast.push_back(bfirst[b] + mc);
            bfirst[b] += mc;
            mark_count.push_back(0);
            for (std::uint32_t i = bfirst[b2]; i < bpast[b2]; ++i) {
                marked[elems[i]] = 0;
                blk[elems[i]] = b2;
            }
            std::uint32_t smaller = (mc <= size - mc) ? b2 : b;
            for (int s = 0; s < nsym; ++s) {
                std::uint64_t bkey = std::uint64_t(b) * unsigned(nsym) + unsigned(s);
                if (in_work.count(bkey)) push_work(b2, s);
                else push_work(smaller, s);
            }
        }
    }
    return {blk.begin(), blk.end()};
}

Dfa minimize_dfa(const Dfa& a) {
    std::size_t n = a.num_states();
    if (n == 0) throw std::invalid_argument("minimize_dfa: no states");
    int nsym = a.alphabet_size();
    std::vector<std::uint32_t> label(n);
    for (std::size_t q = 0; q < n; ++q) label[q] = a.accept[q];
    std::vector<std::uint32_t> cls = detail::refine_partition(n, nsym, a.next, label);
    std::uint32_t nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
    Dfa quotient;
    quotient.tracks = a.tracks;
    quotient.next.assign(std::size_t(nclasses) << a.tracks.size(), 0);
    quotient.accept.assign(nclasses, 0);
    std::vector<State> rep(nclasses, ~State(0));
    for (std::size_t q = 0; q < n; ++q)
        if (rep[cls[q]] == ~State(0)) rep[cls[q]] = State(q);
    // renumber so the initial class is 0 (canonicalize redoes the rest)
    std::vector<std::uint32_t> shuffle(nclasses);
    for (std::uint32_t c = 0; c < nclasses; ++c) shuffle[c] = c;
    std::swap(shuffle[cls[0]], shuffle[0]);
    std::vector<std::uint32_t> place(nclasses);
    for (std::uint32_t c = 0; c < nclasses; ++c) place[shuffle[c]] = c;
    for (std::uint32_t c = 0; c < nclasses; ++c) {
        State r = rep[shuffle[c]];
        quotient.accept[c] = a.accept[r];
        for (int s = 0; s < nsym; ++s)
            quotient.next[(std::size_t(c) << a.tracks.size()) | unsigned(s)] =
                place[cls[a.step(r, s)]];
    }
    EngineLimits::note(quotient.num_states(), quotient.track_count());
    return canonicalize(quotient);
}

// ---------------------------------------------------------------------------
// Product with implicit cylindrification.

namespace {

// for each product symbol, the restriction to a sub-track-list's symbol
std::vector<int> restriction_table(const std::vector<std::string>& product_tracks,
                                   const std::vector<std::string>& sub_tracks) {
    int k = int(product_tracks.size());
    int ksub = int(sub_tracks.size());
    std::vector<int> position(ksub, 0);
    for (int j = 0; j < ksub; ++j) {
        auto it = std::find(product_tracks.begin(), product_tracks.end(), sub_tracks[j]);
        if (it == product_tracks.end())
            throw std::invalid_argument("restriction_table: missing track");
        position[j] = int(it - product_tracks.begin());
    }
    std::vector<int> table(std::size_t(1) << k, 0);
    for (int s = 0; s < (1 << k); ++s) {
        int sub = 0;
        for (int j = 0; j < ksub; ++j)
            sub |= (s >> (k - 1 - position[j]) & 1) << (ksub - 1 - j);
        table[s] = sub;
    }
    return table;
}

bool apply_op(BoolOp op, bool x, bool y) {
    switch (op) {
        case BoolOp::And: return x && y;
        case BoolOp::Or: return x || y;
        case BoolOp::AndNot: return x && !y;
        case BoolOp::Xor: return x != y;
        case BoolOp::Implies: return !x || y;
        case BoolOp::Iff: return x == y;
    }
    return false;
}

}  // namespace

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
    std::vector<std::string> tracks;
    std::set_union(a.tracks.begin(), a.tracks.end(), b.tracks.begin(), b.tracks.end(),
                   std::back_inserter(tracks));
    int k = int(tracks.size());
    int nsym = 1 << k;
    std::vector<int> restrict_a = restriction_table(tracks, a.tracks);
    std::vector<int> restrict_b = restriction_table(tracks, b.tracks);

    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::uint64_t> pairs;
    auto intern = [&](State qa, State qb) {
        std::uint64_t key = (std::uint64_t(qa) << 32) | qb;
        auto [it, fresh] = ids.emplace(key, State(pairs.size()));
        if (fresh) {
            pairs.push_back(key);
            EngineLimits::note(pairs.size(), k);
        }
        return it->second;
    };

    Dfa out;
    out.tracks = tracks;
    intern(0, 0);
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        State qa = State(pairs[head] >> 32);
        State qb = State(pairs[head] & 0xffffffffu);
        out.next.resize((head + 1) * std::size_t(nsym));
        for (int s = 0; s < nsym; ++s) {
            State ta = a.step(qa, restrict_a[s]);
            State tb = b.step(qb, restrict_b[s]);
            out.next[head * nsym + s] = intern(ta, tb);
        }
        out.accept.push_back(apply_op(op, a.accept[qa] != 0, b.accept[qb] != 0) ? 1 : 0);
    }
    return minimize_dfa(out);
}

Dfa complement(const Dfa& a) {
    Dfa flipped = a;
    for (auto& f : flipped.accept) f = f ? 0 : 1;
    return minimize_dfa(flipped);
}

Dfa cylindrify(const Dfa& a, const std::vector<std::string>& extra_tracks) {
    std::vector<std::string> tracks = a.tracks;
    tracks.insert(tracks.end(), extra_tracks.begin(), extra_tracks.end());
    std::sort(tracks.begin(), tracks.end());
    tracks.erase(std::unique(tracks.begin(), tracks.end()), tracks.end());
    if (tracks == a.tracks) return a;
    int k = int(tracks.size());
    int nsym = 1 << k;
    std::vector<int> restrict_a = restriction_table(tracks, a.tracks);
    Dfa out;
    out.tracks = tracks;
    out.accept = a.accept;
    out.next.resize(a.num_states() << k);
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (int s = 0; s < nsym; ++s)
            out.next[(q << k) | unsigned(s)] = a.step(State(q), restrict_a[s]);
    EngineLimits::note(out.num_states(), k);
    return canonicalize(out);
}

Dfa rename_tracks(const Dfa& a,
                  const std::vector<std::pair<std::string, std::string>>& renames) {
    std::vector<std::string> renamed = a.tracks;
    for (auto& name : renamed)
        for (const auto& [from, to] : renames)
            if (name == from) { name = to; break; }
    std::vector<std::string> sorted_names = renamed;
    std::sort(sorted_names.begin(), sorted_names.end());
    if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) != sorted_names.end())
        throw std::invalid_argument("rename_tracks: duplicate track names after rename");
    int k = int(a.tracks.size());
    // old position of each new (sorted) track
    std::vector<int> source(k, 0);
    for (int j = 0; j < k; ++j) {
        auto it = std::find(renamed.begin(), renamed.end(), sorted_names[j]);
        source[j] = int(it - renamed.begin());
    }
    std::vector<int> sym_map(std::size_t(1) << k, 0);
    for (int s = 0; s < (1 << k); ++s) {
        int t = 0;
        for (int j = 0; j < k; ++j)
            t |= (s >> (k - 1 - source[j]) & 1) << (k - 1 - j);
        sym_map[s] = t;
    }
    Dfa out;
    out.tracks = sorted_names;
    out.accept = a.accept;
    out.next.resize(a.num_states() << k);
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (int s = 0; s < (1 << k); ++s)
            out.next[(q << k) | unsigned(s)] = a.step(State(q), sym_map[s]);
    return canonicalize(out);
}

// ---------------------------------------------------------------------------
// Projection: erase a track column, close the initial state under all-zero
// columns of the surviving tracks (a witness for the erased track may need
// more digits than the survivors), then subset-construct and minimize.

namespace {

struct SubsetHash {
    std::size_t operator()(const std::vector<State>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (State q : v) {
            h ^= q;
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }
};

}  // namespace

Dfa project(const Dfa& a, const std::string& track) {
    auto it = std::find(a.tracks.begin(), a.tracks.end(), track);
    if (it == a.tracks.end())
        throw std::invalid_argument("project: unknown track '" + track + "'");
    int ki = int(it - a.tracks.begin());
    int kold = int(a.tracks.size());
    int knew = kold - 1;
    std::vector<std::string> tracks = a.tracks;
    tracks.erase(tracks.begin() + ki);

    auto insert_bit = [&](int s, int bit) {
        int hi = s >> (knew - ki);
        int lo = s & ((1 << (knew - ki)) - 1);
        return (hi << (kold - ki)) | (bit << (kold - 1 - ki)) | lo;
    };

    // initial subset: everything reachable by columns that are all-zero on
    // the surviving tracks
    std::vector<State> initial;
    {
        std::set<State> closure{0};
        std::deque<State> queue{0};
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            for (int bit = 0; bit < 2; ++bit) {
                State t = a.step(q, insert_bit(0, bit));
                if (closure.insert(t).second) queue.push_back(t);
            }
        }
        initial.assign(closure.begin(), closure.end());
    }

    int nsym = 1 << knew;
    std::unordered_map<std::vector<State>, State, SubsetHash> ids;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> subset) {
        auto [pos, fresh] = ids.emplace(std::move(subset), State(subsets.size()));
        if (fresh) {
            subsets.push_back(pos->first);
            EngineLimits::note(subsets.size(), knew);
        }
        return pos->second;
    };

    Dfa out;
    out.tracks = tracks;
    intern(initial);
    std::vector<std::uint8_t> seen(a.num_states(), 0);
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        std::vector<State> current = subsets[head];  // copy: subsets grows
        out.next.resize((head + 1) * std::size_t(nsym));
        bool acc = false;
        for (State q : current) acc = acc || a.accept[q] != 0;
        out.accept.push_back(acc ? 1 : 0);
        for (int s = 0; s < nsym; ++s) {
            std::vector<State> successor;
            for (State q : current)
                for (int bit = 0; bit < 2; ++bit) {
                    State t = a.step(q, insert_bit(s, bit));
                    if (!seen[t]) { seen[t] = 1; successor.push_back(t); }
                }
            for (State t : successor) seen[t] = 0;
            std::sort(successor.begin(), successor.end());
            out.next[head * nsym + s] = intern(std::move(successor));
        }
    }
    return minimize_dfa(out);
}

// ---------------------------------------------------------------------------
// Equivalence and enumeration.

EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
    if (a.tracks != b.tracks)
        throw std::invalid_argument("equivalent: track sets differ");
    Dfa xordiff = product(a, b, BoolOp::Xor);
    bool any = std::any_of(xordiff.accept.begin(), xordiff.accept.end(),
                           [](std::uint8_t f) { return f != 0; });
    if (!any) return {true, std::nullopt};
    // breadth-first to the nearest accepting state; symbols in increasing
    // order give the least shortest witness
    std::size_t n = xordiff.num_states();
    int nsym = xordiff.alphabet_size();
    std::vector<std::int64_t> parent(n, -1);
    std::vector<int> via(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    std::deque<State> queue{0};
    seen[0] = 1;
    State hit = 0;
    bool found = xordiff.accept[0] != 0;
    while (!queue.empty() && !found) {
        State q = queue.front();
        queue.pop_front();
        for (int s = 0; s < nsym && !found; ++s) {
            State t = xordiff.step(q, s);
            if (seen[t]) continue;
            seen[t] = 1;
            parent[t] = q;
            via[t] = s;
            if (xordiff.accept[t]) { hit = t; found = true; break; }
            queue.push_back(t);
        }
    }
    std::vector<int> word;
    for (State q = hit; parent[q] >= 0; q = State(parent[q])) word.push_back(via[q]);
    std::reverse(word.begin(), word.end());
    return {false, decode_word(word, xordiff.track_count())};
}

std::vector<std::vector<std::uint64_t>> enumerate_accepted(const Dfa& a,
                                                           std::size_t count) {
    std::vector<std::vector<std::uint64_t>> result;
    if (count == 0) return result;
    std::size_t n = a.num_states();
    int nsym = a.alphabet_size();
    int k = a.track_count();

    // states that can still reach acceptance
    std::vector<std::uint8_t> live(n, 0);
    {
        std::vector<std::vector<State>> preds(n);
        for (State q = 0; State(q) < n; ++q)
            for (int s = 0; s < nsym; ++s) preds[a.step(q, s)].push_back(q);
        std::deque<State> queue;
        for (State q = 0; State(q) < n; ++q)
            if (a.accept[q]) { live[q] = 1; queue.push_back(q); }
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            for (State p : preds[q])
                if (!live[p]) { live[p] = 1; queue.push_back(p); }
        }
    }
    if (!live[0]) return result;

    std::set<std::vector<std::uint64_t>> emitted;
    std::vector<std::uint8_t> frontier(n, 0), next_frontier(n);
    frontier[0] = 1;
    std::vector<int> word;
    std::uint64_t budget = 50'000'000;  // safety valve for pathological inputs

    // depth-first over words of one fixed length, symbols in increasing order
    auto sweep = [&](auto&& self, State q, int remaining) -> bool {
        if (--budget == 0)
            throw ResourceLimitError("enumerate_accepted: exploration budget exhausted");
        if (remaining == 0) {
            if (!a.accept[q]) return false;
            auto tuple = decode_word(word, k);
            if (emitted.insert(tuple).second) {
                result.push_back(tuple);
                if (result.size() >= count) return true;
            }
            return false;
        }
        for (int s = 0; s < nsym; ++s) {
            State t = a.step(q, s);
            if (!live[t]) continue;
            word.push_back(s);
            bool done = self(self, t, remaining - 1);
            word.pop_back();
            if (done) return true;
        }
        return false;
    };

    for (int length = 0; length <= 4096; ++length) {
        bool any_live = false;
        for (std::size_t q = 0; q < n; ++q)
            if (frontier[q] && live[q]) { any_live = true; break; }
        if (!any_live) break;
        word.clear();
        if (sweep(sweep, 0, length)) break;
        std::fill(next_frontier.begin(), next_frontier.end(), 0);
        for (std::size_t q = 0; q < n; ++q)
            if (frontier[q])
                for (int s = 0; s < nsym; ++s) next_frontier[a.step(State(q), s)] = 1;
        frontier.swap(next_frontier);
    }
    return result;
}

}  // namespace ccexp
