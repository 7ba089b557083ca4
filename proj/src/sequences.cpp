#include "ccexp/sequences.hpp"

#include <bit>
#include <stdexcept>

namespace ccexp {

Numeral Numeral::of(std::uint64_t value) {
    Numeral n;
    n.value = value;
    for (int b = 63; b >= 0; --b)
        if (value >> b & 1 || !n.digits.empty()) n.digits.push_back(int(value >> b & 1));
    return n;
}

Numeral Numeral::from_digits(const std::vector<int>& digits) {
    Numeral n;
    n.digits = digits;
    for (int d : digits) {
        if (d != 0 && d != 1) throw std::invalid_argument("Numeral: digit out of range");
        n.value = n.value * 2 + std::uint64_t(d);
    }
    return n;
}

bool Morphism::prolongable_on(char seed) const {
    auto it = images.find(seed);
    return it != images.end() && !it->second.empty() && it->second.front() == seed &&
           it->second.size() >= 2;
}

Morphism thue_morse_morphism() {
    return Morphism{{{'0', "01"}, {'1', "10"}}};
}

int tm_at(std::uint64_t i) {
    return std::popcount(i) & 1;
}

int pf_at(std::uint64_t i) {
    std::uint64_t m = i + 1;
    m >>= std::countr_zero(m);
    return (m & 3) == 3 ? 1 : 0;
}

std::string fixed_point_prefix(const Morphism& m, char seed, std::size_t len) {
    if (!m.prolongable_on(seed))
        throw std::invalid_argument("fixed_point_prefix: morphism not prolongable on seed");
    std::string word(1, seed);
    while (word.size() < len) {
        std::string next;
        next.reserve(word.size() * 2);
        for (char c : word) {
            auto it = m.images.find(c);
            if (it == m.images.end())
                throw std::invalid_argument("fixed_point_prefix: letter without image");
            next += it->second;
        }
        if (next.size() <= word.size())
            throw std::invalid_argument("fixed_point_prefix: morphism is not expanding");
        word = std::move(next);
    }
    word.resize(len);
    return word;
}

namespace {

Dfao make_tm_dfao() {
    Dfao m;
    m.next = {0, 1, 1, 0};
    m.output = {"0", "1"};
    return m;
}

// States track (letter, parity of the index read so far); derived from the
// odd*2^a rule and checked against it exhaustively in the tests.
Dfao make_pf_dfao() {
    Dfao m;
    m.next = {0, 1, 2, 1, 0, 3, 2, 3};
    m.output = {"0", "0", "1", "1"};
    return m;
}

std::map<std::string, Dfao>& registry() {
    static std::map<std::string, Dfao> r = [] {
        std::map<std::string, Dfao> m;
        m.emplace("tm", make_tm_dfao());
        m.emplace("pf", make_pf_dfao());
        return m;
    }();
    return r;
}

}  // namespace

const Dfao& sequence_dfao(const std::string& seq) {
    auto it = registry().find(seq);
    if (it == registry().end())
        throw std::invalid_argument("unknown sequence id '" + seq + "'");
    return it->second;
}

bool sequence_registered(const std::string& seq) {
    return registry().count(seq) != 0;
}

void register_sequence(const std::string& seq, Dfao dfao) {
    if (!dfao.tracks.empty())
        throw std::invalid_argument("register_sequence: sequence DFAOs read one anonymous track");
    if (dfao.num_states() == 0 || !dfao.zero_robust())
        throw std::invalid_argument(
            "register_sequence: initial state needs a 0-self-loop (leading zeros)");
    for (const auto& out : dfao.output)
        if (out.size() != 1)
            throw std::invalid_argument("register_sequence: outputs must be single letters");
    if (!registry().emplace(seq, std::move(dfao)).second)
        throw std::invalid_argument("register_sequence: id '" + seq + "' already registered");
}

char dfao_letter(const Dfao& m, std::uint64_t i) {
    State q = 0;
    for (int b = 63; b >= 0; --b) q = m.step(q, int(i >> b & 1));
    const std::string& out = m.output[q];
    if (out.size() != 1)
        throw std::invalid_argument("dfao_letter: output is not a single letter");
    return out[0];
}

std::string seq_window(const std::string& seq, std::uint64_t s, std::size_t n) {
    if (seq == "tm") {
        std::string w(n, '0');
        for (std::size_t j = 0; j < n; ++j) w[j] = char('0' + tm_at(s + j));
        return w;
    }
    if (seq == "pf") {
        std::string w(n, '0');
        for (std::size_t j = 0; j < n; ++j) w[j] = char('0' + pf_at(s + j));
        return w;
    }
    const Dfao& m = sequence_dfao(seq);
    std::string w(n, '0');
    for (std::size_t j = 0; j < n; ++j) w[j] = dfao_letter(m, s + j);
    return w;
}

}  // namespace ccexp
