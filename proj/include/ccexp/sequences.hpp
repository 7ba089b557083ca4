#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccexp/dfao.hpp"

namespace ccexp {

// Base-2 numerals, most significant digit first. Zero is canonically the
// empty digit string; decoding tolerates any number of leading zeros.
struct Numeral {
    std::uint64_t value = 0;
    std::vector<int> digits;  // MSD first

    static Numeral of(std::uint64_t value);
    static Numeral from_digits(const std::vector<int>& digits);
};

struct Morphism {
    std::map<char, std::string> images;

    bool prolongable_on(char seed) const;
};

Morphism thue_morse_morphism();  // 0 -> 01, 1 -> 10

// Letter access. tm_at is the parity of the number of 1 bits of i; pf_at
// writes i+1 = odd * 2^a and outputs 1 iff odd = 3 (mod 4).
int tm_at(std::uint64_t i);
int pf_at(std::uint64_t i);

std::string fixed_point_prefix(const Morphism& m, char seed, std::size_t len);

// seq is a registered sequence id ("tm", "pf").
std::string seq_window(const std::string& seq, std::uint64_t s, std::size_t n);

// The registered DFAO for a sequence id; throws std::invalid_argument for
// unknown ids. Shipped: "tm" (2 states), "pf" (4 states).
const Dfao& sequence_dfao(const std::string& seq);
bool sequence_registered(const std::string& seq);
// Rejects DFAOs without the 0-self-loop on the initial state or with outputs
// other than single letters.
void register_sequence(const std::string& seq, Dfao dfao);

// Runs the sequence DFAO on (i)_2; outputs must be single characters.
char dfao_letter(const Dfao& m, std::uint64_t i);

}  // namespace ccexp
