#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccexp/rational.hpp"

namespace ccexp::oracle {

// Brute-force ground truth for everything the automaton side claims.
// Words are byte strings over any alphabet; all results are exact rationals.

// All p with 1 <= p <= |w| and w[i] = w[i+p] for 0 <= i < |w|-p, ascending.
// |w| itself is always a period. Throws std::invalid_argument on the empty word.
std::vector<std::size_t> periods(std::string_view w);

// |w| / least period, in lowest terms.
Rational exponent(std::string_view w);

// Max exponent over all nonempty factors of w.
Rational critical_exponent(std::string_view w);

// Max exponent over all nonempty factors of every conjugate of w, computed
// on the doubled word ww restricted to factor lengths <= |w|.
Rational circular_critical_exponent(std::string_view w);

// All cyclic shifts, duplicates collapsed, sorted.
std::vector<std::string> conjugates(std::string_view w);

// True iff the length-m factor starting at position i of the doubled
// circular word built from seq[s..s+n-1] has period p; letters are compared
// directly with index reduction mod n. Preconditions: p >= 1, m <= n,
// s <= i < s+n (violations throw std::invalid_argument).
bool crep_oracle(std::uint64_t i, std::uint64_t m, std::uint64_t n,
                 std::uint64_t p, std::uint64_t s, const std::string& seq = "tm");

struct LengthStats {
    Rational lcce;
    Rational gcce;
    std::vector<Rational> ace;  // distinct values, ascending
};

// Collects the distinct length-n windows seq[s..s+n-1] for 0 <= s <= scan_bound
// and returns min/max/set of their circular critical exponents.
// scan_bound = 0 means the default 16*n.
LengthStats length_stats_oracle(std::size_t n, const std::string& seq = "tm",
                                std::size_t scan_bound = 0);

}  // namespace ccexp::oracle
