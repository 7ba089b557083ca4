#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "ccexp/oracle.hpp"
#include "ccexp/sequences.hpp"

using namespace ccexp;
using namespace ccexp::oracle;

namespace {

// every binary word of the given length, lexicographic
std::vector<std::string> binary_words(std::size_t len) {
    std::vector<std::string> words;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        std::string w(len, '0');
        for (std::size_t k = 0; k < len; ++k)
            if (bits >> (len - 1 - k) & 1) w[k] = '1';
        words.push_back(std::move(w));
    }
    return words;
}

// Definition read literally: max exponent over factors of every conjugate.
Rational ccexp_by_definition(const std::string& w) {
    Rational best(1, 1);
    for (const std::string& c : conjugates(w))
        best = std::max(best, critical_exponent(c));
    return best;
}

bool is_square(const std::string& w) {
    if (w.size() % 2) return false;
    return w.substr(0, w.size() / 2) == w.substr(w.size() / 2);
}

// some factor has exponent > 2 iff some factor of length 2p+1 has period p
bool has_overlap_factor(const std::string& w) {
    for (std::size_t p = 1; 2 * p + 1 <= w.size(); ++p)
        for (std::size_t i = 0; i + 2 * p < w.size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j <= p && ok; ++j) ok = w[i + j] == w[i + j + p];
            if (ok) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("periods of the dictionary examples") {
    CHECK(periods("alfalfa") == std::vector<std::size_t>{3, 6, 7});
    CHECK(periods("a") == std::vector<std::size_t>{1});
    // direct scan: murmur has periods 3 and 6 only (p=5 fails on m vs r)
    CHECK(periods("murmur") == std::vector<std::size_t>{3, 6});
    CHECK(periods("aaaa") == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK_THROWS_AS(periods(""), std::invalid_argument);
}

TEST_CASE("exponents of the dictionary examples") {
    CHECK(exponent("alfalfa") == Rational(7, 3));
    CHECK(exponent("x") == Rational(1, 1));
    CHECK(exponent("entente") == Rational(7, 3));
    CHECK(exponent("murmur") == Rational(2, 1));
    CHECK_THROWS_AS(exponent(""), std::invalid_argument);
}

TEST_CASE("critical exponent") {
    CHECK(critical_exponent("Mississippi") == Rational(7, 3));
    CHECK(critical_exponent("ab") == Rational(1, 1));
    CHECK(critical_exponent("aa") == Rational(2, 1));
    CHECK_THROWS_AS(critical_exponent(""), std::invalid_argument);
}

TEST_CASE("circular critical exponent") {
    CHECK(circular_critical_exponent("amalgam") == Rational(5, 2));
    CHECK(circular_critical_exponent("a") == Rational(1, 1));
    CHECK(circular_critical_exponent("01101") == Rational(5, 2));
    CHECK(circular_critical_exponent(seq_window("tm", 0, 5)) == Rational(5, 2));
    CHECK_THROWS_AS(circular_critical_exponent(""), std::invalid_argument);
}

TEST_CASE("conjugates") {
    auto ate = conjugates("ate");
    CHECK(ate == std::vector<std::string>{"ate", "eat", "tea"});
    CHECK(conjugates("aa") == std::vector<std::string>{"aa"});
    auto listen = conjugates("listen");
    CHECK(std::find(listen.begin(), listen.end(), "enlist") != listen.end());
    CHECK_THROWS_AS(conjugates(""), std::invalid_argument);
}

TEST_CASE("doubled-word ccexp equals the conjugate definition on all short binary words") {
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const std::string& w : binary_words(len)) {
            CAPTURE(w);
            REQUIRE(circular_critical_exponent(w) == ccexp_by_definition(w));
        }
    }
}

TEST_CASE("ccexp dominates cexp and is conjugacy invariant") {
    std::mt19937_64 rng(20260824);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t len = 1 + rng() % 20;
        std::string w(len, 'a');
        for (auto& c : w) c = char('a' + rng() % 3);
        Rational circ = circular_critical_exponent(w);
        CHECK(circ >= critical_exponent(w));
        CHECK(critical_exponent(w) >= Rational(1, 1));
        std::size_t shift = rng() % len;
        std::string rotated = w.substr(shift) + w.substr(0, shift);
        CHECK(circular_critical_exponent(rotated) == circ);
    }
}

TEST_CASE("exponent 2 means square, above 2 means overlap") {
    CHECK(exponent("murmur") == Rational(2, 1));
    CHECK(is_square("murmur"));
    CHECK(exponent("entente") > Rational(2, 1));
    CHECK(has_overlap_factor("entente"));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t len = 1 + rng() % 14;
        std::string w(len, '0');
        for (auto& c : w) c = char('0' + rng() % 2);
        CAPTURE(w);
        CHECK((exponent(w) == Rational(2, 1)) == (is_square(w)));
        CHECK((critical_exponent(w) > Rational(2, 1)) == has_overlap_factor(w));
    }
}

TEST_CASE("crep oracle spot values and preconditions") {
    // p = n makes all three comparison ranges empty
    for (std::uint64_t i = 0; i < 5; ++i) CHECK(crep_oracle(i, 5, 5, 5, 0));
    // tm prefix 01101 doubled: period 2 holds at i=2 (10101) but not at i=0
    CHECK(crep_oracle(2, 5, 5, 2, 0));
    CHECK_FALSE(crep_oracle(0, 5, 5, 2, 0));
    CHECK_THROWS_AS(crep_oracle(0, 5, 5, 0, 0), std::invalid_argument);  // p = 0
    CHECK_THROWS_AS(crep_oracle(0, 6, 5, 1, 0), std::invalid_argument);  // m > n
    CHECK_THROWS_AS(crep_oracle(5, 5, 5, 1, 0), std::invalid_argument);  // i >= s+n
    CHECK_THROWS_AS(crep_oracle(0, 5, 5, 1, 1), std::invalid_argument);  // i < s
}

TEST_CASE("crep oracle agrees with a direct period check on doubled windows") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        for (std::uint64_t s = 0; s <= 8; ++s) {
            std::string w = seq_window("tm", s, n);
            std::string doubled = w + w;
            for (std::uint64_t i = s; i < s + n; ++i)
                for (std::uint64_t m = 1; m <= n; ++m)
                    for (std::uint64_t p = 1; p <= m; ++p) {
                        std::string factor = doubled.substr(i - s, m);
                        bool direct = true;
                        for (std::size_t j = 0; j + p < factor.size(); ++j)
                            if (factor[j] != factor[j + p]) { direct = false; break; }
                        CAPTURE(i); CAPTURE(m); CAPTURE(n); CAPTURE(p); CAPTURE(s);
                        REQUIRE(crep_oracle(i, m, n, p, s) == direct);
                    }
        }
    }
}

TEST_CASE("length stats") {
    auto one = length_stats_oracle(1);
    CHECK(one.lcce == Rational(1, 1));
    CHECK(one.gcce == Rational(1, 1));
    CHECK(one.ace == std::vector<Rational>{Rational(1, 1)});

    auto seven = length_stats_oracle(7);
    CHECK(seven.lcce == Rational(7, 3));
    CHECK(seven.gcce == Rational(7, 2));
    CHECK(seven.ace == std::vector<Rational>{Rational(7, 3), Rational(3, 1), Rational(7, 2)});

    CHECK(length_stats_oracle(23).lcce == Rational(17, 7));
    CHECK_THROWS_AS(length_stats_oracle(0), std::invalid_argument);
    CHECK_THROWS_AS(length_stats_oracle(8, "tm", 4), std::invalid_argument);
}

TEST_CASE("desk-scale restatement of the short-factor proposition") {
    const Rational three_halves(3, 2);
    for (std::size_t len = 1; len <= 64; ++len) {
        std::set<std::string> seen;
        for (std::uint64_t s = 0; s <= 16 * len; ++s) seen.insert(seq_window("tm", s, len));
        for (const std::string& w : seen) {
            Rational ce = critical_exponent(w);
            CAPTURE(w);
            if (len >= 4) {
                REQUIRE(ce == Rational(2, 1));
            } else {
                bool listed = ce == Rational(1, 1) || ce == three_halves || ce == Rational(2, 1);
                REQUIRE(listed);
            }
        }
    }
}
