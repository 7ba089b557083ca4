#include "ccexp/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ccexp/sequences.hpp"

namespace ccexp::oracle {

namespace {

void require_nonempty(std::string_view w, const char* who) {
    if (w.empty()) throw std::invalid_argument(std::string(who) + ": empty word");
}

// match[i] = length of the longest run with w[i+j] = w[i+p+j]; the factor
// w[i .. i+p+match[i]-1] is the longest factor with period p starting at i.
std::vector<std::size_t> match_run(std::string_view w, std::size_t p) {
    std::vector<std::size_t> match(w.size() + 1, 0);
    if (p >= w.size()) return match;
    for (std::size_t i = w.size() - p; i-- > 0;)
        match[i] = (w[i] == w[i + p]) ? match[i + 1] + 1 : 0;
    return match;
}

}  // namespace

std::vector<std::size_t> periods(std::string_view w) {
    require_nonempty(w, "periods");
    std::vector<std::size_t> result;
    for (std::size_t p = 1; p <= w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size(); ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) result.push_back(p);
    }
    return result;
}

Rational exponent(std::string_view w) {
    require_nonempty(w, "exponent");
    for (std::size_t p = 1; p < w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size(); ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) return Rational(w.size(), p);
    }
    return Rational(w.size(), w.size());
}

Rational critical_exponent(std::string_view w) {
    require_nonempty(w, "critical_exponent");
    Rational best(1, 1);
    for (std::size_t p = 1; p < w.size(); ++p) {
        auto match = match_run(w, p);
        for (std::size_t i = 0; i + p < w.size(); ++i) {
            // longest factor with period p at i; shorter prefixes only lower
            // the ratio, and the true least period is covered by its own p
            Rational candidate(p + match[i], p);
            if (candidate > best) best = candidate;
        }
    }
    return best;
}

Rational circular_critical_exponent(std::string_view w) {
    require_nonempty(w, "circular_critical_exponent");
    std::string doubled(w);
    doubled += w;
    std::size_t L = w.size();
    Rational best(1, 1);
    for (std::size_t p = 1; p <= L; ++p) {
        auto match = match_run(doubled, p);
        for (std::size_t i = 0; i < L; ++i) {
            // factors of conjugates are at most L letters long
            std::size_t m = std::min(p + match[i], L);
            if (m > p) {
                Rational candidate(m, p);
                if (candidate > best) best = candidate;
            }
        }
    }
    return best;
}

std::vector<std::string> conjugates(std::string_view w) {
    require_nonempty(w, "conjugates");
    std::set<std::string> shifts;
    std::string rotated(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        shifts.insert(rotated);
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    }
    return {shifts.begin(), shifts.end()};
}

bool crep_oracle(std::uint64_t i, std::uint64_t m, std::uint64_t n,
                 std::uint64_t p, std::uint64_t s, const std::string& seq) {
    if (p < 1 || m > n || i < s || i >= s + n)
        throw std::invalid_argument("crep_oracle: need p >= 1, m <= n, s <= i < s+n");
    if (m < p) return true;
    std::string w = seq_window(seq, s, n);
    // letter at position j >= s of the circular word on w
    auto letter = [&](std::uint64_t j) { return w[(j - s) % n]; };
    for (std::uint64_t j = i; j + p < i + m; ++j)
        if (letter(j) != letter(j + p)) return false;
    return true;
}

LengthStats length_stats_oracle(std::size_t n, const std::string& seq,
                                std::size_t scan_bound) {
    if (n < 1) throw std::invalid_argument("length_stats_oracle: n >= 1 required");
    if (scan_bound == 0) scan_bound = 16 * n;
    if (scan_bound < n)
        throw std::invalid_argument("length_stats_oracle: scan bound below n");
    std::string stretch = seq_window(seq, 0, scan_bound + n);
    std::set<std::string> windows;
    for (std::size_t s = 0; s <= scan_bound; ++s)
        windows.insert(stretch.substr(s, n));
    std::set<Rational> values;
    for (const auto& w : windows) values.insert(circular_critical_exponent(w));
    LengthStats stats;
    stats.lcce = *values.begin();
    stats.gcce = *values.rbegin();
    stats.ace.assign(values.begin(), values.end());
    return stats;
}

}  // namespace ccexp::oracle
