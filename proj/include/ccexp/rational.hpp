#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccexp {

// Exact nonnegative rational, kept in lowest terms.  Exponents of repetitions
// are always ratios of word lengths to periods, so unsigned 64-bit components
// are far more than enough; comparisons cross-multiply in 128 bits to stay
// overflow-free.
class Rational {
public:
    constexpr Rational() = default;

    constexpr Rational(std::uint64_t numerator, std::uint64_t denominator)
        : num_(numerator), den_(denominator) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        std::uint64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static constexpr Rational whole(std::uint64_t n) { return Rational(n, 1); }

    constexpr std::uint64_t num() const { return num_; }
    constexpr std::uint64_t den() const { return den_; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        using Wide = unsigned __int128;
        Wide lhs = Wide(a.num_) * b.den_;
        Wide rhs = Wide(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Renders as "num/den" even for whole values, e.g. "7/3", "1/1".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "a/b" or a bare integer "a".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto to_u64 = [](std::string_view piece) -> std::uint64_t {
            if (piece.empty()) throw std::invalid_argument("Rational: empty component");
            std::uint64_t value = 0;
            for (char c : piece) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("Rational: bad digit in '" + std::string(piece) + "'");
                value = value * 10 + std::uint64_t(c - '0');
            }
            return value;
        };
        if (slash == std::string_view::npos) return whole(to_u64(text));
        return Rational(to_u64(text.substr(0, slash)), to_u64(text.substr(slash + 1)));
    }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace ccexp
