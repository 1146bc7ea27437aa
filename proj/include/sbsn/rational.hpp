#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sbsn {

// Exact non-negative rational, used for influence edge weights. Always kept
// normalized: gcd(num, den) == 1 and den >= 1. Numerator and denominator are
// capped so that floor_mul never overflows 64-bit arithmetic.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static constexpr std::int64_t kMaxComponent = 1'000'000'000;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    static Rational one() { return Rational(1, 1); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational weight: zero denominator");
        if (num < 0 || den < 0) throw std::invalid_argument("rational weight: negative component");
        if (num > kMaxComponent || den > kMaxComponent)
            throw std::invalid_argument("rational weight: component exceeds 10^9");
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }

    // floor(s * num / den), exact in integer arithmetic; requires s >= 0.
    std::int64_t floor_mul(std::int64_t s) const { return s * num / den; }

    bool operator==(const Rational&) const = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace sbsn
