#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apartness {

// Exact rational arithmetic for all distances. No floating point: every
// "> 0" / ">= eps" comparison in this library is decided exactly.
using Rational = boost::rational<long long>;

// Accepts "p" or "p/q" with optional leading '-'. q must be positive.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty()) bad();
    auto parse_int = [&](std::string_view s) -> long long {
        if (s.empty()) bad();
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) bad();
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') bad();
            if (v > (9223372036854775807LL - (s[i] - '0')) / 10) bad();
            v = v * 10 + (s[i] - '0');
        }
        return s[0] == '-' ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    long long num = parse_int(text.substr(0, slash));
    long long den = parse_int(text.substr(slash + 1));
    if (den <= 0) bad();
    return Rational(num, den);
}

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// 2^-k as an exact rational, k >= 0.
inline Rational pow2_inverse(int k) {
    if (k < 0 || k > 62) throw std::invalid_argument("pow2_inverse: exponent out of range");
    return Rational(1, 1LL << k);
}

} // namespace apartness
