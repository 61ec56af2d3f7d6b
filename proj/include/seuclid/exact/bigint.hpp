#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seuclid {

/// Arbitrary-precision signed integer used throughout the certifier.
using BigInt = boost::multiprecision::cpp_int;

inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Floor division; b must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Least nonnegative residue of a modulo m > 0.
inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Largest s with s*s <= n; n must be nonnegative.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt s = isqrt(n);
    return s * s == n;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
inline BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9')
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text));
}

inline std::strong_ordering to_ordering(int s) {
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace seuclid
