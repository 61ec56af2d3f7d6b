#pragma once

#include "seuclid/seuclid.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>
#include <vector>

namespace testing_support {

using seuclid::BigInt;
using seuclid::Rational;
using Dec = boost::multiprecision::cpp_dec_float_100;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline Rational random_rational(long long num_bound, long long den_bound) {
    return Rational(BigInt(uniform(-num_bound, num_bound)), BigInt(uniform(1, den_bound)));
}

inline Dec dec(const BigInt& x) { return Dec(x.str()); }

inline Dec dec(const seuclid::SurdValue& v) {
    return (dec(v.j) + Dec(v.s) * boost::multiprecision::sqrt(Dec(3) / dec(v.D))) / dec(v.k);
}

inline Dec dec(const Rational& q) { return dec(q.num()) / dec(q.den()); }

inline Dec dec(const seuclid::QuadraticSurd& x) {
    return dec(x.rational_part()) + dec(x.surd_part()) * boost::multiprecision::sqrt(dec(x.radicand()));
}

/// Squarefree d in [1, bound] drawn uniformly.
inline BigInt random_squarefree(long long bound) {
    for (;;) {
        BigInt d(uniform(1, bound));
        if (seuclid::squarefree(d)) return d;
    }
}

inline std::vector<long long> sample_fields() { return {1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 19, 35, 67, 163}; }

}  // namespace testing_support
