#pragma once

#include "seuclid/exact/bigint.hpp"
#include "seuclid/exact/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace seuclid {

// Trial division is enough here: every input is desk-scale (well below 10^12).

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (BigInt q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

inline bool is_prime(long long n) { return is_prime(BigInt(n)); }

/// True iff no prime square divides d (d >= 1).
inline bool squarefree(const BigInt& d) {
    if (d < 1) throw std::domain_error("squarefree: argument must be positive");
    BigInt n = d;
    for (BigInt q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return false;
        }
    }
    return true;
}

/// Splits n >= 1 as f^2 * m with m squarefree; returns {f, m}.
inline std::pair<BigInt, BigInt> square_split(const BigInt& n) {
    if (n < 1) throw std::domain_error("square_split: argument must be positive");
    BigInt rest = n, f = 1, m = 1;
    for (BigInt q = 2; q * q <= rest; ++q) {
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= q;
        if (e % 2) m *= q;
    }
    m *= rest;
    return {f, m};
}

/// Primes p with p < bound, ascending.
inline std::vector<long long> primes_below(long long bound) {
    std::vector<long long> out;
    for (long long p = 2; p < bound; ++p) {
        bool prime = true;
        for (long long q = 2; q * q <= p; ++q) {
            if (p % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(p);
    }
    return out;
}

/// A finite, possibly empty, set of rational primes.
class SSet {
public:
    SSet() = default;
    SSet(std::initializer_list<long long> primes) : SSet(std::vector<long long>(primes)) {}
    explicit SSet(std::vector<long long> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
            throw std::invalid_argument("SSet: duplicate prime");
        for (long long p : primes_) {
            if (!is_prime(p)) throw std::invalid_argument("SSet: " + std::to_string(p) + " is not prime");
        }
    }

    const std::vector<long long>& primes() const { return primes_; }
    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }
    bool contains(long long p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

    /// Smallest prime not in the set.
    long long smallest_excluded_prime() const {
        for (long long p = 2;; ++p) {
            if (is_prime(p) && !contains(p)) return p;
        }
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(primes_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const SSet&, const SSet&) = default;

private:
    std::vector<long long> primes_;
};

/// Divides every prime of S out of n completely (n >= 1).
inline BigInt s_part_strip(BigInt n, const SSet& s) {
    if (n < 1) throw std::domain_error("s_part_strip: argument must be positive");
    for (long long p : s.primes()) {
        while (n % p == 0) n /= p;
    }
    return n;
}

/// The S-smooth part n / s_part_strip(n, S).
inline BigInt s_part(const BigInt& n, const SSet& s) { return n / s_part_strip(n, s); }

/// Membership in the multiplicative semigroup T generated by S (1 included).
inline bool is_s_smooth(const BigInt& n, const SSet& s) { return n >= 1 && s_part_strip(n, s) == 1; }

inline bool coprime_to(const BigInt& n, const SSet& s) {
    for (long long p : s.primes()) {
        if (n % p == 0) return false;
    }
    return true;
}

/// The S-norm of a nonnegative rational: S-primes deleted from numerator and denominator.
/// By convention the image of 0 is 0.
inline Rational s_norm_rational(const Rational& q, const SSet& s) {
    if (q.sign() < 0) throw std::domain_error("s_norm_rational: negative argument");
    if (q.is_zero()) return Rational(0);
    return Rational(s_part_strip(q.num(), s), s_part_strip(q.den(), s));
}

/// Legendre symbol (n/p) for an odd prime p.
inline int legendre(const BigInt& n, long long p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: modulus must be an odd prime");
    BigInt r = mod(n, BigInt(p));
    if (r == 0) return 0;
    // Euler's criterion
    BigInt e = boost::multiprecision::powm(r, BigInt((p - 1) / 2), BigInt(p));
    return e == 1 ? 1 : -1;
}

/// All positive S-smooth integers up to and including limit, ascending.
inline std::vector<BigInt> smooth_numbers(const SSet& s, const BigInt& limit) {
    std::vector<BigInt> out;
    if (limit < 1) return out;
    out.push_back(1);
    for (long long p : s.primes()) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            BigInt v = out[i] * p;
            while (v <= limit) {
                out.push_back(v);
                v *= p;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace seuclid
