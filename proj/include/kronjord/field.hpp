#pragma once

#include "kronjord/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kronjord {

/// Element of the prime field GF(p). The modulus travels with the value so
/// that matrices over different primes can never be mixed silently.
struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
    std::size_t bit_size() const { return 0; }

    Fp inverse() const;
    std::string to_string() const { return std::to_string(v); }

    Fp& operator+=(const Fp& o) { check(o); v = static_cast<std::uint32_t>((std::uint64_t{v} + o.v) % p); return *this; }
    Fp& operator-=(const Fp& o) { check(o); v = static_cast<std::uint32_t>((std::uint64_t{v} + p - o.v) % p); return *this; }
    Fp& operator*=(const Fp& o) { check(o); v = static_cast<std::uint32_t>((std::uint64_t{v} * o.v) % p); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp{a.v == 0 ? 0 : a.p - a.v, a.p}; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    void check(const Fp& o) const {
        if (p != o.p) throw std::invalid_argument("mixing elements of GF(" + std::to_string(p) + ") and GF(" + std::to_string(o.p) + ")");
    }
};

inline Fp Fp::inverse() const {
    if (v == 0) throw std::domain_error("inverse of zero");
    // Fermat: v^(p-2)
    std::uint64_t base = v, result = 1, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return Fp{static_cast<std::uint32_t>(result), p};
}

/// Field descriptors: create constants of the element type. The rational field
/// carries no state; GF(p) carries its modulus.
template <class T>
struct Field;

template <>
struct Field<Rational> {
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    std::uint32_t characteristic() const { return 0; }
    friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
struct Field<Fp> {
    std::uint32_t p = 2;

    explicit Field(std::uint32_t prime = 2) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("GF(p) requires a prime modulus, got " + std::to_string(prime));
    }
    Fp zero() const { return Fp{0, p}; }
    Fp one() const { return Fp{1 % p, p}; }
    Fp from_int(long n) const {
        long m = n % static_cast<long>(p);
        if (m < 0) m += p;
        return Fp{static_cast<std::uint32_t>(m), p};
    }
    std::uint32_t characteristic() const { return p; }
    friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }
};

}  // namespace kronjord
