#ifndef FANO8_SCALAR_HPP
#define FANO8_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace fano8 {

// Exact rational scalar. mpq_class keeps values canonical: reduced,
// positive denominator.
using Rat = mpq_class;

// Residue mod p, p a prime >= 5. p is carried per element; a
// default-constructed element (v=0, p=0) is a universal zero that adopts
// the modulus of whatever it meets. Characteristics 2 and 3 are excluded:
// quadratic-form classification needs char != 2 and the Pfaffian identity
// needs 6 invertible.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::int64_t value, std::uint64_t prime) : p(prime) {
        if (prime < 5) throw std::invalid_argument("Fp: modulus must be a prime >= 5");
        std::int64_t r = value % static_cast<std::int64_t>(prime);
        if (r < 0) r += static_cast<std::int64_t>(prime);
        v = static_cast<std::uint64_t>(r);
    }

    static std::uint64_t join(std::uint64_t a, std::uint64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw std::invalid_argument("Fp: mixed moduli");
        return a;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = join(a.p, b.p);
        if (m == 0) return Fp{};
        Fp r; r.p = m; r.v = (a.v + b.v) % m; return r;
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = join(a.p, b.p);
        if (m == 0) return Fp{};
        Fp r; r.p = m; r.v = (a.v + m - b.v) % m; return r;
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = join(a.p, b.p);
        if (m == 0) return Fp{};
        Fp r; r.p = m; r.v = (a.v * b.v) % m; return r;
    }
    friend Fp operator-(const Fp& a) {
        if (a.p == 0) return a;
        Fp r; r.p = a.p; r.v = a.v == 0 ? 0 : a.p - a.v; return r;
    }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    friend bool operator==(const Fp& a, const Fp& b) {
        join(a.p, b.p);
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

inline Fp inv(const Fp& a) {
    if (a.p == 0 || a.v == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(a.p), newr = static_cast<std::int64_t>(a.v);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("Fp: modulus not prime");
    if (t < 0) t += static_cast<std::int64_t>(a.p);
    Fp out; out.p = a.p; out.v = static_cast<std::uint64_t>(t);
    return out;
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline bool is_zero(const Rat& a) { return a == 0; }

// whether the element knows its field (Fp zeros without a modulus don't)
inline bool has_field_info(const Fp& a) { return a.p != 0; }
inline bool has_field_info(const Rat&) { return true; }

inline Rat inv(const Rat& a) {
    if (a == 0) throw std::domain_error("Rat: inverse of zero");
    return 1 / a;
}

// Make the integer n as an element of the same field as `like`.
inline Fp k_int(std::int64_t n, const Fp& like) {
    if (like.p == 0) {
        if (n == 0) return Fp{};
        throw std::invalid_argument("Fp: cannot embed nonzero int without modulus");
    }
    return Fp(n, like.p);
}
inline Rat k_int(std::int64_t n, const Rat&) { return Rat(static_cast<long>(n)); }

inline std::string to_string(const Fp& a) { return std::to_string(a.v); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

// Field descriptor, parsed from "q" or "fp:P".
struct FieldDesc {
    bool rational = true;
    std::uint64_t p = 0;

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static FieldDesc parse(const std::string& s) {
        if (s == "q" || s == "Q") return FieldDesc{true, 0};
        if (s.rfind("fp:", 0) == 0) {
            std::uint64_t p = std::stoull(s.substr(3));
            if (p < 5 || !is_prime(p))
                throw std::invalid_argument("field: p must be a prime >= 5, got " + s);
            return FieldDesc{false, p};
        }
        throw std::invalid_argument("field: expected \"q\" or \"fp:P\", got " + s);
    }

    std::string str() const { return rational ? "q" : "fp:" + std::to_string(p); }
};

// splitmix64: the fixed seeded generator used for every pseudorandom
// fixture in the artifact. The algorithm is part of the external contract
// (reproducibility across platforms and languages).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Seeded field element: residues are uniform-ish in [0,p); rationals are
// small integers in [-10, 10].
inline Fp random_scalar(SplitMix64& rng, const FieldDesc& f, Fp) {
    Fp r; r.p = f.p; r.v = rng.below(f.p); return r;
}
inline Rat random_scalar(SplitMix64& rng, const FieldDesc&, Rat) {
    return Rat(static_cast<long>(rng.below(21)) - 10);
}

}  // namespace fano8

#endif
