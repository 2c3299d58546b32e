#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>

#include "deltakit/errors.hpp"

namespace deltakit {

// Arithmetic in GF(p) for a fixed odd prime p. The modulus is process-wide
// state, set once at startup (CLI) or scoped in tests via PrimeGuard.
// Default is the Mersenne prime 2^61 - 1, which has a branch-free reduction.

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t g_prime = kMersenne61;
inline bool g_mersenne = true;

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t field_prime() { return detail::g_prime; }

// p must be an odd prime below 2^62 (sums of two residues must fit in 64 bits).
inline void set_field_prime(std::uint64_t p) {
    if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime_u64(p))
        throw ValidationError("field modulus must be an odd prime below 2^62, got " + std::to_string(p));
    detail::g_prime = p;
    detail::g_mersenne = (p == kMersenne61);
}

// RAII helper for tests that temporarily switch the modulus.
class PrimeGuard {
public:
    explicit PrimeGuard(std::uint64_t p) : saved_(field_prime()) { set_field_prime(p); }
    ~PrimeGuard() { set_field_prime(saved_); }
    PrimeGuard(const PrimeGuard&) = delete;
    PrimeGuard& operator=(const PrimeGuard&) = delete;

private:
    std::uint64_t saved_;
};

class Fp {
public:
    Fp() : v_(0) {}
    // Reduces an arbitrary signed integer into [0, p).
    static Fp from_int(long long x) {
        const auto p = static_cast<long long>(field_prime());
        long long r = x % p;
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r));
    }
    static Fp from_reduced(std::uint64_t v) { return Fp(v); }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t r = a.v_ + b.v_;
        if (r >= detail::g_prime) r -= detail::g_prime;
        return Fp(r);
    }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t r = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + detail::g_prime - b.v_;
        return Fp(r);
    }
    friend Fp operator*(Fp a, Fp b) {
        if (detail::g_mersenne) {
            unsigned __int128 z = static_cast<unsigned __int128>(a.v_) * b.v_;
            std::uint64_t lo = static_cast<std::uint64_t>(z) & kMersenne61;
            std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
            std::uint64_t r = lo + hi;
            if (r >= kMersenne61) r -= kMersenne61;
            return Fp(r);
        }
        return Fp(detail::mulmod64(a.v_, b.v_, detail::g_prime));
    }
    Fp operator-() const { return v_ == 0 ? Fp() : Fp(detail::g_prime - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const { return Fp(detail::powmod64(v_, e, detail::g_prime)); }

    Fp inv() const {
        if (v_ == 0) throw ZeroInverse("inverse of zero in GF(p)");
        return pow(detail::g_prime - 2);
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

private:
    explicit Fp(std::uint64_t v) : v_(v) {}
    std::uint64_t v_;
};

inline Fp fp(long long x) { return Fp::from_int(x); }

// Seedable RNG handle. Single-owner: concurrent use of one Rng is forbidden.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform over [0, p) by rejection from the top bits of a 64-bit draw.
    Fp uniform_field() {
        const std::uint64_t p = field_prime();
        const int shift = 64 - std::bit_width(p);
        for (;;) {
            std::uint64_t x = gen_() >> shift;
            if (x < p) return Fp::from_reduced(x);
        }
    }

    Fp uniform_field_nonzero() {
        for (;;) {
            Fp x = uniform_field();
            if (!x.is_zero()) return x;
        }
    }

    // Uniform over [0, bound).
    std::uint64_t uniform_u64(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
        return dist(gen_);
    }

    long long uniform_int(long long lo, long long hi) {
        std::uniform_int_distribution<long long> dist(lo, hi);
        return dist(gen_);
    }

    double uniform_real() {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        return dist(gen_);
    }

    std::uint64_t next_seed() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

inline Fp sample_uniform(Rng& rng) { return rng.uniform_field(); }

} // namespace deltakit
