#pragma once

#include "frobkit/multipoly.hpp"

#include <cstdint>

namespace frobkit {

// splitmix64: tiny, fully deterministic across platforms, which is all the
// reproducible-report contract needs. Not for anything adversarial.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Numerator in [-num_abs, num_abs], denominator in [1, den_max].
    Rational rational(int num_abs = 9, int den_max = 9) {
        long long n = range(-num_abs, num_abs);
        long long d = range(1, den_max);
        return Rational(n) / d;
    }

    RationalPoint point(int n, int num_abs = 9, int den_max = 9) {
        std::vector<Rational> c;
        c.reserve(n);
        for (int i = 0; i < n; ++i) c.push_back(rational(num_abs, den_max));
        return RationalPoint(std::move(c));
    }

    // Random polynomial of total degree <= deg with small rational coefficients.
    MultiPoly poly(int n, int deg, int num_abs = 3, int den_max = 3);

    // Vector field / one-form: n components of degree <= deg.
    std::vector<MultiPoly> components(int n, int deg, int num_abs = 3, int den_max = 3);

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace frobkit
