#pragma once

#include <cstdint>

#include "cmf/errors.hpp"

namespace cmf {

// Element of F_p in canonical form, 0 <= v < p.  The modulus lives in the
// ring descriptor (PrimeField / PolyRing), not in each element.
struct Fp {
    std::uint32_t v = 0;
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

// Arithmetic context for F_p with a word-sized odd prime p.  All products go
// through 64-bit intermediates, so any p < 2^31 is safe.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{1}; }
    bool is_zero(Fp a) const { return a.v == 0; }

    Fp from_int(long long x) const;

    Fp add(Fp a, Fp b) const {
        std::uint32_t s = a.v + b.v;
        if (s >= p_) s -= p_;
        return Fp{s};
    }
    Fp sub(Fp a, Fp b) const {
        return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
    }
    Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
    Fp mul(Fp a, Fp b) const {
        return Fp{static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a.v) * b.v) % p_)};
    }
    Fp pow(Fp a, std::uint64_t e) const;
    // Fermat inverse; throws DivisionByZero on 0.
    Fp inv(Fp a) const;
    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

  private:
    std::uint32_t p_;
};

// Deterministic splitmix64 stream.  Identical seeds yield identical element
// streams on every platform; no std:: distributions are used anywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection, bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    // Independent child stream derived from the current state and a tag.
    // Forking with distinct tags gives decorrelated streams, and later code
    // changes that consume more draws in one consumer do not shift another.
    Rng fork(std::uint64_t tag) {
        std::uint64_t s = next() ^ (0x9E3779B97F4A7C15ull * (tag + 1));
        return Rng(s);
    }

    Fp field_element(const PrimeField& F, bool nonzero) {
        if (nonzero) return Fp{static_cast<std::uint32_t>(1 + below(F.modulus() - 1))};
        return Fp{static_cast<std::uint32_t>(below(F.modulus()))};
    }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace cmf
