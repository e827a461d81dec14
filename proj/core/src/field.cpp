#include "cmf/field.hpp"

#include <stdexcept>

namespace cmf {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p <= 2 || p >= (1u << 31))
        throw std::invalid_argument("modulus must be an odd prime below 2^31");
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

Fp PrimeField::from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<std::uint32_t>(r)};
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
    Fp base = a;
    Fp acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

Fp PrimeField::inv(Fp a) const {
    if (a.v == 0) throw DivisionByZero();
    return pow(a, p_ - 2);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps the stream platform-independent and unbiased.
    std::uint64_t limit = ~0ull - (~0ull % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

}  // namespace cmf
