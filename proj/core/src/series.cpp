#include "cmf/series.hpp"

#include <algorithm>

namespace cmf {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_is_zero(const IntPoly& p) {
    return std::all_of(p.begin(), p.end(), [](long long c) { return c == 0; });
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

IntPoly one_minus_t_pow(int d) {
    IntPoly p(d + 1, 0);
    p[0] = 1;
    p[d] -= 1;
    trim(p);
    return p;
}

std::vector<long long> series_coefficients(const IntPoly& numer, std::size_t n,
                                           int up_to) {
    std::vector<long long> c(up_to + 1, 0);
    for (std::size_t i = 0; i < numer.size() && i <= static_cast<std::size_t>(up_to); ++i)
        c[i] = numer[i];
    // Multiply by 1/(1-t) = 1 + t + t^2 + ... is a running prefix sum.
    for (std::size_t k = 0; k < n; ++k)
        for (int i = 1; i <= up_to; ++i) c[i] += c[i - 1];
    return c;
}

std::optional<IntPoly> divide_by_one_minus_t(const IntPoly& p) {
    if (p.empty()) return IntPoly{};
    // p = (1-t) q + r with q_k = p_0 + ... + p_k and r = p(1).
    IntPoly q(p.size() - 1, 0);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        run += p[k];
        q[k] = run;
    }
    run += p.back();
    if (run != 0) return std::nullopt;
    trim(q);
    return q;
}

int order_at_one(IntPoly p) {
    trim(p);
    int k = 0;
    while (!p.empty()) {
        auto q = divide_by_one_minus_t(p);
        if (!q) break;
        p = std::move(*q);
        ++k;
    }
    return k;
}

std::optional<long long> finite_length_from_numerator(IntPoly numer,
                                                      std::size_t n) {
    trim(numer);
    for (std::size_t k = 0; k < n; ++k) {
        auto q = divide_by_one_minus_t(numer);
        if (!q) return std::nullopt;
        numer = std::move(*q);
    }
    long long sum = 0;
    for (long long c : numer) sum += c;
    return sum;
}

}  // namespace cmf
