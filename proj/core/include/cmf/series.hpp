#pragma once

#include <optional>
#include <vector>

namespace cmf {

// Integer polynomial in t, coefficient of t^k at index k.
using IntPoly = std::vector<long long>;

void trim(IntPoly& p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
bool poly_is_zero(const IntPoly& p);

// 1 - t^d.
IntPoly one_minus_t_pow(int d);

// Coefficients 0..up_to of numer / (1-t)^n as a power series.
std::vector<long long> series_coefficients(const IntPoly& numer, std::size_t n,
                                           int up_to);

// Quotient of exact division by (1-t); nullopt if the remainder is nonzero.
std::optional<IntPoly> divide_by_one_minus_t(const IntPoly& p);

// Multiplicity of (1-t) as a factor.
int order_at_one(IntPoly p);

// Total length encoded by numer/(1-t)^n when that series is a polynomial:
// the sum of the quotient's coefficients.  nullopt when the series is not a
// polynomial (infinite length).
std::optional<long long> finite_length_from_numerator(IntPoly numer,
                                                      std::size_t n);

}  // namespace cmf
