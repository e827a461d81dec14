#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cmf/errors.hpp"

namespace cmf {

// Dense exponent-vector monomial with cached total degree.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    // The monomial 1 in nvars variables.
    static Monomial unit(std::size_t nvars);
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return exps_.size(); }
    int degree() const { return deg_; }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_unit() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // this / o, assuming o | this.
    Monomial divided_by(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    // Largest variable index (0-based) with positive exponent.
    // Throws UnitMonomial for the unit monomial.
    std::size_t max_var() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

  private:
    std::vector<int> exps_;
    int deg_ = 0;
};

// Graded reverse lexicographic comparison induced by x_1 > ... > x_n:
// a > b iff deg a > deg b, or degrees are equal and the last nonzero entry
// of exps(a) - exps(b) is negative.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);

// Term order with an optional elimination block: the first `elim` variables
// are compared (block-grevlex) before the remaining variables.  elim = 0 is
// plain grevlex.  Used only inside colon/intersection computations.
struct MonomialOrder {
    std::size_t elim = 0;
};

std::strong_ordering order_cmp(const MonomialOrder& ord, const Monomial& a,
                               const Monomial& b);

inline bool order_less(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
    return order_cmp(o, a, b) == std::strong_ordering::less;
}
inline bool order_greater(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
    return order_cmp(o, a, b) == std::strong_ordering::greater;
}

// All monomials of the given degree in nvars variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

// dim_K R_d = C(nvars - 1 + d, d).
long long ring_dimension(std::size_t nvars, int degree);

}  // namespace cmf
