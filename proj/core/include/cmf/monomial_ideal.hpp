#pragma once

#include <cstddef>
#include <vector>

#include "cmf/monomial.hpp"
#include "cmf/series.hpp"

namespace cmf {

// Monomial ideal stored by its unique minimal generators (pairwise
// non-dividing), sorted grevlex-descending.
class MonomialIdeal {
  public:
    MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::size_t nvars) { return {nvars, {}}; }
    static MonomialIdeal unit(std::size_t nvars) {
        return {nvars, {Monomial::unit(nvars)}};
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& min_gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    bool contains(const Monomial& m) const;
    int max_gen_degree() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }

  private:
    std::size_t nvars_;
    std::vector<Monomial> gens_;
};

// Number of degree-d monomials outside M: Hilb(R/M, d).
long long std_monomial_count(const MonomialIdeal& M, int d);

// Degree-d monomials outside M, grevlex-descending.
std::vector<Monomial> std_monomials(const MonomialIdeal& M, int d);

// Numerator h(t) with Hilbert series of R/M equal to h(t)/(1-t)^n, computed
// by the pivot recursion R/M -> R/(M + x), R/(M : x).
IntPoly hilbert_numerator(const MonomialIdeal& M);

MonomialIdeal colon_by_variable(const MonomialIdeal& M, std::size_t i);
MonomialIdeal plus_variable(const MonomialIdeal& M, std::size_t i);

// Largest variable index dividing u (0-based); UnitMonomial for u = 1.
std::size_t m_index(const Monomial& u);

// Stability of M: x_i * u / x_{m(u)} lies in M for every minimal generator
// u and every i < m(u).  Checking minimal generators suffices; the test
// suite verifies this against the all-monomials definition.
bool is_stable(const MonomialIdeal& M);

// Smallest stable ideal containing the given monomials: repeatedly adjoins
// the exchange moves x_i * u / x_{m(u)} until closed, then minimalizes.
MonomialIdeal stable_closure(std::size_t nvars, std::vector<Monomial> gens);

}  // namespace cmf
