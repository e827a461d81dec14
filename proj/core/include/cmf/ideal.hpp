#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cmf/groebner.hpp"

namespace cmf {

// Graded ideal: homogeneous generators plus a lazily computed reduced
// Groebner basis and lead-term monomial ideal.  Immutable after the caches
// are forced; construction and first access are single-threaded.
class Ideal {
  public:
    Ideal(PolyRing ring, std::vector<Polynomial> gens);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const GroebnerBasis& groebner() const;
    const MonomialIdeal& lead_monomials() const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return groebner().is_unit_ideal(); }
    int max_gen_degree() const;

  private:
    PolyRing ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
    mutable std::shared_ptr<const MonomialIdeal> lead_;
};

bool contains(const Ideal& I, const Polynomial& f);
// Mutual normal-form membership of generators against the other basis.
bool ideal_equal(const Ideal& a, const Ideal& b);

// The product m*I, generated by x_i * g.
Ideal m_times(const Ideal& I);

// Colon ideal I : f = { g : f g in I }, computed as (1/f)(I cap (f)) with
// one auxiliary elimination variable.  For homogeneous I and linear f a
// grevlex shortcut is used instead; both routes are cross-checked in tests.
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon_via_elimination(const Ideal& I, const Polynomial& f);
Ideal colon_linear(const Ideal& I, const LinearForm& z);

// I : m as the intersection of the colons by each variable, intersections
// folded pairwise by elimination.
Ideal colon_m(const Ideal& I);

Ideal intersect(const Ideal& a, const Ideal& b);

// Image of I in R/zR, re-expressed in K[x_1,...,x_{n-1}].  Requires the
// last coefficient of z to be nonzero (BadPivot otherwise).
Ideal reduce_mod_linear(const Ideal& I, const LinearForm& z);

// Transformed ideal generated by the images of the generators.
Ideal apply_change(const Ideal& I, const LinearChange& M);

// Extension to K[x_1,...,x_{n+1}] with a fresh last variable.
Ideal extend_one_variable(const Ideal& I);

// Minimal number of homogeneous generators, mu(I) = l(I / mI), computed
// degreewise from the Hilbert functions of I and mI, with the graded
// profile of minimal-generator degrees.
struct MuProfile {
    long long total = 0;
    std::map<int, long long> by_degree;
};
MuProfile mu_profile(const Ideal& I);
long long mu(const Ideal& I);

struct HilbertFunction {
    std::vector<long long> values;  // Hilb(R/I, d) for d = 0..up_to
    int stable_from = 0;            // beyond this the Hilbert polynomial rules
};
HilbertFunction hilbert(const Ideal& I, int up_to);

IntPoly ideal_numerator(const Ideal& I);

// l((I : z)/I), decided symbolically: the difference of the two Hilbert
// numerators must be divisible by (1-t)^n, otherwise the length is
// infinite (nullopt).
std::optional<long long> colon_length(const Ideal& I, const LinearForm& z);

// Ideal generated by the degree-j piece of I (a reduced spanning basis).
Ideal component_ideal(const Ideal& I, int j);

// l((I : m)/I); nullopt would mean an infinite quotient (defensive; the
// socle of a Noetherian graded quotient is always finite).
std::optional<long long> type_of(const Ideal& I);

struct DimHeight {
    std::size_t dim;
    std::size_t height;
};
// Krull dimension of R/I and height of I, from the pole order of the
// Hilbert series at t = 1.  Throws UnitIdeal for the unit ideal.
DimHeight dim_and_height(const Ideal& I);

Ideal monomial_to_ideal(const PolyRing& R, const MonomialIdeal& M);

}  // namespace cmf
