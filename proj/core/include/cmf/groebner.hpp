#pragma once

#include <vector>

#include "cmf/monomial_ideal.hpp"
#include "cmf/poly.hpp"

namespace cmf {

// Reduced Groebner basis: monic elements with pairwise distinct leads, no
// term of any element divisible by the lead of another, sorted descending
// by lead in the ring order.
struct GroebnerBasis {
    std::vector<Polynomial> elements;

    bool is_zero_ideal() const { return elements.empty(); }
    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].lead().mono.is_unit();
    }
};

// Remainder of full division of f by the list G; no term of the result is
// divisible by any lead of G, and f - result lies in <G>.  Deterministic:
// the first divisor in list order wins.
Polynomial normal_form(const PolyRing& R, const Polynomial& f,
                       const std::vector<Polynomial>& G);
Polynomial normal_form(const PolyRing& R, const Polynomial& f,
                       const GroebnerBasis& G);

// Buchberger's algorithm with the normal selection strategy and both
// classical pair-elimination criteria, followed by autoreduction.  The
// result is the unique reduced basis regardless of generator order.
GroebnerBasis buchberger(const PolyRing& R, const std::vector<Polynomial>& gens);

// Autoreduces a set that is already known to generate its lead ideal
// (e.g. an existing Groebner basis); returns the reduced basis elements.
std::vector<Polynomial> interreduce(const PolyRing& R,
                                    std::vector<Polynomial> polys);

bool in_ideal(const PolyRing& R, const Polynomial& f, const GroebnerBasis& G);

// Minimal generators of the lead-term ideal: the leads of a reduced basis.
MonomialIdeal lead_ideal(const PolyRing& R, const GroebnerBasis& G);

}  // namespace cmf
