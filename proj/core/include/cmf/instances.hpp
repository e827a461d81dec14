#pragma once

#include "cmf/ideal.hpp"

namespace cmf {

// Dense random homogeneous generators with degrees in [deg_lo, deg_hi].
Ideal random_graded_ideal(const PolyRing& R, Rng& rng, int num_gens,
                          int deg_lo, int deg_hi);

MonomialIdeal random_monomial_ideal(std::size_t nvars, Rng& rng, int num_gens,
                                    int deg_lo, int deg_hi);

// Stable closure of random monomials of degree <= max_deg.
MonomialIdeal random_stable_ideal(std::size_t nvars, Rng& rng, int num_gens,
                                  int max_deg);

}  // namespace cmf
