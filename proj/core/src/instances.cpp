#include "cmf/instances.hpp"

namespace cmf {

namespace {

Monomial random_monomial(std::size_t nvars, Rng& rng, int degree) {
    auto all = monomials_of_degree(nvars, degree);
    return all[rng.below(all.size())];
}

}  // namespace

Ideal random_graded_ideal(const PolyRing& R, Rng& rng, int num_gens,
                          int deg_lo, int deg_hi) {
    std::vector<Polynomial> gens;
    gens.reserve(num_gens);
    for (int g = 0; g < num_gens; ++g) {
        int d = deg_lo + static_cast<int>(rng.below(deg_hi - deg_lo + 1));
        Polynomial f;
        do {
            std::vector<Term> terms;
            for (const auto& m : monomials_of_degree(R.n, d)) {
                Fp c = rng.field_element(R.field, false);
                if (c.v != 0) terms.push_back(Term{m, c});
            }
            f = Polynomial::from_terms(R, std::move(terms));
        } while (f.is_zero());
        gens.push_back(std::move(f));
    }
    return Ideal(R, std::move(gens));
}

MonomialIdeal random_monomial_ideal(std::size_t nvars, Rng& rng, int num_gens,
                                    int deg_lo, int deg_hi) {
    std::vector<Monomial> gens;
    gens.reserve(num_gens);
    for (int g = 0; g < num_gens; ++g) {
        int d = deg_lo + static_cast<int>(rng.below(deg_hi - deg_lo + 1));
        gens.push_back(random_monomial(nvars, rng, d));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal random_stable_ideal(std::size_t nvars, Rng& rng, int num_gens,
                                  int max_deg) {
    std::vector<Monomial> seeds;
    seeds.reserve(num_gens);
    for (int g = 0; g < num_gens; ++g) {
        int d = 1 + static_cast<int>(rng.below(max_deg));
        seeds.push_back(random_monomial(nvars, rng, d));
    }
    return stable_closure(nvars, std::move(seeds));
}

}  // namespace cmf
