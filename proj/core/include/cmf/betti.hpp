#pragma once

#include <map>
#include <utility>

#include "cmf/gin.hpp"
#include "cmf/ideal.hpp"

namespace cmf {

// Graded Betti numbers beta_{i,j}(R/I), nonzero entries only.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int max_i = 0;
    int max_j = 0;
    // True when max_j >= max_i + regularity read off the table, so the
    // projective dimension and last ranks are final.
    bool complete = false;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int projective_dimension() const;
    // max{ j - i : beta_{i,j} != 0 }.
    int regularity_of_quotient() const;
    long long rank_at(int i) const;
};

// Betti numbers from the graded strands of the Koszul complex: pure rank
// computations over F_p, no free resolution is built.
BettiTable koszul_betti(const Ideal& I, int max_i, int max_j);

// Full table swept degree by degree until the completeness certificate
// holds; reg_hint (regularity of I from an independent route) short-cuts
// the sweep.  Fails loudly past the degree cap.
BettiTable betti_table(const Ideal& I, int reg_hint = -1, int max_j_cap = -1);

// Closed-formula Betti numbers of a stable monomial ideal, shifted to R/I
// indexing; the independent oracle for koszul_betti.  Throws NotStable.
BettiTable ek_betti(const MonomialIdeal& M);

// Castelnuovo-Mumford regularity of I (ideal convention): the maximal
// minimal-generator degree of a stable gin, with a Koszul sweep fallback.
int regularity(const Ideal& I, Rng& rng);
int regularity_with_gin(const Ideal& I, const GinResult& g, Rng& rng);

// For an ideal generated in one degree d: regularity == d.
// Throws NotEquigenerated when generators span several degrees.
bool has_linear_resolution(const Ideal& I, Rng& rng);

struct HomologicalProfile {
    std::size_t projective_dimension;
    std::size_t depth;
    bool cohen_macaulay;
    bool gorenstein;
};
HomologicalProfile homological_profile(const Ideal& I);
// Same verdicts from an already computed complete table.
HomologicalProfile profile_from_table(const Ideal& I, const BettiTable& t);

}  // namespace cmf
