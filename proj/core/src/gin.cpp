#include "cmf/gin.hpp"

#include <algorithm>
#include <map>

namespace cmf {

GinResult gin(const Ideal& I, Rng& rng, int trials) {
    if (trials < 2) throw MathError("gin requires at least 2 trials");
    const PolyRing& R = I.ring();
    if (I.is_zero())
        return GinResult{MonomialIdeal::zero(R.n), 0, true, {}};

    std::vector<MonomialIdeal> results;
    std::vector<std::uint64_t> seeds;
    for (int round = 0; round < kGinRetryRounds; ++round) {
        bool round_unanimous = true;
        std::size_t round_start = results.size();
        for (int t = 0; t < trials; ++t) {
            Rng child = rng.fork(static_cast<std::uint64_t>(round) * 64 + t);
            seeds.push_back(child.seed());
            Ideal J = apply_change(I, random_linear_change(R, child));
            results.push_back(J.lead_monomials());
            if (results.size() > round_start + 1 &&
                !(results.back() == results[round_start]))
                round_unanimous = false;
        }
        if (round_unanimous) {
            return GinResult{results.back(), static_cast<int>(results.size()),
                             results.size() == static_cast<std::size_t>(trials),
                             std::move(seeds)};
        }
    }
    // Majority over everything sampled; all-distinct means no certificate.
    std::map<std::vector<std::vector<int>>, int> votes;
    for (const auto& m : results) {
        std::vector<std::vector<int>> key;
        for (const auto& g : m.min_gens()) key.push_back(g.exponents());
        ++votes[key];
    }
    int best = 0;
    const MonomialIdeal* winner = nullptr;
    for (const auto& m : results) {
        std::vector<std::vector<int>> key;
        for (const auto& g : m.min_gens()) key.push_back(g.exponents());
        int v = votes[key];
        if (v > best) {
            best = v;
            winner = &m;
        }
    }
    if (best < 2) throw NoAgreement();
    return GinResult{*winner, static_cast<int>(results.size()), false,
                     std::move(seeds)};
}

bool is_gin_stable(const Ideal& I, Rng& rng, int trials) {
    return is_stable(gin(I, rng, trials).gin);
}

}  // namespace cmf
