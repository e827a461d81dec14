#pragma once

#include <cstdint>
#include <vector>

#include "cmf/ideal.hpp"

namespace cmf {

struct GinResult {
    MonomialIdeal gin;
    int trials_used = 0;
    bool agreement = false;  // true iff all trials produced the same ideal
    std::vector<std::uint64_t> seeds;
};

inline constexpr int kDefaultGinTrials = 3;
inline constexpr int kGinRetryRounds = 8;

// Generic initial ideal under grevlex by Monte Carlo: each trial applies an
// independent random invertible change of coordinates and takes the lead
// ideal of the reduced basis.  All trials agreeing certifies genericity;
// on disagreement the round is re-randomized up to a retry cap, after which
// a majority answer is returned with agreement = false, or NoAgreement is
// thrown when no two trials ever matched.
GinResult gin(const Ideal& I, Rng& rng, int trials = kDefaultGinTrials);

bool is_gin_stable(const Ideal& I, Rng& rng, int trials = kDefaultGinTrials);

}  // namespace cmf
