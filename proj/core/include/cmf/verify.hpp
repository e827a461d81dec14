#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmf/analysis.hpp"

namespace cmf {

struct VerifyParams {
    std::uint64_t seed = 1;
    int trials = 50;
    int n_min = 2;
    int n_max = 3;
    int deg_min = 1;
    int deg_max = 3;
    int max_gens = 4;
    std::uint32_t p = 32003;
    int samples = kDefaultSamples;
    int gin_trials = kDefaultGinTrials;
    // The fresh-variable extension check roughly doubles the work; it can
    // be capped at a variable count to keep big sweeps fast.
    int extension_check_max_n = 8;
};

struct InstanceFailure {
    int index;
    std::string check;
    std::string detail;
    std::uint64_t seed;
    std::string instance;
};

struct VerificationSummary {
    VerifyParams params;
    int trials_run = 0;
    // check name -> number of instances it ran on.
    std::map<std::string, long long> checks_run;
    std::vector<InstanceFailure> failures;
    double wall_seconds = 0;  // excluded from JSON

    bool all_passed() const { return failures.empty(); }
    long long ran(const std::string& check) const {
        auto it = checks_run.find(check);
        return it == checks_run.end() ? 0 : it->second;
    }
    long long failed(const std::string& check) const;
};

// Generates a deterministic mix of random graded, random monomial, random
// stable, and coordinate-changed stable instances, analyzes each one, and
// tallies the main-theorem flag agreement together with the supporting
// identities (mu <= B, t-sequence transfer to gin, the colon-length
// identity for m-fullness, the stable/coordinate-recursion equivalence,
// type transfer under gin, Hilbert preservation, and the fresh-variable
// extension).  Deterministic per seed.
VerificationSummary run_verify(const VerifyParams& params);

std::string summary_to_json(const VerificationSummary& s);
std::string summary_to_text(const VerificationSummary& s);

}  // namespace cmf
