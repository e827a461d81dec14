#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "cmf/betti.hpp"
#include "cmf/gin.hpp"
#include "cmf/ideal.hpp"

namespace cmf {

inline constexpr int kDefaultSamples = 3;
inline constexpr int kRetryCap = 8;

// The t-sequence (t_0, ..., t_{n-1}) of a graded ideal: t_i is the t-value
// of the image of I in i+1 variables under a random flag of linear forms.
struct TSequence {
    std::vector<long long> values;   // values[i] = t_i
    long long B = 0;                 // sum of the t_i
    std::vector<LinearForm> forms_used;  // the reduction chain z_n, ..., z_2
    int samples_per_level = kDefaultSamples;
};

// m-fullness: mI : z = I for some (equivalently, a general) linear form z.
// Success on any sample wins; all samples failing means not m-full.
bool is_m_full(const Ideal& I, Rng& rng, int samples = kDefaultSamples);

// t(I) = min over linear forms of l((I:z)/I), attained by a general form;
// the sampled minimum over finitely many general forms is exact with
// overwhelming probability.  Throws AllSamplesInfinite past the retry cap.
long long t_value(const Ideal& I, Rng& rng, int samples = kDefaultSamples);

TSequence t_sequence(const Ideal& I, Rng& rng, int samples = kDefaultSamples);

// Recursive definition: mI : z = I and the image of I mod z is completely
// m-full in one fewer variable, with the same z; random z per level with
// resampling.  Fills `chain` with the successful forms when provided.
bool is_completely_m_full_recursive(const Ideal& I, Rng& rng,
                                    int samples = kDefaultSamples,
                                    std::vector<LinearForm>* chain = nullptr);

// Same recursion with the coordinate forms x_n, ..., x_1 (no randomness);
// for monomial ideals this succeeds exactly on the stable ones.
bool is_completely_m_full_coordinate(const Ideal& I);

// mu(I) == B(I).
bool is_completely_m_full_via_B(const Ideal& I, Rng& rng);

// Every component ideal I_<j> has a linear resolution, checked for j from
// the initial degree through the maximal generator degree plus a sentinel
// component at regularity + 1.
bool is_componentwise_linear(const Ideal& I, Rng& rng);

// gin(I) is stable and mu(I) = mu(<gin(I)>).
bool nagel_romer(const Ideal& I, Rng& rng);

// Componentwise linear + Cohen-Macaulay of height h and type r <= h force
// h - r independent linear forms among the minimal generators; vacuously
// true when the hypotheses fail.
bool low_type_check(const Ideal& I, Rng& rng);

struct Report {
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<std::string> generators;
    long long mu = 0;
    std::vector<long long> t_sequence;
    long long B = 0;
    std::optional<long long> type;
    std::size_t height = 0;
    std::size_t dim = 0;
    int regularity = 0;
    std::vector<std::string> gin_gens;
    bool gin_stable = false;
    bool m_full = false;
    bool completely_m_full_recursive = false;
    bool completely_m_full_B = false;
    bool componentwise_linear = false;
    bool nagel_romer = false;
    bool consistent = false;
    bool low_type = false;
    std::uint64_t seed = 0;
    std::vector<std::tuple<int, int, long long>> betti;
    std::map<std::string, double> timings;          // not serialized to JSON
    std::map<std::string, std::string> errors;      // per-field failures
};

struct AnalysisOptions {
    int samples = kDefaultSamples;
    int gin_trials = kDefaultGinTrials;
    bool with_betti = true;
};

// Runs every decider, fills the Report and the main-theorem consistency
// flag.  Per-field errors are collected without aborting the other fields.
Report analyze(const Ideal& I, Rng& rng, const AnalysisOptions& opts = {});

}  // namespace cmf
