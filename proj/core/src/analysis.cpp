#include "cmf/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace cmf {

namespace {

void require_proper_nonzero(const Ideal& I) {
    if (I.is_zero()) throw DegenerateIdeal("decider requires a nonzero ideal");
    if (I.is_unit()) throw DegenerateIdeal("decider requires a proper ideal");
}

LinearForm random_form_with_pivot(const PolyRing& R, Rng& rng) {
    for (;;) {
        LinearForm z = random_linear_form(R, rng);
        if (z.coeffs[R.n - 1].v != 0) return z;
    }
}

LinearForm coordinate_form(const PolyRing& R, std::size_t i) {
    LinearForm z;
    z.coeffs.assign(R.n, R.field.zero());
    z.coeffs[i] = R.field.one();
    return z;
}

// mI : z = I, decided by mutual membership with no extra basis computation:
// the colon basis is computed in coordinates sending z to the last
// variable, the pullback generators are checked against GB(I), and the
// transformed generators of I are checked against the colon basis.
bool m_full_with(const Ideal& I, const Ideal& mI, const LinearForm& z) {
    const PolyRing& R = I.ring();
    LinearChange B = change_sending_to_last_variable(R, z);
    Ideal mJ = apply_change(mI, B);
    // Reduced basis of (sigma(mI) : x_n) in the transformed coordinates.
    Monomial xn = Monomial::variable(R.n, R.n - 1);
    std::vector<Polynomial> cb;
    for (const auto& g : mJ.groebner().elements) {
        if (xn.divides(g.lead().mono)) {
            std::vector<Term> t;
            t.reserve(g.terms().size());
            for (const auto& term : g.terms())
                t.push_back(Term{term.mono.divided_by(xn), term.coeff});
            cb.push_back(Polynomial::from_sorted_terms(std::move(t)));
        } else {
            cb.push_back(g);
        }
    }
    cb = interreduce(R, std::move(cb));
    // Direction 1: colon inside I, checked after pulling back.
    LinearChange Binv = inverse(R, B);
    for (const auto& g : cb)
        if (!contains(I, apply_linear_change(R, g, Binv))) return false;
    // Direction 2: I inside the colon, checked in transformed coordinates.
    for (const auto& g : I.gens())
        if (!normal_form(R, apply_linear_change(R, g, B), cb).is_zero())
            return false;
    return true;
}

}  // namespace

bool is_m_full(const Ideal& I, Rng& rng, int samples) {
    require_proper_nonzero(I);
    Ideal mI = m_times(I);
    for (int s = 0; s < samples; ++s) {
        LinearForm z = random_linear_form(I.ring(), rng);
        if (m_full_with(I, mI, z)) return true;
    }
    return false;
}

long long t_value(const Ideal& I, Rng& rng, int samples) {
    require_proper_nonzero(I);
    std::optional<long long> best;
    int finite = 0;
    for (int s = 0; s < samples + kRetryCap && finite < samples; ++s) {
        LinearForm z = random_linear_form(I.ring(), rng);
        auto l = colon_length(I, z);
        if (!l) continue;  // non-general form, resample
        ++finite;
        if (!best || *l < *best) best = *l;
    }
    if (!best) throw AllSamplesInfinite();
    return *best;
}

namespace {

TSequence t_sequence_once(const Ideal& I, Rng& rng, int samples) {
    const std::size_t n = I.ring().n;
    TSequence out;
    out.samples_per_level = samples;
    out.values.assign(n, 0);
    Ideal J = I;
    for (std::size_t level = n; level >= 1; --level) {
        // t_{level-1} is the t-value of the image of I in `level` variables.
        if (J.is_zero()) {
            out.values[level - 1] = 0;
        } else {
            out.values[level - 1] = t_value(J, rng, samples);
        }
        if (level == 1) break;
        // Reduce modulo a random form; resample if the image collapses to
        // zero, which only happens for non-general forms.
        for (int attempt = 0;; ++attempt) {
            LinearForm z = random_form_with_pivot(J.ring(), rng);
            Ideal image = reduce_mod_linear(J, z);
            if (!image.is_zero() || attempt >= kRetryCap) {
                out.forms_used.push_back(z);
                J = std::move(image);
                break;
            }
        }
    }
    if (!I.is_zero() && out.values[0] != 1)
        throw MathError("t_0 != 1; the sampled flag was degenerate");
    for (long long v : out.values) out.B += v;
    return out;
}

}  // namespace

TSequence t_sequence(const Ideal& I, Rng& rng, int samples) {
    require_proper_nonzero(I);
    // Each run fixes one random flag of forms.  A non-general flag can
    // distort the sequence (the t-values of a degenerate image are not the
    // t-values of the ideal), so the value is accepted only when two
    // independent runs agree; disagreeing runs are thrown away and redrawn.
    TSequence prev = t_sequence_once(I, rng, samples);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        TSequence cur = t_sequence_once(I, rng, samples);
        if (cur.values == prev.values) return cur;
        prev = std::move(cur);
    }
    throw MathError("t-sequence runs never agreed; field too small");
}

namespace {

bool cmf_recursive_impl(const Ideal& J, Rng& rng, int samples,
                        std::vector<LinearForm>* chain) {
    const PolyRing& R = J.ring();
    // Ideals of K[x] are principal; the level condition m J : z = J always
    // holds there and the image in zero variables is the base case.
    if (R.n <= 1) return true;
    if (J.is_zero()) return true;
    Ideal mJ = m_times(J);
    for (int s = 0; s < samples; ++s) {
        LinearForm z = random_form_with_pivot(R, rng);
        if (!m_full_with(J, mJ, z)) continue;
        std::vector<LinearForm> sub;
        if (cmf_recursive_impl(reduce_mod_linear(J, z), rng, samples,
                               chain ? &sub : nullptr)) {
            if (chain) {
                chain->push_back(z);
                chain->insert(chain->end(), sub.begin(), sub.end());
            }
            return true;
        }
    }
    return false;
}

bool cmf_coordinate_impl(const Ideal& J) {
    const PolyRing& R = J.ring();
    if (R.n <= 1) return true;
    if (J.is_zero()) return true;
    Ideal mJ = m_times(J);
    LinearForm z = coordinate_form(R, R.n - 1);
    if (!m_full_with(J, mJ, z)) return false;
    return cmf_coordinate_impl(reduce_mod_linear(J, z));
}

}  // namespace

bool is_completely_m_full_recursive(const Ideal& I, Rng& rng, int samples,
                                    std::vector<LinearForm>* chain) {
    require_proper_nonzero(I);
    return cmf_recursive_impl(I, rng, samples, chain);
}

bool is_completely_m_full_coordinate(const Ideal& I) {
    require_proper_nonzero(I);
    return cmf_coordinate_impl(I);
}

bool is_completely_m_full_via_B(const Ideal& I, Rng& rng) {
    require_proper_nonzero(I);
    return mu(I) == t_sequence(I, rng).B;
}

namespace {

bool componentwise_linear_impl(const Ideal& I, int reg, Rng& rng) {
    MuProfile prof = mu_profile(I);
    if (prof.by_degree.empty()) return true;
    int lo = prof.by_degree.begin()->first;
    int hi = prof.by_degree.rbegin()->first;
    std::vector<int> degrees;
    for (int j = lo; j <= hi; ++j) degrees.push_back(j);
    // Sentinel component past the regularity: for j above the maximal
    // generator degree I_<j> = m * I_<j-1>, and linearity must persist.
    degrees.push_back(reg + 1);
    for (int j : degrees) {
        Ideal C = component_ideal(I, j);
        if (C.is_zero()) continue;
        Rng child = rng.fork(static_cast<std::uint64_t>(j));
        if (!has_linear_resolution(C, child)) return false;
    }
    return true;
}

}  // namespace

bool is_componentwise_linear(const Ideal& I, Rng& rng) {
    require_proper_nonzero(I);
    Rng reg_rng = rng.fork(0x777);
    int reg = regularity(I, reg_rng);
    return componentwise_linear_impl(I, reg, rng);
}

bool nagel_romer(const Ideal& I, Rng& rng) {
    require_proper_nonzero(I);
    GinResult g = gin(I, rng);
    if (!is_stable(g.gin)) return false;
    return mu(I) == mu(monomial_to_ideal(I.ring(), g.gin));
}

bool low_type_check(const Ideal& I, Rng& rng) {
    require_proper_nonzero(I);
    Rng cwl_rng = rng.fork(1);
    if (!is_componentwise_linear(I, cwl_rng)) return true;
    HomologicalProfile prof = homological_profile(I);
    if (!prof.cohen_macaulay) return true;
    auto r = type_of(I);
    DimHeight dh = dim_and_height(I);
    if (!r || static_cast<long long>(dh.height) < *r) return true;
    long long h = static_cast<long long>(dh.height);
    long long dim_i1 = static_cast<long long>(I.ring().n) -
                       hilbert(I, 1).values[1];
    return dim_i1 >= h - *r;
}

Report analyze(const Ideal& I, Rng& rng, const AnalysisOptions& opts) {
    require_proper_nonzero(I);
    const PolyRing& R = I.ring();
    Report rep;
    rep.p = R.field.modulus();
    rep.vars = R.names;
    for (const auto& g : I.gens()) rep.generators.push_back(to_string(R, g));
    rep.seed = rng.seed();

    auto timed = [&](const char* name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        try {
            fn();
        } catch (const std::exception& e) {
            rep.errors[name] = e.what();
        }
        rep.timings[name] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
    };

    Rng gin_rng = rng.fork(1);
    Rng tseq_rng = rng.fork(2);
    Rng mfull_rng = rng.fork(3);
    Rng rec_rng = rng.fork(4);
    Rng cwl_rng = rng.fork(5);
    Rng ltc_rng = rng.fork(6);

    std::optional<GinResult> ging;
    timed("gin", [&] {
        ging = gin(I, gin_rng, opts.gin_trials);
        for (const auto& m : ging->gin.min_gens())
            rep.gin_gens.push_back(to_string(R, m));
        rep.gin_stable = is_stable(ging->gin);
    });
    timed("mu", [&] { rep.mu = mu(I); });
    timed("t_sequence", [&] {
        TSequence ts = t_sequence(I, tseq_rng, opts.samples);
        rep.t_sequence = ts.values;
        rep.B = ts.B;
        rep.completely_m_full_B = rep.mu == ts.B;
    });
    timed("m_full", [&] { rep.m_full = is_m_full(I, mfull_rng, opts.samples); });
    timed("completely_m_full_recursive", [&] {
        rep.completely_m_full_recursive =
            is_completely_m_full_recursive(I, rec_rng, opts.samples);
    });
    int reg = -1;
    timed("regularity", [&] {
        Rng fallback = gin_rng.fork(9);
        reg = ging ? regularity_with_gin(I, *ging, fallback)
                   : regularity(I, fallback);
        rep.regularity = reg;
    });
    timed("componentwise_linear", [&] {
        if (reg >= 0)
            rep.componentwise_linear = componentwise_linear_impl(I, reg, cwl_rng);
        else
            rep.componentwise_linear = is_componentwise_linear(I, cwl_rng);
    });
    timed("nagel_romer", [&] {
        if (ging)
            rep.nagel_romer = rep.gin_stable &&
                              rep.mu == mu(monomial_to_ideal(R, ging->gin));
        else
            rep.nagel_romer = false;
    });
    timed("type", [&] { rep.type = type_of(I); });
    timed("dim_height", [&] {
        DimHeight dh = dim_and_height(I);
        rep.dim = dh.dim;
        rep.height = dh.height;
    });
    std::optional<BettiTable> table;
    if (opts.with_betti) {
        timed("betti", [&] {
            table = betti_table(I, reg >= 0 ? reg : -1);
            for (const auto& [ij, v] : table->entries)
                rep.betti.emplace_back(ij.first, ij.second, v);
        });
    }
    timed("low_type", [&] {
        (void)ltc_rng;
        // Gate: componentwise linear, Cohen-Macaulay, height >= type;
        // otherwise the claim is vacuous.
        if (!rep.componentwise_linear) {
            rep.low_type = true;
            return;
        }
        if (!table) table = betti_table(I, reg >= 0 ? reg : -1);
        HomologicalProfile prof = profile_from_table(I, *table);
        if (!prof.cohen_macaulay || !rep.type ||
            static_cast<long long>(rep.height) < *rep.type) {
            rep.low_type = true;
            return;
        }
        long long dim_i1 =
            static_cast<long long>(R.n) - hilbert(I, 1).values[1];
        rep.low_type = dim_i1 >= static_cast<long long>(rep.height) - *rep.type;
    });

    rep.consistent =
        rep.errors.empty() &&
        rep.completely_m_full_recursive == rep.completely_m_full_B &&
        rep.completely_m_full_B == rep.componentwise_linear &&
        rep.componentwise_linear == rep.nagel_romer;
    return rep;
}

}  // namespace cmf
