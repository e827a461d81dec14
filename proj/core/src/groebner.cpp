#include "cmf/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>

namespace cmf {

namespace {

// First element of G whose lead divides m; G.size() if none.
std::size_t find_reducer(const std::vector<Polynomial>& G, const Monomial& m) {
    for (std::size_t k = 0; k < G.size(); ++k)
        if (!G[k].is_zero() && G[k].lead().mono.divides(m)) return k;
    return G.size();
}

}  // namespace

Polynomial normal_form(const PolyRing& R, const Polynomial& f,
                       const std::vector<Polynomial>& G) {
    std::vector<Term> remainder;
    Polynomial w = f;
    while (!w.is_zero()) {
        const Term& lt = w.lead();
        std::size_t k = find_reducer(G, lt.mono);
        if (k == G.size()) {
            remainder.push_back(lt);
            std::vector<Term> tail(w.terms().begin() + 1, w.terms().end());
            w = Polynomial::from_sorted_terms(std::move(tail));
            continue;
        }
        const Polynomial& g = G[k];
        Fp c = R.field.div(lt.coeff, g.lead().coeff);
        Monomial q = lt.mono.divided_by(g.lead().mono);
        w = sub_mul(R, w, c, q, g);
    }
    return Polynomial::from_sorted_terms(std::move(remainder));
}

Polynomial normal_form(const PolyRing& R, const Polynomial& f,
                       const GroebnerBasis& G) {
    return normal_form(R, f, G.elements);
}

bool in_ideal(const PolyRing& R, const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(R, f, G).is_zero();
}

namespace {

// Normal form against every element of G except index `skip`.
Polynomial normal_form_except(const PolyRing& R, const Polynomial& f,
                              const std::vector<Polynomial>& G,
                              std::size_t skip) {
    std::vector<Term> remainder;
    Polynomial w = f;
    while (!w.is_zero()) {
        const Term& lt = w.lead();
        std::size_t k = G.size();
        for (std::size_t c = 0; c < G.size(); ++c) {
            if (c == skip || G[c].is_zero()) continue;
            if (G[c].lead().mono.divides(lt.mono)) {
                k = c;
                break;
            }
        }
        if (k == G.size()) {
            remainder.push_back(lt);
            std::vector<Term> tail(w.terms().begin() + 1, w.terms().end());
            w = Polynomial::from_sorted_terms(std::move(tail));
            continue;
        }
        Fp c = R.field.div(lt.coeff, G[k].lead().coeff);
        Monomial q = lt.mono.divided_by(G[k].lead().mono);
        w = sub_mul(R, w, c, q, G[k]);
    }
    return Polynomial::from_sorted_terms(std::move(remainder));
}

}  // namespace

std::vector<Polynomial> interreduce(const PolyRing& R,
                                    std::vector<Polynomial> polys) {
    std::erase_if(polys, [](const Polynomial& p) { return p.is_zero(); });
    // Fully reduce each element against the others until stable; this also
    // discards redundant elements (they reduce to zero) and leaves pairwise
    // non-dividing leads.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            Polynomial r = normal_form_except(R, polys[i], polys, i);
            if (!poly_equal(r, polys[i])) {
                changed = true;
                if (r.is_zero()) {
                    polys.erase(polys.begin() + i);
                    --i;
                } else {
                    polys[i] = std::move(r);
                }
            }
        }
    }
    for (auto& g : polys) g = make_monic(R, g);
    std::sort(polys.begin(), polys.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order_greater(R.order, a.lead().mono, b.lead().mono);
              });
    return polys;
}

GroebnerBasis buchberger(const PolyRing& R, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(make_monic(R, g));
    G = interreduce(R, std::move(G));
    if (G.empty()) return GroebnerBasis{};
    if (G.size() == 1 && G[0].lead().mono.is_unit())
        return GroebnerBasis{{Polynomial::constant(R, R.field.one())}};

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    // pending[i][j] tracks pairs not yet handled, for the chain criterion.
    std::vector<std::vector<bool>> pending;
    auto grow_pending = [&](std::size_t sz) {
        pending.resize(sz);
        for (auto& row : pending) row.resize(sz, false);
    };
    auto push_pairs = [&](std::size_t jnew) {
        grow_pending(jnew + 1);
        for (std::size_t i = 0; i < jnew; ++i) {
            pairs.push_back(
                Pair{i, jnew, G[i].lead().mono.lcm(G[jnew].lead().mono)});
            pending[i][jnew] = pending[jnew][i] = true;
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

    for (;;) {
        // Normal selection: smallest lcm in the ring order, ties by index.
        if (pairs.empty()) break;
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            auto c = order_cmp(R.order, pairs[k].lcm, pairs[best].lcm);
            if (c == std::strong_ordering::less ||
                (c == std::strong_ordering::equal &&
                 (pairs[k].i < pairs[best].i ||
                  (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        Pair pr = pairs[best];
        pairs[best] = std::move(pairs.back());
        pairs.pop_back();
        pending[pr.i][pr.j] = pending[pr.j][pr.i] = false;

        const Monomial& li = G[pr.i].lead().mono;
        const Monomial& lj = G[pr.j].lead().mono;
        // Product criterion: coprime leads give an S-polynomial that
        // already reduces to zero.
        if (li.coprime(lj)) continue;
        // Chain criterion: skip if some other lead divides the lcm and both
        // companion pairs were already handled.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (G[k].lead().mono.divides(pr.lcm) && !pending[pr.i][k] &&
                !pending[pr.j][k])
                skip = true;
        }
        if (skip) continue;

        // S-polynomial of two monic elements.
        Monomial qi = pr.lcm.divided_by(li);
        Monomial qj = pr.lcm.divided_by(lj);
        Polynomial s = sub(R, mul_term(R, G[pr.i], Term{qi, R.field.one()}),
                           mul_term(R, G[pr.j], Term{qj, R.field.one()}));
        Polynomial r = normal_form(R, s, G);
        if (r.is_zero()) continue;
        if (r.lead().mono.is_unit())
            return GroebnerBasis{{Polynomial::constant(R, R.field.one())}};
        G.push_back(make_monic(R, r));
        push_pairs(G.size() - 1);
    }

    return GroebnerBasis{interreduce(R, std::move(G))};
}

MonomialIdeal lead_ideal(const PolyRing& R, const GroebnerBasis& G) {
    std::vector<Monomial> leads;
    leads.reserve(G.elements.size());
    for (const auto& g : G.elements) leads.push_back(g.lead().mono);
    return MonomialIdeal(R.n, std::move(leads));
}

}  // namespace cmf
