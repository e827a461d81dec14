#include "cmf/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "cmf/linalg.hpp"

namespace cmf {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw NonHomogeneousGenerator("generator is not homogeneous: " +
                                          to_string(ring_, g));
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner() const {
    if (!gb_) gb_ = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_));
    return *gb_;
}

const MonomialIdeal& Ideal::lead_monomials() const {
    if (!lead_)
        lead_ = std::make_shared<const MonomialIdeal>(lead_ideal(ring_, groebner()));
    return *lead_;
}

int Ideal::max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool contains(const Ideal& I, const Polynomial& f) {
    return normal_form(I.ring(), f, I.groebner()).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.gens())
        if (!contains(b, g)) return false;
    for (const auto& g : b.gens())
        if (!contains(a, g)) return false;
    return true;
}

Ideal m_times(const Ideal& I) {
    const PolyRing& R = I.ring();
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size() * R.n);
    for (const auto& g : I.gens())
        for (std::size_t i = 0; i < R.n; ++i)
            gens.push_back(
                mul_term(R, g, Term{Monomial::variable(R.n, i), R.field.one()}));
    return Ideal(R, std::move(gens));
}

namespace {

// Exact quotient g / f for g in the principal ideal (f).
Polynomial divide_exact(const PolyRing& R, const Polynomial& g,
                        const Polynomial& f) {
    std::vector<Term> quotient;
    Polynomial w = g;
    while (!w.is_zero()) {
        const Term& lt = w.lead();
        if (!f.lead().mono.divides(lt.mono))
            throw MathError("exact division failed");
        Fp c = R.field.div(lt.coeff, f.lead().coeff);
        Monomial q = lt.mono.divided_by(f.lead().mono);
        w = sub_mul(R, w, c, q, f);
        quotient.push_back(Term{std::move(q), c});
    }
    return Polynomial::from_terms(R, std::move(quotient));
}

// Extended ring with one elimination variable t in front.
PolyRing elimination_ring(const PolyRing& R) {
    std::vector<std::string> names;
    names.reserve(R.n + 1);
    names.push_back("@t");
    for (const auto& nm : R.names) names.push_back(nm);
    return PolyRing(R.n + 1, R.field.modulus(), std::move(names),
                    MonomialOrder{1});
}

Polynomial embed(const PolyRing& Re, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<int> e;
        e.reserve(Re.n);
        e.push_back(0);
        for (int x : t.mono.exponents()) e.push_back(x);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(Re, std::move(terms));
}

Polynomial project(const PolyRing& R, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        assert(t.mono.exponent(0) == 0);
        std::vector<int> e(t.mono.exponents().begin() + 1,
                           t.mono.exponents().end());
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(R, std::move(terms));
}

// Generators of a*A + (1-a)*B style combinations for intersection/colon:
// returns the t-free elements of the Groebner basis of the given ideal of
// the elimination ring, projected back down to R.
std::vector<Polynomial> eliminate_t(const PolyRing& R, const PolyRing& Re,
                                    const std::vector<Polynomial>& gens) {
    GroebnerBasis G = buchberger(Re, gens);
    std::vector<Polynomial> out;
    for (const auto& g : G.elements) {
        if (g.lead().mono.exponent(0) != 0) continue;
        out.push_back(project(R, g));
    }
    return out;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    const PolyRing& R = a.ring();
    assert(R == b.ring());
    if (a.is_zero() || b.is_zero()) return Ideal(R, {});
    PolyRing Re = elimination_ring(R);
    Polynomial t = Polynomial::monomial(Re, Monomial::variable(Re.n, 0),
                                        Re.field.one());
    Polynomial one_minus_t =
        sub(Re, Polynomial::constant(Re, Re.field.one()), t);
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens()) gens.push_back(mul(Re, t, embed(Re, g)));
    for (const auto& g : b.gens())
        gens.push_back(mul(Re, one_minus_t, embed(Re, g)));
    return Ideal(R, eliminate_t(R, Re, gens));
}

Ideal colon_via_elimination(const Ideal& I, const Polynomial& f) {
    const PolyRing& R = I.ring();
    if (f.is_zero()) throw ZeroDivisorPolynomial();
    if (I.is_zero()) return Ideal(R, {});
    // I : f = (1/f) (I cap (f)).
    PolyRing Re = elimination_ring(R);
    Polynomial t = Polynomial::monomial(Re, Monomial::variable(Re.n, 0),
                                        Re.field.one());
    Polynomial one_minus_t =
        sub(Re, Polynomial::constant(Re, Re.field.one()), t);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(mul(Re, t, embed(Re, g)));
    gens.push_back(mul(Re, one_minus_t, embed(Re, f)));
    std::vector<Polynomial> inter = eliminate_t(R, Re, gens);
    std::vector<Polynomial> quots;
    quots.reserve(inter.size());
    for (const auto& g : inter) quots.push_back(divide_exact(R, g, f));
    return Ideal(R, std::move(quots));
}

namespace {

// Reduced Groebner basis of J : x_n read off a reduced grevlex basis of the
// homogeneous ideal J: divide the elements whose lead (hence every term) is
// divisible by x_n, keep the others.
std::vector<Polynomial> colon_last_variable_basis(const PolyRing& R,
                                                  const GroebnerBasis& G) {
    Monomial xn = Monomial::variable(R.n, R.n - 1);
    std::vector<Polynomial> out;
    out.reserve(G.elements.size());
    for (const auto& g : G.elements) {
        if (xn.divides(g.lead().mono)) {
            std::vector<Term> t;
            t.reserve(g.terms().size());
            for (const auto& term : g.terms())
                t.push_back(Term{term.mono.divided_by(xn), term.coeff});
            out.push_back(Polynomial::from_sorted_terms(std::move(t)));
        } else {
            out.push_back(g);
        }
    }
    return interreduce(R, std::move(out));
}

}  // namespace

Ideal colon_linear(const Ideal& I, const LinearForm& z) {
    const PolyRing& R = I.ring();
    if (I.is_zero()) return Ideal(R, {});
    LinearChange B = change_sending_to_last_variable(R, z);
    Ideal J = apply_change(I, B);
    std::vector<Polynomial> basis = colon_last_variable_basis(R, J.groebner());
    LinearChange Binv = inverse(R, B);
    std::vector<Polynomial> gens;
    gens.reserve(basis.size());
    for (const auto& g : basis) gens.push_back(apply_linear_change(R, g, Binv));
    return Ideal(R, std::move(gens));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw ZeroDivisorPolynomial();
    if (!f.is_zero() && f.degree() == 1 && f.is_homogeneous()) {
        LinearForm z;
        z.coeffs.assign(I.ring().n, I.ring().field.zero());
        for (const auto& t : f.terms()) z.coeffs[t.mono.max_var()] = t.coeff;
        return colon_linear(I, z);
    }
    return colon_via_elimination(I, f);
}

Ideal colon_m(const Ideal& I) {
    const PolyRing& R = I.ring();
    if (I.is_zero()) return Ideal(R, {});
    if (I.is_unit()) return Ideal(R, I.gens());
    std::optional<Ideal> acc;
    for (std::size_t i = 0; i < R.n; ++i) {
        LinearForm xi;
        xi.coeffs.assign(R.n, R.field.zero());
        xi.coeffs[i] = R.field.one();
        Ideal ci = colon_linear(I, xi);
        if (!acc)
            acc = std::move(ci);
        else
            acc = intersect(*acc, ci);
    }
    return std::move(*acc);
}

Ideal reduce_mod_linear(const Ideal& I, const LinearForm& z) {
    const PolyRing& R = I.ring();
    PolyRing Rout = reduced_ring(R);
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        Polynomial h = substitute_last_variable(R, Rout, g, z);
        if (!h.is_zero()) gens.push_back(std::move(h));
    }
    return Ideal(Rout, std::move(gens));
}

Ideal apply_change(const Ideal& I, const LinearChange& M) {
    const PolyRing& R = I.ring();
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(apply_linear_change(R, g, M));
    return Ideal(R, std::move(gens));
}

Ideal extend_one_variable(const Ideal& I) {
    const PolyRing& R = I.ring();
    std::vector<std::string> names(R.names);
    std::string fresh = "w";
    while (std::find(names.begin(), names.end(), fresh) != names.end())
        fresh += "w";
    names.push_back(fresh);
    PolyRing Rx(R.n + 1, R.field.modulus(), std::move(names), R.order);
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        std::vector<Term> terms;
        terms.reserve(g.terms().size());
        for (const auto& t : g.terms()) {
            std::vector<int> e(t.mono.exponents());
            e.push_back(0);
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        gens.push_back(Polynomial::from_terms(Rx, std::move(terms)));
    }
    return Ideal(Rx, std::move(gens));
}

MuProfile mu_profile(const Ideal& I) {
    MuProfile out;
    const PolyRing& R = I.ring();
    if (I.is_zero()) return out;
    Ideal mI = m_times(I);
    const MonomialIdeal& leadI = I.lead_monomials();
    const MonomialIdeal& leadmI = mI.lead_monomials();
    int top = 1 + std::max(leadI.max_gen_degree(), leadmI.max_gen_degree());
    for (int d = 0; d <= top; ++d) {
        long long dim_ring = ring_dimension(R.n, d);
        long long dim_i = dim_ring - std_monomial_count(leadI, d);
        long long dim_mi = dim_ring - std_monomial_count(leadmI, d);
        long long m = dim_i - dim_mi;
        assert(m >= 0);
        if (m > 0) {
            out.by_degree[d] = m;
            out.total += m;
        }
    }
    return out;
}

long long mu(const Ideal& I) { return mu_profile(I).total; }

IntPoly ideal_numerator(const Ideal& I) {
    return hilbert_numerator(I.lead_monomials());
}

HilbertFunction hilbert(const Ideal& I, int up_to) {
    HilbertFunction out;
    const MonomialIdeal& lead = I.lead_monomials();
    out.values.reserve(up_to + 1);
    for (int d = 0; d <= up_to; ++d)
        out.values.push_back(std_monomial_count(lead, d));
    IntPoly numer = hilbert_numerator(lead);
    int deg = static_cast<int>(numer.size()) - 1;
    out.stable_from = std::max(0, deg - static_cast<int>(I.ring().n) + 1);
    return out;
}

std::optional<long long> colon_length(const Ideal& I, const LinearForm& z) {
    const PolyRing& R = I.ring();
    bool nonzero = false;
    for (const auto& c : z.coeffs) nonzero = nonzero || c.v != 0;
    if (!nonzero) throw ZeroDivisorPolynomial();
    if (I.is_zero() || I.is_unit()) return 0;
    // Work in coordinates where z becomes the last variable; Hilbert data
    // is invariant under the change.
    LinearChange B = change_sending_to_last_variable(R, z);
    Ideal J = apply_change(I, B);
    std::vector<Polynomial> cb = colon_last_variable_basis(R, J.groebner());
    std::vector<Monomial> leads;
    leads.reserve(cb.size());
    for (const auto& g : cb) leads.push_back(g.lead().mono);
    MonomialIdeal lead_colon(R.n, std::move(leads));
    // Hilbert series of (I:z)/I is [h_I - h_{I:z}] / (1-t)^n.
    IntPoly diff = poly_sub(hilbert_numerator(lead_ideal(R, J.groebner())),
                            hilbert_numerator(lead_colon));
    return finite_length_from_numerator(std::move(diff), R.n);
}

Ideal component_ideal(const Ideal& I, int j) {
    const PolyRing& R = I.ring();
    if (j < 0 || I.is_zero()) return Ideal(R, {});
    std::vector<Monomial> basis = monomials_of_degree(R.n, j);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k)
        index[basis[k].exponents()] = k;
    FpMatrix rows;
    for (const auto& g : I.groebner().elements) {
        int dg = g.degree();
        if (dg > j) continue;
        for (const auto& m : monomials_of_degree(R.n, j - dg)) {
            std::vector<Fp> row(basis.size(), R.field.zero());
            for (const auto& t : g.terms())
                row[index.at(t.mono.times(m).exponents())] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    row_reduce(R.field, rows);
    std::vector<Polynomial> gens;
    gens.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (row[k].v != 0) terms.push_back(Term{basis[k], row[k]});
        gens.push_back(Polynomial::from_terms(R, std::move(terms)));
    }
    return Ideal(R, std::move(gens));
}

std::optional<long long> type_of(const Ideal& I) {
    const PolyRing& R = I.ring();
    if (I.is_zero() || I.is_unit()) return 0;
    Ideal socle = colon_m(I);
    // Hilbert series of (I:m)/I is [h_I - h_{I:m}] / (1-t)^n.
    IntPoly numer = poly_sub(ideal_numerator(I), ideal_numerator(socle));
    return finite_length_from_numerator(std::move(numer), R.n);
}

DimHeight dim_and_height(const Ideal& I) {
    if (I.is_unit()) throw UnitIdeal();
    const PolyRing& R = I.ring();
    IntPoly numer = ideal_numerator(I);
    int k = order_at_one(std::move(numer));
    assert(static_cast<std::size_t>(k) <= R.n);
    return DimHeight{R.n - static_cast<std::size_t>(k),
                     static_cast<std::size_t>(k)};
}

Ideal monomial_to_ideal(const PolyRing& R, const MonomialIdeal& M) {
    std::vector<Polynomial> gens;
    gens.reserve(M.min_gens().size());
    for (const auto& m : M.min_gens())
        gens.push_back(Polynomial::monomial(R, m, R.field.one()));
    return Ideal(R, std::move(gens));
}

}  // namespace cmf
