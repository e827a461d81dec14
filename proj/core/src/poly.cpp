#include "cmf/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cmf {

PolyRing::PolyRing(std::size_t nvars, std::uint32_t p,
                   std::vector<std::string> var_names, MonomialOrder ord)
    : n(nvars), field(p), names(std::move(var_names)), order(ord) {
    if (names.empty()) names = default_names(n);
    assert(names.size() == n);
}

std::vector<std::string> default_names(std::size_t nvars) {
    if (nvars <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        return {xyz, xyz + nvars};
    }
    std::vector<std::string> out;
    out.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        out.push_back("x" + std::to_string(i + 1));
    return out;
}

Polynomial Polynomial::from_terms(const PolyRing& R, std::vector<Term> terms) {
    std::erase_if(terms, [&](const Term& t) { return t.coeff.v == 0; });
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order_greater(R.order, a.mono, b.mono);
    });
    Polynomial out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coeff = R.field.add(out.terms_.back().coeff, t.coeff);
            if (out.terms_.back().coeff.v == 0) out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
    Polynomial out;
    out.terms_ = std::move(terms);
    return out;
}

Polynomial Polynomial::monomial(const PolyRing& R, Monomial m, Fp c) {
    return from_terms(R, {Term{std::move(m), c}});
}

Polynomial Polynomial::constant(const PolyRing& R, Fp c) {
    return monomial(R, Monomial::unit(R.n), c);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

Polynomial add(const PolyRing& R, const Polynomial& a, const Polynomial& b) {
    std::vector<Term> merged;
    merged.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        auto c = order_cmp(R.order, ta[i].mono, tb[j].mono);
        if (c == std::strong_ordering::greater) {
            merged.push_back(ta[i++]);
        } else if (c == std::strong_ordering::less) {
            merged.push_back(tb[j++]);
        } else {
            Fp s = R.field.add(ta[i].coeff, tb[j].coeff);
            if (s.v != 0) merged.push_back(Term{ta[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) merged.push_back(ta[i]);
    for (; j < tb.size(); ++j) merged.push_back(tb[j]);
    return Polynomial::from_sorted_terms(std::move(merged));
}

Polynomial negate(const PolyRing& R, const Polynomial& a) {
    std::vector<Term> t(a.terms());
    for (auto& x : t) x.coeff = R.field.neg(x.coeff);
    return Polynomial::from_sorted_terms(std::move(t));
}

Polynomial sub(const PolyRing& R, const Polynomial& a, const Polynomial& b) {
    return add(R, a, negate(R, b));
}

Polynomial mul_term(const PolyRing& R, const Polynomial& a, const Term& t) {
    if (t.coeff.v == 0) return Polynomial();
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& x : a.terms())
        out.push_back(Term{x.mono.times(t.mono), R.field.mul(x.coeff, t.coeff)});
    // Multiplying by a fixed monomial preserves the term order.
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial mul(const PolyRing& R, const Polynomial& a, const Polynomial& b) {
    std::vector<Term> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            out.push_back(Term{x.mono.times(y.mono), R.field.mul(x.coeff, y.coeff)});
    return Polynomial::from_terms(R, std::move(out));
}

Polynomial scale(const PolyRing& R, const Polynomial& a, Fp c) {
    if (c.v == 0) return Polynomial();
    std::vector<Term> t(a.terms());
    for (auto& x : t) x.coeff = R.field.mul(x.coeff, c);
    return Polynomial::from_sorted_terms(std::move(t));
}

Polynomial make_monic(const PolyRing& R, const Polynomial& a) {
    if (a.is_zero() || a.lead().coeff == R.field.one()) return a;
    return scale(R, a, R.field.inv(a.lead().coeff));
}

Polynomial sub_mul(const PolyRing& R, const Polynomial& a, Fp c,
                   const Monomial& m, const Polynomial& b) {
    std::vector<Term> merged;
    merged.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        Monomial bm = tb[j].mono.times(m);
        auto cmp = order_cmp(R.order, ta[i].mono, bm);
        if (cmp == std::strong_ordering::greater) {
            merged.push_back(ta[i++]);
        } else if (cmp == std::strong_ordering::less) {
            merged.push_back(Term{std::move(bm),
                                  R.field.neg(R.field.mul(c, tb[j].coeff))});
            ++j;
        } else {
            Fp s = R.field.sub(ta[i].coeff, R.field.mul(c, tb[j].coeff));
            if (s.v != 0) merged.push_back(Term{ta[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) merged.push_back(ta[i]);
    for (; j < tb.size(); ++j)
        merged.push_back(Term{tb[j].mono.times(m),
                              R.field.neg(R.field.mul(c, tb[j].coeff))});
    return Polynomial::from_sorted_terms(std::move(merged));
}

bool poly_equal(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (!(ta[i].mono == tb[i].mono) || ta[i].coeff != tb[i].coeff) return false;
    return true;
}

std::string to_string(const PolyRing& R, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < R.n; ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!first) os << "*";
        os << R.names[i];
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const PolyRing& R, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) os << " + ";
        if (t.mono.is_unit()) {
            os << t.coeff.v;
        } else if (t.coeff.v == 1) {
            os << to_string(R, t.mono);
        } else {
            os << t.coeff.v << "*" << to_string(R, t.mono);
        }
        first = false;
    }
    return os.str();
}

Polynomial to_polynomial(const PolyRing& R, const LinearForm& z) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < R.n; ++i)
        if (z.coeffs[i].v != 0)
            terms.push_back(Term{Monomial::variable(R.n, i), z.coeffs[i]});
    return Polynomial::from_terms(R, std::move(terms));
}

LinearForm random_linear_form(const PolyRing& R, Rng& rng) {
    LinearForm z;
    z.coeffs.resize(R.n);
    bool nonzero = false;
    do {
        nonzero = false;
        for (auto& c : z.coeffs) {
            c = rng.field_element(R.field, false);
            nonzero = nonzero || c.v != 0;
        }
    } while (!nonzero);
    return z;
}

LinearChange identity_change(const PolyRing& R) {
    FpMatrix m(R.n, std::vector<Fp>(R.n, R.field.zero()));
    for (std::size_t i = 0; i < R.n; ++i) m[i][i] = R.field.one();
    return LinearChange{std::move(m)};
}

LinearChange random_linear_change_counted(const PolyRing& R, Rng& rng,
                                          int* attempts) {
    for (;;) {
        FpMatrix m(R.n, std::vector<Fp>(R.n));
        for (auto& row : m)
            for (auto& c : row) c = rng.field_element(R.field, false);
        if (attempts) ++*attempts;
        if (determinant(R.field, m).v != 0) return LinearChange{std::move(m)};
    }
}

LinearChange random_linear_change(const PolyRing& R, Rng& rng) {
    return random_linear_change_counted(R, rng, nullptr);
}

LinearChange compose(const PolyRing& R, const LinearChange& a,
                     const LinearChange& b) {
    // x_i |-> sum_j a[i][j] x_j |-> sum_k (a*b)[i][k] x_k.
    FpMatrix m(R.n, std::vector<Fp>(R.n, R.field.zero()));
    for (std::size_t i = 0; i < R.n; ++i)
        for (std::size_t j = 0; j < R.n; ++j) {
            if (a.m[i][j].v == 0) continue;
            for (std::size_t k = 0; k < R.n; ++k)
                m[i][k] = R.field.add(m[i][k], R.field.mul(a.m[i][j], b.m[j][k]));
        }
    return LinearChange{std::move(m)};
}

LinearChange inverse(const PolyRing& R, const LinearChange& a) {
    return LinearChange{matrix_inverse(R.field, a.m)};
}

Polynomial apply_linear_change(const PolyRing& R, const Polynomial& f,
                               const LinearChange& M) {
    if (determinant(R.field, M.m).v == 0) throw SingularMatrix();
    // Images of the variables, as degree-one polynomials.
    std::vector<Polynomial> image(R.n);
    std::vector<bool> image_is_var(R.n, false);
    std::vector<std::size_t> image_var(R.n, 0);
    for (std::size_t i = 0; i < R.n; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < R.n; ++j)
            if (M.m[i][j].v != 0)
                terms.push_back(Term{Monomial::variable(R.n, j), M.m[i][j]});
        image[i] = Polynomial::from_terms(R, std::move(terms));
        if (image[i].terms().size() == 1 && image[i].lead().coeff == R.field.one()) {
            image_is_var[i] = true;
            image_var[i] = image[i].lead().mono.max_var();
        }
    }
    bool permutation = true;
    for (std::size_t i = 0; i < R.n && permutation; ++i)
        permutation = image_is_var[i];
    if (permutation) {
        // Pure variable permutation: relabel exponents, no expansion.
        std::vector<Term> out;
        out.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            std::vector<int> e(R.n, 0);
            for (std::size_t i = 0; i < R.n; ++i)
                e[image_var[i]] += t.mono.exponent(i);
            out.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(R, std::move(out));
    }
    // Cache powers of each variable image up to the needed exponent.
    std::vector<std::vector<Polynomial>> powers(R.n);
    for (std::size_t i = 0; i < R.n; ++i)
        powers[i].push_back(Polynomial::constant(R, R.field.one()));
    Polynomial acc;
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(R, t.coeff);
        for (std::size_t i = 0; i < R.n; ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            while (static_cast<int>(powers[i].size()) <= e)
                powers[i].push_back(mul(R, powers[i].back(), image[i]));
            prod = mul(R, prod, powers[i][e]);
        }
        acc = add(R, acc, prod);
    }
    return acc;
}

LinearChange change_sending_to_last_variable(const PolyRing& R,
                                             const LinearForm& z) {
    // Build an invertible T with T * c = e_n by elementary row operations,
    // where c is the coefficient vector of z; then B = T^t satisfies
    // apply(z, B) = x_n (coefficient vectors transform by B^t).
    const auto& F = R.field;
    std::size_t pivot = R.n;
    for (std::size_t i = R.n; i-- > 0;)
        if (z.coeffs[i].v != 0) {
            pivot = i;
            break;
        }
    if (pivot == R.n) throw ZeroDivisorPolynomial();
    FpMatrix T(R.n, std::vector<Fp>(R.n, F.zero()));
    for (std::size_t i = 0; i < R.n; ++i) T[i][i] = F.one();
    std::vector<Fp> c(z.coeffs);
    // Eliminate the other coordinates against the pivot.
    for (std::size_t i = 0; i < R.n; ++i) {
        if (i == pivot || c[i].v == 0) continue;
        Fp factor = F.div(c[i], c[pivot]);
        for (std::size_t j = 0; j < R.n; ++j)
            T[i][j] = F.sub(T[i][j], F.mul(factor, T[pivot][j]));
        c[i] = F.zero();
    }
    // Scale the pivot row to 1.
    Fp inv = F.inv(c[pivot]);
    for (std::size_t j = 0; j < R.n; ++j) T[pivot][j] = F.mul(T[pivot][j], inv);
    c[pivot] = F.one();
    // Swap the pivot into the last position.
    if (pivot != R.n - 1) {
        std::swap(T[pivot], T[R.n - 1]);
        std::swap(c[pivot], c[R.n - 1]);
    }
    FpMatrix B(R.n, std::vector<Fp>(R.n));
    for (std::size_t i = 0; i < R.n; ++i)
        for (std::size_t j = 0; j < R.n; ++j) B[i][j] = T[j][i];
    return LinearChange{std::move(B)};
}

PolyRing reduced_ring(const PolyRing& R) {
    assert(R.n >= 1);
    std::vector<std::string> names(R.names.begin(), R.names.end() - 1);
    return PolyRing(R.n - 1, R.field.modulus(), std::move(names), R.order);
}

Polynomial substitute_last_variable(const PolyRing& R, const PolyRing& Rout,
                                    const Polynomial& f, const LinearForm& z) {
    assert(Rout.n + 1 == R.n);
    if (z.coeffs[R.n - 1].v == 0) throw BadPivot();
    const auto& F = R.field;
    // x_n := -(1/c_n) * (c_1 x_1 + ... + c_{n-1} x_{n-1}) in Rout.
    Fp scale = F.neg(F.inv(z.coeffs[R.n - 1]));
    std::vector<Term> sterms;
    for (std::size_t i = 0; i + 1 < R.n; ++i)
        if (z.coeffs[i].v != 0)
            sterms.push_back(
                Term{Monomial::variable(Rout.n, i), F.mul(scale, z.coeffs[i])});
    Polynomial subst = Polynomial::from_terms(Rout, std::move(sterms));
    std::vector<Polynomial> powers{Polynomial::constant(Rout, F.one())};
    Polynomial acc;
    for (const auto& t : f.terms()) {
        std::vector<int> e(t.mono.exponents().begin(),
                           t.mono.exponents().end() - 1);
        int en = t.mono.exponent(R.n - 1);
        while (static_cast<int>(powers.size()) <= en)
            powers.push_back(mul(Rout, powers.back(), subst));
        Polynomial piece = mul_term(
            Rout, powers[en], Term{Monomial(std::move(e)), t.coeff});
        acc = add(Rout, acc, piece);
    }
    return acc;
}

}  // namespace cmf
