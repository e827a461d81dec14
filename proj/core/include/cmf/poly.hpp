#pragma once

#include <string>
#include <vector>

#include "cmf/field.hpp"
#include "cmf/linalg.hpp"
#include "cmf/monomial.hpp"

namespace cmf {

// The ambient ring K[x_1,...,x_n] over F_p with a fixed term order.
struct PolyRing {
    std::size_t n;
    PrimeField field;
    std::vector<std::string> names;
    MonomialOrder order;

    PolyRing(std::size_t nvars, std::uint32_t p,
             std::vector<std::string> var_names = {}, MonomialOrder ord = {});

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.n == b.n && a.field == b.field && a.order.elim == b.order.elim;
    }
};

std::vector<std::string> default_names(std::size_t nvars);

struct Term {
    Monomial mono;
    Fp coeff;
};

// Sparse polynomial: terms sorted strictly descending in the ring order,
// no zero coefficients, no duplicate monomials.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial from_terms(const PolyRing& R, std::vector<Term> terms);
    // Trusts that `terms` is strictly descending in the ring order with no
    // zero coefficients; used by the arithmetic kernels.
    static Polynomial from_sorted_terms(std::vector<Term> terms);
    static Polynomial monomial(const PolyRing& R, Monomial m, Fp c);
    static Polynomial constant(const PolyRing& R, Fp c);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }

    // Maximal total degree over the terms (for elimination orders the lead
    // term need not attain it).  -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

  private:
    std::vector<Term> terms_;
};

Polynomial add(const PolyRing& R, const Polynomial& a, const Polynomial& b);
Polynomial sub(const PolyRing& R, const Polynomial& a, const Polynomial& b);
Polynomial negate(const PolyRing& R, const Polynomial& a);
Polynomial mul(const PolyRing& R, const Polynomial& a, const Polynomial& b);
Polynomial mul_term(const PolyRing& R, const Polynomial& a, const Term& t);
Polynomial scale(const PolyRing& R, const Polynomial& a, Fp c);
Polynomial make_monic(const PolyRing& R, const Polynomial& a);
// a - c * m * b, the inner step of polynomial division.
Polynomial sub_mul(const PolyRing& R, const Polynomial& a, Fp c,
                   const Monomial& m, const Polynomial& b);
bool poly_equal(const Polynomial& a, const Polynomial& b);

std::string to_string(const PolyRing& R, const Polynomial& f);
std::string to_string(const PolyRing& R, const Monomial& m);

// Nonzero linear form sum c_i x_i.
struct LinearForm {
    std::vector<Fp> coeffs;
};

Polynomial to_polynomial(const PolyRing& R, const LinearForm& z);
LinearForm random_linear_form(const PolyRing& R, Rng& rng);

// Invertible change of coordinates x_i |-> sum_j m[i][j] x_j.
struct LinearChange {
    FpMatrix m;
};

LinearChange identity_change(const PolyRing& R);
LinearChange random_linear_change(const PolyRing& R, Rng& rng);
LinearChange random_linear_change_counted(const PolyRing& R, Rng& rng,
                                          int* attempts);
// Composite change performing A first, then B: apply(apply(f,A),B) ==
// apply(f, compose(A,B)).
LinearChange compose(const PolyRing& R, const LinearChange& a,
                     const LinearChange& b);
LinearChange inverse(const PolyRing& R, const LinearChange& a);

// Substitutes x_i by its image and expands; throws SingularMatrix if the
// matrix is not invertible.
Polynomial apply_linear_change(const PolyRing& R, const Polynomial& f,
                               const LinearChange& M);

// Change of coordinates sending the linear form z to the last variable.
LinearChange change_sending_to_last_variable(const PolyRing& R,
                                             const LinearForm& z);

// Image of f in K[x_1,...,x_{n-1}] = R/(z) via x_n := -(1/c_n) sum c_i x_i.
// Requires c_n != 0 (BadPivot otherwise).  Rout must be the ring in one
// fewer variable.
Polynomial substitute_last_variable(const PolyRing& R, const PolyRing& Rout,
                                    const Polynomial& f, const LinearForm& z);

PolyRing reduced_ring(const PolyRing& R);

}  // namespace cmf
