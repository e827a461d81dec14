#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cmf/poly.hpp"
#include "oracles.hpp"

using namespace cmf;

namespace {

Polynomial parse_terms(const PolyRing& R, std::vector<std::pair<std::vector<int>, long long>> tt) {
    std::vector<Term> terms;
    for (auto& [e, c] : tt) terms.push_back(Term{Monomial(e), R.field.from_int(c)});
    return Polynomial::from_terms(R, std::move(terms));
}

Polynomial random_poly(const PolyRing& R, Rng& rng, int degree) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(R.n, degree)) {
        Fp c = rng.field_element(R.field, false);
        if (c.v != 0) terms.push_back(Term{m, c});
    }
    return Polynomial::from_terms(R, std::move(terms));
}

// Independent formulation of grevlex: higher degree wins, ties compare the
// reversed exponent vectors lexicographically with the smaller one winning.
std::strong_ordering grevlex_oracle(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    std::vector<int> ra(a.exponents().rbegin(), a.exponents().rend());
    std::vector<int> rb(b.exponents().rbegin(), b.exponents().rend());
    if (ra == rb) return std::strong_ordering::equal;
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end())
               ? std::strong_ordering::greater
               : std::strong_ordering::less;
}

}  // namespace

TEST_CASE("grevlex examples") {
    // n=2: x^2 vs x y.
    CHECK(grevlex_cmp(Monomial({2, 0}), Monomial({1, 1})) ==
          std::strong_ordering::greater);
    CHECK(grevlex_cmp(Monomial({1, 1}), Monomial({1, 1})) ==
          std::strong_ordering::equal);
    // n=3: x z vs y^2 -> less.
    CHECK(grevlex_cmp(Monomial({1, 0, 1}), Monomial({0, 2, 0})) ==
          std::strong_ordering::less);
}

TEST_CASE("grevlex agrees with the reversed-lex oracle") {
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<Monomial> all;
        for (int d = 0; d <= 5; ++d)
            for (auto& m : monomials_of_degree(n, d)) all.push_back(m);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(grevlex_cmp(a, b) == grevlex_oracle(a, b));
    }
}

TEST_CASE("grevlex is a multiplicative total order refining degree") {
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t n = 2 + rng.below(3);
        auto rand_mono = [&] {
            std::vector<int> e(n);
            for (auto& x : e) x = static_cast<int>(rng.below(4));
            return Monomial(e);
        };
        Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
        if (a.degree() > b.degree())
            CHECK(grevlex_cmp(a, b) == std::strong_ordering::greater);
        auto ab = grevlex_cmp(a, b);
        if (ab == std::strong_ordering::greater)
            CHECK(grevlex_cmp(a.times(c), b.times(c)) ==
                  std::strong_ordering::greater);
        // Antisymmetry.
        auto ba = grevlex_cmp(b, a);
        if (ab == std::strong_ordering::greater)
            CHECK(ba == std::strong_ordering::less);
        if (ab == std::strong_ordering::equal) CHECK(a == b);
    }
}

TEST_CASE("elimination block order ranks the block first") {
    MonomialOrder elim{1};
    // t > x^5 when t is the eliminated first variable.
    CHECK(order_cmp(elim, Monomial({1, 0}), Monomial({0, 5})) ==
          std::strong_ordering::greater);
    CHECK(order_cmp(elim, Monomial({0, 3}), Monomial({0, 2})) ==
          std::strong_ordering::greater);
}

TEST_CASE("apply_linear_change examples") {
    PolyRing R(2, 32003);
    Polynomial x2 = parse_terms(R, {{{2, 0}, 1}});

    CHECK(poly_equal(apply_linear_change(R, x2, identity_change(R)), x2));

    // Swap x and y.
    LinearChange swap{{{R.field.zero(), R.field.one()},
                       {R.field.one(), R.field.zero()}}};
    Polynomial x = parse_terms(R, {{{1, 0}, 1}});
    CHECK(poly_equal(apply_linear_change(R, x, swap), parse_terms(R, {{{0, 1}, 1}})));

    // x -> x + y expands x^2 to x^2 + 2xy + y^2.
    LinearChange shear{{{R.field.one(), R.field.one()},
                        {R.field.zero(), R.field.one()}}};
    CHECK(poly_equal(apply_linear_change(R, x2, shear),
                     parse_terms(R, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}})));

    LinearChange singular{{{R.field.one(), R.field.one()},
                           {R.field.one(), R.field.one()}}};
    CHECK_THROWS_AS(apply_linear_change(R, x2, singular), SingularMatrix);
}

TEST_CASE("apply_linear_change is a ring homomorphism") {
    PolyRing R(3, 32003);
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_poly(R, rng, 1 + rng.below(3));
        Polynomial g = random_poly(R, rng, 1 + rng.below(3));
        LinearChange M = random_linear_change(R, rng);
        CHECK(poly_equal(apply_linear_change(R, add(R, f, g), M),
                         add(R, apply_linear_change(R, f, M),
                             apply_linear_change(R, g, M))));
        CHECK(poly_equal(apply_linear_change(R, mul(R, f, g), M),
                         mul(R, apply_linear_change(R, f, M),
                             apply_linear_change(R, g, M))));
        CHECK(apply_linear_change(R, f, M).degree() == f.degree());
    }
}

TEST_CASE("changes compose and invert") {
    PolyRing R(3, 32003);
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(R, rng, 2);
        LinearChange A = random_linear_change(R, rng);
        LinearChange B = random_linear_change(R, rng);
        CHECK(poly_equal(
            apply_linear_change(R, apply_linear_change(R, f, A), B),
            apply_linear_change(R, f, compose(R, A, B))));
        CHECK(poly_equal(
            apply_linear_change(R, apply_linear_change(R, f, A), inverse(R, A)),
            f));
    }
}

TEST_CASE("random linear data contracts") {
    PolyRing R(4, 32003);
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        LinearForm z = random_linear_form(R, rng);
        bool nonzero = false;
        for (auto c : z.coeffs) nonzero = nonzero || c.v != 0;
        CHECK(nonzero);
    }
    int attempts = 0;
    for (int i = 0; i < 10000; ++i) {
        LinearChange M = random_linear_change_counted(R, rng, &attempts);
        if (i < 50) CHECK(determinant(R.field, M.m).v != 0);
    }
    // Singular fraction is about sum_k p^-k, about 3.1e-5 at p = 32003, so
    // the expected number of retries over 1e4 samples is about 0.31.
    CHECK(attempts - 10000 <= 5);
}

TEST_CASE("substitute_last_variable examples") {
    PolyRing R(2, 32003);
    PolyRing Rout = reduced_ring(R);

    // z = y: quotient by the coordinate.
    LinearForm zy{{R.field.zero(), R.field.one()}};
    Polynomial f = parse_terms(R, {{{1, 0}, 1}, {{0, 1}, 1}});  // x + y
    Polynomial img = substitute_last_variable(R, Rout, f, zy);
    CHECK(img.terms().size() == 1);
    CHECK(img.lead().mono == Monomial({1}));

    // The form itself maps to zero.
    LinearForm zxy{{R.field.one(), R.field.one()}};
    CHECK(substitute_last_variable(R, Rout, to_polynomial(R, zxy), zxy).is_zero());

    // x^2 - y^2 dies modulo x + y.
    Polynomial x2y2 = parse_terms(R, {{{2, 0}, 1}, {{0, 2}, -1}});
    CHECK(substitute_last_variable(R, Rout, x2y2, zxy).is_zero());

    LinearForm bad{{R.field.one(), R.field.zero()}};
    CHECK_THROWS_AS(substitute_last_variable(R, Rout, f, bad), BadPivot);
}

TEST_CASE("substitution vanishes exactly on multiples of the form") {
    PolyRing R(3, 32003);
    PolyRing Rout = reduced_ring(R);
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        LinearForm z = random_linear_form(R, rng);
        if (z.coeffs[R.n - 1].v == 0) continue;
        Polynomial g = random_poly(R, rng, 1 + rng.below(3));
        // Multiples of z always die.
        Polynomial zg = mul(R, to_polynomial(R, z), g);
        CHECK(substitute_last_variable(R, Rout, zg, z).is_zero());
        // A random polynomial dies iff z divides it (degree-wise span check).
        Polynomial f = random_poly(R, rng, 2);
        bool dies = substitute_last_variable(R, Rout, f, z).is_zero();
        bool divisible = oracle::member(R, f, {to_polynomial(R, z)});
        CHECK(dies == divisible);
    }
}

TEST_CASE("polynomial printing") {
    PolyRing R(2, 32003);
    Polynomial f = parse_terms(R, {{{2, 0}, 1}, {{1, 1}, 3}});
    CHECK(to_string(R, f) == "x^2 + 3*x*y");
    CHECK(to_string(R, Polynomial()) == "0");
    Polynomial c = parse_terms(R, {{{0, 0}, 5}});
    CHECK(to_string(R, c) == "5");
}
