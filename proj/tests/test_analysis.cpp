#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmf/analysis.hpp"
#include "cmf/ideal_doc.hpp"
#include "cmf/instances.hpp"

using namespace cmf;

namespace {

Ideal make(const std::string& doc) {
    return document_to_ideal(parse_document(doc));
}

}  // namespace

TEST_CASE("is_m_full examples") {
    Rng rng(1);
    SUBCASE("powers of m are m-full") {
        for (int d = 1; d <= 3; ++d) {
            PolyRing R(2, 32003);
            Ideal I = monomial_to_ideal(R, MonomialIdeal(2, monomials_of_degree(2, d)));
            CHECK(is_m_full(I, rng));
        }
    }
    SUBCASE("(x^2, y^2) is not m-full") {
        // m(x^2,y^2) = m^3, and m^3 : z = m^2 != (x^2, y^2) for every
        // nonzero linear z; equivalently mu = 2 < 3 = mu(image) + l((I:z)/I).
        Ideal I = make("ring F32003 [x, y]\nideal\nx^2\ny^2\n");
        CHECK(!is_m_full(I, rng));
    }
    SUBCASE("(x, y^3) is m-full") {
        CHECK(is_m_full(make("ring F32003 [x, y]\nideal\nx\ny^3\n"), rng));
    }
    SUBCASE("degenerate inputs are rejected") {
        PolyRing R(2, 32003);
        CHECK_THROWS_AS(is_m_full(Ideal(R, {}), rng), DegenerateIdeal);
        Ideal unit(R, {Polynomial::constant(R, R.field.one())});
        CHECK_THROWS_AS(is_m_full(unit, rng), DegenerateIdeal);
    }
}

TEST_CASE("t_value examples") {
    Rng rng(2);
    SUBCASE("a prime with a nonzerodivisor gives 0") {
        CHECK(t_value(make("ring F32003 [x, y]\nideal\nx\n"), rng) == 0);
    }
    SUBCASE("m^2 gives 2") {
        CHECK(t_value(make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n"), rng) == 2);
    }
    SUBCASE("(x^2, y^2) gives 2") {
        CHECK(t_value(make("ring F32003 [x, y]\nideal\nx^2\ny^2\n"), rng) == 2);
    }
}

TEST_CASE("t_sequence examples") {
    Rng rng(3);
    SUBCASE("m^2") {
        TSequence t = t_sequence(make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n"), rng);
        CHECK(t.values == std::vector<long long>{1, 2});
        CHECK(t.B == 3);
    }
    SUBCASE("(x^2, y^2)") {
        TSequence t = t_sequence(make("ring F32003 [x, y]\nideal\nx^2\ny^2\n"), rng);
        CHECK(t.values == std::vector<long long>{1, 2});
        CHECK(t.B == 3);
    }
    SUBCASE("(x) in two variables") {
        TSequence t = t_sequence(make("ring F32003 [x, y]\nideal\nx\n"), rng);
        CHECK(t.values == std::vector<long long>{1, 0});
        CHECK(t.B == 1);
    }
    SUBCASE("well-definedness across seeds") {
        Ideal I = make("ring F32003 [x, y, z]\nideal\nx^2 - y*z\nx*y\n");
        Rng a(10), b(11), c(12);
        TSequence ta = t_sequence(I, a);
        TSequence tb = t_sequence(I, b);
        TSequence tc = t_sequence(I, c);
        CHECK(ta.values == tb.values);
        CHECK(tb.values == tc.values);
    }
}

TEST_CASE("completely m-full deciders") {
    Rng rng(4);
    SUBCASE("m^d is completely m-full") {
        for (int d = 1; d <= 3; ++d) {
            PolyRing R(3, 32003);
            Ideal I = monomial_to_ideal(R, MonomialIdeal(3, monomials_of_degree(3, d)));
            CHECK(is_completely_m_full_recursive(I, rng));
            CHECK(is_completely_m_full_via_B(I, rng));
        }
    }
    SUBCASE("(x^2, y^2) fails both routes") {
        Ideal I = make("ring F32003 [x, y]\nideal\nx^2\ny^2\n");
        CHECK(!is_completely_m_full_recursive(I, rng));
        CHECK(!is_completely_m_full_via_B(I, rng));
    }
    SUBCASE("one variable: every proper ideal qualifies") {
        for (int d = 1; d <= 4; ++d) {
            PolyRing R(1, 32003, {"x"});
            Ideal I(R, {Polynomial::monomial(R, Monomial(std::vector<int>{d}), R.field.one())});
            CHECK(is_completely_m_full_recursive(I, rng));
            CHECK(is_completely_m_full_via_B(I, rng));
        }
    }
    SUBCASE("certificate chain is recorded") {
        Ideal I = make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n");
        std::vector<LinearForm> chain;
        CHECK(is_completely_m_full_recursive(I, rng, kDefaultSamples, &chain));
        CHECK(chain.size() == 1);  // one reduction step from n=2 to n=1
    }
}

TEST_CASE("coordinate recursion matches stability on monomial ideals") {
    Rng rng(5);
    SUBCASE("stable examples succeed") {
        PolyRing R(3, 32003);
        MonomialIdeal M = stable_closure(
            3, {Monomial({0, 1, 1}), Monomial({1, 0, 1})});
        REQUIRE(is_stable(M));
        CHECK(is_completely_m_full_coordinate(monomial_to_ideal(R, M)));
    }
    SUBCASE("(x^2, y^2) fails the coordinate recursion") {
        CHECK(!is_completely_m_full_coordinate(
            make("ring F32003 [x, y]\nideal\nx^2\ny^2\n")));
    }
    SUBCASE("random closure instances") {
        for (int trial = 0; trial < 12; ++trial) {
            std::size_t n = 2 + rng.below(3);
            Rng g = rng.fork(trial);
            MonomialIdeal M =
                random_stable_ideal(n, g, 1 + g.below(3), 1 + g.below(4));
            if (M.is_unit()) continue;
            PolyRing R(n, 32003);
            CHECK(is_completely_m_full_coordinate(monomial_to_ideal(R, M)));
        }
    }
}

TEST_CASE("is_componentwise_linear examples") {
    Rng rng(6);
    CHECK(is_componentwise_linear(
        make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n"), rng));
    CHECK(!is_componentwise_linear(make("ring F32003 [x, y]\nideal\nx^2\ny^2\n"), rng));
    for (int d = 2; d <= 5; ++d) {
        std::string doc = "ring F32003 [x, y]\nideal\nx\ny^" + std::to_string(d) + "\n";
        CHECK(is_componentwise_linear(make(doc), rng));
    }
}

TEST_CASE("nagel_romer examples") {
    Rng rng(7);
    CHECK(nagel_romer(make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n"), rng));
    CHECK(!nagel_romer(make("ring F32003 [x, y]\nideal\nx^2\ny^2\n"), rng));
    CHECK(nagel_romer(make("ring F32003 [x, y]\nideal\nx\n"), rng));
}

TEST_CASE("low_type_check examples") {
    Rng rng(8);
    SUBCASE("(x, y^3): h = 2, r = 1, one linear form needed") {
        CHECK(low_type_check(make("ring F32003 [x, y]\nideal\nx\ny^3\n"), rng));
    }
    SUBCASE("(x, y, z^2): h = 3, r = 1, two linear forms needed") {
        CHECK(low_type_check(make("ring F32003 [x, y, z]\nideal\nx\ny\nz^2\n"), rng));
    }
    SUBCASE("non-CM instances pass vacuously") {
        CHECK(low_type_check(make("ring F32003 [x, y]\nideal\nx^2\nx*y\n"), rng));
    }
}

TEST_CASE("analyze on the worked instances") {
    Rng rng(9);
    SUBCASE("m^2: everything true and consistent") {
        Report r = analyze(make("ring F32003 [x, y]\nideal\nx^2\nx*y\ny^2\n"), rng);
        CHECK(r.mu == 3);
        CHECK(r.t_sequence == std::vector<long long>{1, 2});
        CHECK(r.B == 3);
        CHECK(r.m_full);
        CHECK(r.completely_m_full_recursive);
        CHECK(r.completely_m_full_B);
        CHECK(r.componentwise_linear);
        CHECK(r.nagel_romer);
        CHECK(r.consistent);
        CHECK(r.errors.empty());
    }
    SUBCASE("(x^2, y^2): not m-full, nothing linear, still consistent") {
        Report r = analyze(make("ring F32003 [x, y]\nideal\nx^2\ny^2\n"), rng);
        CHECK(r.mu == 2);
        CHECK(r.B == 3);
        CHECK(!r.m_full);
        CHECK(!r.completely_m_full_recursive);
        CHECK(!r.completely_m_full_B);
        CHECK(!r.componentwise_linear);
        CHECK(!r.nagel_romer);
        CHECK(r.consistent);
        CHECK(r.type.has_value());
        CHECK(*r.type == 1);
    }
    SUBCASE("(x, y^3): everything true") {
        Report r = analyze(make("ring F32003 [x, y]\nideal\nx\ny^3\n"), rng);
        CHECK(r.m_full);
        CHECK(r.completely_m_full_recursive);
        CHECK(r.completely_m_full_B);
        CHECK(r.componentwise_linear);
        CHECK(r.nagel_romer);
        CHECK(r.consistent);
        CHECK(r.low_type);
    }
}

TEST_CASE("main theorem equivalence on random instances") {
    Rng rng(10);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng.below(2);
        PolyRing R(n, 32003);
        Rng g = rng.fork(trial);
        Ideal I(R, {});
        if (trial % 2 == 0) {
            I = random_graded_ideal(R, g, 1 + g.below(3), 1, 3);
        } else {
            MonomialIdeal M = random_monomial_ideal(n, g, 1 + g.below(4), 1, 3);
            if (M.is_zero()) continue;
            I = monomial_to_ideal(R, M);
        }
        Rng a = rng.fork(1000 + trial);
        Report r = analyze(I, a);
        CHECK(r.errors.empty());
        CHECK(r.consistent);
        CHECK(r.mu <= r.B);  // Lemma: mu is at most the t-sequence sum
    }
}

TEST_CASE("t-sequence transfers to the gin ideal") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        PolyRing R(2 + rng.below(2), 32003);
        Rng g = rng.fork(trial);
        Ideal I = random_graded_ideal(R, g, 1 + g.below(2), 1, 3);
        Rng gr = rng.fork(100 + trial);
        GinResult gi = gin(I, gr);
        Rng t1 = rng.fork(200 + trial);
        Rng t2 = rng.fork(300 + trial);
        TSequence a = t_sequence(I, t1);
        TSequence b = t_sequence(monomial_to_ideal(R, gi.gin), t2);
        CHECK(a.values == b.values);
    }
}

TEST_CASE("fresh variable preserves the four flags") {
    Rng rng(12);
    for (int trial = 0; trial < 6; ++trial) {
        PolyRing R(2, 32003);
        Rng g = rng.fork(trial);
        Ideal I = random_graded_ideal(R, g, 1 + g.below(3), 1, 3);
        Ideal E = extend_one_variable(I);
        Rng a1 = rng.fork(100 + trial);
        Rng a2 = rng.fork(200 + trial);
        AnalysisOptions lite;
        lite.with_betti = false;
        Report ri = analyze(I, a1, lite);
        Report re = analyze(E, a2, lite);
        CHECK(ri.completely_m_full_recursive == re.completely_m_full_recursive);
        CHECK(ri.completely_m_full_B == re.completely_m_full_B);
        CHECK(ri.componentwise_linear == re.componentwise_linear);
        CHECK(ri.nagel_romer == re.nagel_romer);
    }
}

TEST_CASE("type transfer when both I and gin are m-full") {
    Rng rng(13);
    int qualifying = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 2 + rng.below(2);
        PolyRing R(n, 32003);
        Rng g = rng.fork(trial);
        MonomialIdeal M = random_stable_ideal(n, g, 1 + g.below(3), 1 + g.below(4));
        if (M.is_unit()) continue;
        Ideal I = apply_change(monomial_to_ideal(R, M),
                               random_linear_change(R, g));
        Rng m1 = rng.fork(100 + trial);
        if (!is_m_full(I, m1)) continue;
        Rng gr = rng.fork(200 + trial);
        GinResult gi = gin(I, gr);
        Ideal J = monomial_to_ideal(R, gi.gin);
        Rng m2 = rng.fork(300 + trial);
        if (!is_m_full(J, m2)) continue;
        ++qualifying;
        CHECK(type_of(I) == type_of(J));
    }
    CHECK(qualifying >= 4);
}
