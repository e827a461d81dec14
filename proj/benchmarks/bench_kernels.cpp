// Microbenchmarks for the computational kernels: Buchberger, normal form,
// the Hilbert pivot recursion, colon lengths, gin, Koszul strands, and a
// whole analyze run.  Instances are seeded so numbers are comparable run
// to run.

#include <benchmark/benchmark.h>

#include "cmf/analysis.hpp"
#include "cmf/instances.hpp"

using namespace cmf;

namespace {

Ideal dense_instance(std::size_t n, int gens, int deg, std::uint64_t seed) {
    PolyRing R(n, 32003);
    Rng rng(seed);
    return random_graded_ideal(R, rng, gens, deg, deg);
}

void BM_Buchberger(benchmark::State& state) {
    std::size_t n = state.range(0);
    int deg = static_cast<int>(state.range(1));
    Ideal I = dense_instance(n, static_cast<int>(n) + 1, deg, 42);
    for (auto _ : state) {
        GroebnerBasis G = buchberger(I.ring(), I.gens());
        benchmark::DoNotOptimize(G.elements.size());
    }
}
BENCHMARK(BM_Buchberger)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Args({4, 4});

void BM_NormalForm(benchmark::State& state) {
    Ideal I = dense_instance(4, 5, 3, 7);
    const GroebnerBasis& G = I.groebner();
    Rng rng(11);
    std::vector<Polynomial> probes;
    for (int i = 0; i < 16; ++i) {
        std::vector<Term> terms;
        for (const auto& m : monomials_of_degree(4, 5))
            terms.push_back(Term{m, rng.field_element(I.ring().field, false)});
        probes.push_back(Polynomial::from_terms(I.ring(), std::move(terms)));
    }
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            normal_form(I.ring(), probes[k++ % probes.size()], G));
    }
}
BENCHMARK(BM_NormalForm);

void BM_HilbertNumerator(benchmark::State& state) {
    Rng rng(13);
    MonomialIdeal M = random_monomial_ideal(5, rng, 12, 2, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_numerator(M));
    }
}
BENCHMARK(BM_HilbertNumerator);

void BM_ColonLength(benchmark::State& state) {
    Ideal I = dense_instance(3, 3, 3, 17);
    Rng rng(19);
    LinearForm z = random_linear_form(I.ring(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(colon_length(I, z));
    }
}
BENCHMARK(BM_ColonLength);

void BM_Gin(benchmark::State& state) {
    Ideal I = dense_instance(3, 3, 3, 23);
    for (auto _ : state) {
        Rng rng(29);
        benchmark::DoNotOptimize(gin(I, rng).gin.min_gens().size());
    }
}
BENCHMARK(BM_Gin);

void BM_BettiTable(benchmark::State& state) {
    Ideal I = dense_instance(3, 4, 3, 31);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betti_table(I).entries.size());
    }
}
BENCHMARK(BM_BettiTable);

void BM_Analyze(benchmark::State& state) {
    Ideal I = dense_instance(3, 3, 3, 37);
    for (auto _ : state) {
        Rng rng(41);
        Report r = analyze(I, rng);
        benchmark::DoNotOptimize(r.consistent);
    }
}
BENCHMARK(BM_Analyze);

}  // namespace

BENCHMARK_MAIN();
