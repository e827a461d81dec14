#include "cmf/monomial_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace cmf {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  return grevlex_cmp(a, b) == std::strong_ordering::greater;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& k : kept)
            if (k.divides(g)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Monomial& a, const Monomial& b) {
                  return grevlex_cmp(a, b) == std::strong_ordering::greater;
              });
    return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens)
    : nvars_(nvars), gens_(minimalize(std::move(gens))) {
    assert(std::all_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.nvars() == nvars_; }));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

long long std_monomial_count(const MonomialIdeal& M, int d) {
    if (d < 0) return 0;
    long long count = 0;
    for (const auto& m : monomials_of_degree(M.nvars(), d))
        if (!M.contains(m)) ++count;
    return count;
}

std::vector<Monomial> std_monomials(const MonomialIdeal& M, int d) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(M.nvars(), d))
        if (!M.contains(m)) out.push_back(std::move(m));
    return out;
}

MonomialIdeal colon_by_variable(const MonomialIdeal& M, std::size_t i) {
    std::vector<Monomial> gens;
    gens.reserve(M.min_gens().size());
    for (const auto& g : M.min_gens()) {
        if (g.exponent(i) > 0)
            gens.push_back(g.divided_by(Monomial::variable(M.nvars(), i)));
        else
            gens.push_back(g);
    }
    return MonomialIdeal(M.nvars(), std::move(gens));
}

MonomialIdeal plus_variable(const MonomialIdeal& M, std::size_t i) {
    std::vector<Monomial> gens;
    for (const auto& g : M.min_gens())
        if (g.exponent(i) == 0) gens.push_back(g);
    gens.push_back(Monomial::variable(M.nvars(), i));
    return MonomialIdeal(M.nvars(), std::move(gens));
}

IntPoly hilbert_numerator(const MonomialIdeal& M) {
    const auto& gens = M.min_gens();
    if (gens.empty()) return IntPoly{1};
    if (M.is_unit()) return IntPoly{};
    // Pairwise coprime generators form a regular sequence.
    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a)
        for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
            coprime = gens[a].coprime(gens[b]);
    if (coprime) {
        IntPoly acc{1};
        for (const auto& g : gens) acc = poly_mul(acc, one_minus_t_pow(g.degree()));
        return acc;
    }
    // Pivot: the most frequently occurring variable, ties to lowest index.
    std::size_t pivot = 0;
    int best = -1;
    for (std::size_t i = 0; i < M.nvars(); ++i) {
        int count = 0;
        for (const auto& g : gens)
            if (g.exponent(i) > 0) ++count;
        if (count > best) {
            best = count;
            pivot = i;
        }
    }
    IntPoly with = hilbert_numerator(plus_variable(M, pivot));
    IntPoly colon = hilbert_numerator(colon_by_variable(M, pivot));
    // Shift the colon branch by one degree and add.
    IntPoly shifted(colon.size() + 1, 0);
    for (std::size_t i = 0; i < colon.size(); ++i) shifted[i + 1] = colon[i];
    return poly_add(with, shifted);
}

std::size_t m_index(const Monomial& u) { return u.max_var(); }

bool is_stable(const MonomialIdeal& M) {
    for (const auto& u : M.min_gens()) {
        if (u.is_unit()) continue;
        std::size_t m = m_index(u);
        Monomial base = u.divided_by(Monomial::variable(M.nvars(), m));
        for (std::size_t i = 0; i < m; ++i)
            if (!M.contains(base.times(Monomial::variable(M.nvars(), i))))
                return false;
    }
    return true;
}

MonomialIdeal stable_closure(std::size_t nvars, std::vector<Monomial> gens) {
    std::set<std::vector<int>> seen;
    std::vector<Monomial> work = std::move(gens);
    for (auto& g : work) seen.insert(g.exponents());
    std::vector<Monomial> all(work);
    while (!work.empty()) {
        Monomial u = std::move(work.back());
        work.pop_back();
        if (u.is_unit()) continue;
        std::size_t m = m_index(u);
        Monomial base = u.divided_by(Monomial::variable(nvars, m));
        for (std::size_t i = 0; i < m; ++i) {
            Monomial v = base.times(Monomial::variable(nvars, i));
            if (seen.insert(v.exponents()).second) {
                all.push_back(v);
                work.push_back(v);
            }
        }
    }
    return MonomialIdeal(nvars, std::move(all));
}

}  // namespace cmf
