#include "cmf/betti.hpp"

#include <algorithm>
#include <cassert>

#include "cmf/linalg.hpp"

namespace cmf {

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) pd = std::max(pd, ij.first);
    return pd;
}

int BettiTable::regularity_of_quotient() const {
    int reg = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

long long BettiTable::rank_at(int i) const {
    long long total = 0;
    for (const auto& [ij, v] : entries)
        if (ij.first == i) total += v;
    return total;
}

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All i-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == i) {
            out.push_back(cur);
            return;
        }
        for (int k = start; k < n; ++k) {
            cur.push_back(k);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Multiplication caches for the quotient algebra R/I on standard monomials.
struct QuotientAlgebra {
    const PolyRing& R;
    std::vector<std::vector<Monomial>> basis;           // degree -> monomials
    std::vector<std::map<std::vector<int>, int>> index; // degree -> position
    // action[d][k] has one column per basis monomial of degree d holding the
    // coordinates of x_k * u in degree d+1.
    std::vector<std::vector<std::vector<std::vector<Fp>>>> action;

    QuotientAlgebra(const Ideal& I, int max_deg) : R(I.ring()) {
        const MonomialIdeal& lead = I.lead_monomials();
        basis.resize(max_deg + 1);
        index.resize(max_deg + 1);
        for (int d = 0; d <= max_deg; ++d) {
            basis[d] = std_monomials(lead, d);
            for (std::size_t k = 0; k < basis[d].size(); ++k)
                index[d][basis[d][k].exponents()] = static_cast<int>(k);
        }
        action.resize(max_deg);
        const GroebnerBasis& G = I.groebner();
        for (int d = 0; d + 1 <= max_deg; ++d) {
            action[d].assign(R.n, {});
            for (std::size_t k = 0; k < R.n; ++k) {
                action[d][k].resize(basis[d].size());
                for (std::size_t u = 0; u < basis[d].size(); ++u) {
                    Monomial prod = basis[d][u].times(Monomial::variable(R.n, k));
                    std::vector<Fp> col(basis[d + 1].size(), R.field.zero());
                    if (!lead.contains(prod)) {
                        col[index[d + 1].at(prod.exponents())] = R.field.one();
                    } else {
                        Polynomial nf = normal_form(
                            R, Polynomial::monomial(R, prod, R.field.one()), G);
                        for (const auto& t : nf.terms())
                            col[index[d + 1].at(t.mono.exponents())] = t.coeff;
                    }
                    action[d][k][u] = std::move(col);
                }
            }
        }
    }

    long long dim(int d) const {
        if (d < 0 || d > static_cast<int>(basis.size()) - 1) return 0;
        return static_cast<long long>(basis[d].size());
    }
};

// Rank of the strand differential d_i : Lambda^i V (x) (R/I)_{j-i} ->
// Lambda^{i-1} V (x) (R/I)_{j-i+1}.
std::size_t strand_rank(const QuotientAlgebra& A, int i, int j) {
    const std::size_t n = A.R.n;
    int dsrc = j - i;
    if (i < 1 || i > static_cast<int>(n) || dsrc < 0) return 0;
    if (A.dim(dsrc) == 0) return 0;
    auto src_sets = subsets(static_cast<int>(n), i);
    auto dst_sets = subsets(static_cast<int>(n), i - 1);
    std::map<std::vector<int>, int> dst_index;
    for (std::size_t s = 0; s < dst_sets.size(); ++s)
        dst_index[dst_sets[s]] = static_cast<int>(s);
    std::size_t src_dim = src_sets.size() * A.dim(dsrc);
    std::size_t dst_dim = dst_sets.size() * A.dim(dsrc + 1);
    if (src_dim == 0 || dst_dim == 0) return 0;
    FpMatrix rows;
    rows.reserve(src_dim);
    for (const auto& S : src_sets) {
        for (long long u = 0; u < A.dim(dsrc); ++u) {
            std::vector<Fp> row(dst_dim, A.R.field.zero());
            for (std::size_t pos = 0; pos < S.size(); ++pos) {
                int k = S[pos];
                std::vector<int> T;
                T.reserve(S.size() - 1);
                for (std::size_t q = 0; q < S.size(); ++q)
                    if (q != pos) T.push_back(S[q]);
                int tbase = dst_index.at(T) * static_cast<int>(A.dim(dsrc + 1));
                const auto& col = A.action[dsrc][k][u];
                bool negative = (pos % 2) != 0;
                for (std::size_t r = 0; r < col.size(); ++r) {
                    if (col[r].v == 0) continue;
                    Fp val = negative ? A.R.field.neg(col[r]) : col[r];
                    row[tbase + r] = A.R.field.add(row[tbase + r], val);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return row_reduce(A.R.field, rows);
}

}  // namespace

BettiTable koszul_betti(const Ideal& I, int max_i, int max_j) {
    const PolyRing& R = I.ring();
    assert(max_i <= static_cast<int>(R.n));
    BettiTable table;
    table.max_i = max_i;
    table.max_j = max_j;
    QuotientAlgebra A(I, max_j);
    for (int j = 0; j <= max_j; ++j) {
        // Ranks r_i of the strand maps for the whole column at once.
        std::vector<std::size_t> r(std::min<int>(R.n, j) + 2, 0);
        for (int i = 1; i <= std::min<int>(static_cast<int>(R.n), j); ++i)
            r[i] = strand_rank(A, i, j);
        for (int i = 0; i <= std::min<int>(max_i, j); ++i) {
            long long dim_i = binomial(static_cast<long long>(R.n), i) *
                              A.dim(j - i);
            long long beta = dim_i - static_cast<long long>(r[i]) -
                             static_cast<long long>(
                                 i + 1 < static_cast<int>(r.size()) ? r[i + 1] : 0);
            if (beta != 0) table.entries[{i, j}] = beta;
        }
    }
    return table;
}

BettiTable betti_table(const Ideal& I, int reg_hint, int max_j_cap) {
    const PolyRing& R = I.ring();
    int n = static_cast<int>(R.n);
    int max_j;
    if (reg_hint >= 0) {
        // reg(R/I) = reg(I) - 1 for a proper nonzero ideal; entries vanish
        // for j - i beyond it, so one pass up to n + reg(R/I) is complete.
        max_j = n + std::max(0, reg_hint - 1);
    } else {
        // Taylor bound: the lead ideal's (nonminimal) Taylor resolution is
        // supported in degrees at most deg lcm(minimal generators), and
        // passing to the lead ideal can only raise the regularity, so every
        // Betti degree of R/I is at most that lcm degree.
        Monomial l = Monomial::unit(R.n);
        for (const auto& g : I.lead_monomials().min_gens()) l = l.lcm(g);
        max_j = n + l.degree();
    }
    if (max_j_cap >= 0 && max_j > max_j_cap)
        throw MathError("Betti table needs strands up to degree " +
                        std::to_string(max_j) + ", beyond the cap " +
                        std::to_string(max_j_cap));
    BettiTable t = koszul_betti(I, n, max_j);
    t.complete = true;
    return t;
}

BettiTable ek_betti(const MonomialIdeal& M) {
    if (!is_stable(M)) throw NotStable();
    BettiTable table;
    table.entries[{0, 0}] = 1;
    for (const auto& u : M.min_gens()) {
        if (u.is_unit()) continue;
        long long m = static_cast<long long>(m_index(u));
        for (int i = 0; i <= m; ++i) {
            long long c = binomial(m, i);
            if (c == 0) continue;
            // beta_{i, deg u + i}(I) = beta_{i+1, deg u + i}(R/I).
            auto key = std::make_pair(i + 1, u.degree() + i);
            table.entries[key] += c;
            table.max_i = std::max(table.max_i, i + 1);
            table.max_j = std::max(table.max_j, u.degree() + i);
        }
    }
    table.complete = true;
    return table;
}

int regularity_with_gin(const Ideal& I, const GinResult& g, Rng& rng) {
    if (I.is_zero() || I.is_unit())
        throw DegenerateIdeal("regularity undefined for the zero or unit ideal");
    if (is_stable(g.gin)) return g.gin.max_gen_degree();
    (void)rng;
    BettiTable t = betti_table(I);
    return t.regularity_of_quotient() + 1;
}

int regularity(const Ideal& I, Rng& rng) {
    if (I.is_zero() || I.is_unit())
        throw DegenerateIdeal("regularity undefined for the zero or unit ideal");
    GinResult g = gin(I, rng);
    return regularity_with_gin(I, g, rng);
}

bool has_linear_resolution(const Ideal& I, Rng& rng) {
    MuProfile prof = mu_profile(I);
    if (prof.by_degree.size() != 1) throw NotEquigenerated();
    int d = prof.by_degree.begin()->first;
    return regularity(I, rng) == d;
}

HomologicalProfile profile_from_table(const Ideal& I, const BettiTable& t) {
    const PolyRing& R = I.ring();
    std::size_t pd = static_cast<std::size_t>(t.projective_dimension());
    std::size_t depth = R.n - pd;  // Auslander-Buchsbaum
    DimHeight dh = dim_and_height(I);
    bool cm = depth == dh.dim;
    bool gor = cm && t.rank_at(static_cast<int>(pd)) == 1;
    return HomologicalProfile{pd, depth, cm, gor};
}

HomologicalProfile homological_profile(const Ideal& I) {
    if (I.is_unit()) throw UnitIdeal();
    return profile_from_table(I, betti_table(I));
}

}  // namespace cmf
