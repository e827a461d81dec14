#include "cmf/linalg.hpp"

#include <cassert>

namespace cmf {

std::size_t row_reduce(const PrimeField& F, FpMatrix& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].v == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Fp inv = F.inv(rows[rank][col]);
        for (std::size_t c = col; c < ncols; ++c)
            rows[rank][c] = F.mul(rows[rank][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].v == 0) continue;
            Fp factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank, std::vector<Fp>(ncols));
    return rank;
}

std::size_t matrix_rank(const PrimeField& F, FpMatrix rows) {
    return row_reduce(F, rows);
}

Fp determinant(const PrimeField& F, FpMatrix m) {
    const std::size_t n = m.size();
    Fp det = F.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].v == 0) ++pivot;
        if (pivot == n) return F.zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        Fp inv = F.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].v == 0) continue;
            Fp factor = F.mul(m[r][col], inv);
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]));
        }
    }
    return det;
}

FpMatrix matrix_inverse(const PrimeField& F, FpMatrix m) {
    const std::size_t n = m.size();
    FpMatrix aug(n, std::vector<Fp>(2 * n, F.zero()));
    for (std::size_t r = 0; r < n; ++r) {
        assert(m[r].size() == n);
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = m[r][c];
        aug[r][n + r] = F.one();
    }
    if (row_reduce(F, aug) != n) throw SingularMatrix();
    FpMatrix out(n, std::vector<Fp>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r][c] = aug[r][n + c];
    return out;
}

}  // namespace cmf
