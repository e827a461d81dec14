#include "cmf/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cmf {

Monomial::Monomial(std::vector<int> exps)
    : exps_(std::move(exps)),
      deg_(std::accumulate(exps_.begin(), exps_.end(), 0)) {
    assert(std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; }));
}

Monomial Monomial::unit(std::size_t nvars) {
    return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& o) const {
    assert(nvars() == o.nvars());
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    assert(nvars() == o.nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    assert(o.divides(*this));
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], o.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

std::size_t Monomial::max_var() const {
    if (is_unit()) throw UnitMonomial();
    for (std::size_t i = exps_.size(); i-- > 0;)
        if (exps_[i] > 0) return i;
    throw UnitMonomial();  // unreachable
}

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = ea.size(); i-- > 0;) {
        int d = ea[i] - eb[i];
        if (d != 0)
            return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

namespace {

std::strong_ordering grevlex_cmp_range(const std::vector<int>& ea,
                                       const std::vector<int>& eb,
                                       std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += ea[i];
        db += eb[i];
    }
    if (da != db)
        return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = hi; i-- > lo;) {
        int d = ea[i] - eb[i];
        if (d != 0)
            return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering order_cmp(const MonomialOrder& ord, const Monomial& a,
                               const Monomial& b) {
    if (ord.elim == 0) return grevlex_cmp(a, b);
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    auto block = grevlex_cmp_range(ea, eb, 0, ord.elim);
    if (block != std::strong_ordering::equal) return block;
    return grevlex_cmp_range(ea, eb, ord.elim, ea.size());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> exps(nvars, 0);
    // Enumerate all exponent vectors of the given total degree.
    auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
        if (i + 1 == nvars) {
            exps[i] = rest;
            out.emplace_back(exps);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            exps[i] = e;
            self(self, i + 1, rest - e);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(exps);
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_cmp(a, b) == std::strong_ordering::greater;
    });
    return out;
}

long long ring_dimension(std::size_t nvars, int degree) {
    if (degree < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    long long num = 1;
    for (std::size_t k = 1; k < nvars; ++k) {
        num = num * (degree + static_cast<long long>(k)) / k;
    }
    return num;
}

}  // namespace cmf
