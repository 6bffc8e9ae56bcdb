#include "weilzeta/zcomplex.hpp"

#include <algorithm>
#include <string>

namespace weilzeta {

std::size_t ZComplex::rank_at(int degree) const {
    if (degree < min_degree || degree > max_degree()) return 0;
    return ranks[static_cast<std::size_t>(degree - min_degree)];
}

void ZComplex::validate() const {
    const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
    if (diffs.size() != expected) throw Error("complex: expected " + std::to_string(expected) + " differentials");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k].cols() != ranks[k] || diffs[k].rows() != ranks[k + 1])
            throw Error("complex: differential " + std::to_string(k) + " has the wrong shape");
    }
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
        if (ranks[k] == 0 || ranks[k + 2] == 0) continue;
        if (!(diffs[k + 1] * diffs[k]).is_zero())
            throw Error("complex: d^2 != 0 at degree " + std::to_string(min_degree + static_cast<int>(k)));
    }
}

ZComplex ZComplex::shifted(int k) const {
    ZComplex c = *this;
    c.min_degree -= k;
    if (k % 2 != 0)
        for (auto& d : c.diffs)
            for (std::size_t i = 0; i < d.rows(); ++i) d.negate_row(i);
    return c;
}

ZComplex ZComplex::two_term(const IntMatrix& A, int degree) {
    return ZComplex{degree, {A.cols(), A.rows()}, {A}};
}

ZComplex direct_sum(const ZComplex& a, const ZComplex& b) {
    if (a.ranks.empty()) return b;
    if (b.ranks.empty()) return a;
    ZComplex c;
    c.min_degree = std::min(a.min_degree, b.min_degree);
    const int hi = std::max(a.max_degree(), b.max_degree());
    for (int d = c.min_degree; d <= hi; ++d) c.ranks.push_back(a.rank_at(d) + b.rank_at(d));
    auto diff_of = [](const ZComplex& x, int d) {
        IntMatrix m(x.rank_at(d + 1), x.rank_at(d));
        if (d >= x.min_degree && d < x.max_degree()) m = x.diffs[static_cast<std::size_t>(d - x.min_degree)];
        return m;
    };
    for (int d = c.min_degree; d < hi; ++d) c.diffs.push_back(block_diag(diff_of(a, d), diff_of(b, d)));
    return c;
}

const FgAb& Cohomology::at(int degree) const {
    static const FgAb zero{};
    if (degree < lo || degree >= lo + static_cast<int>(groups.size())) return zero;
    return groups[static_cast<std::size_t>(degree - lo)];
}

bool Cohomology::all_finite() const {
    for (const auto& g : groups)
        if (!g.is_finite()) return false;
    return true;
}

Cohomology complex_cohomology(const ZComplex& C) {
    C.validate();
    Cohomology h;
    h.lo = C.min_degree;
    for (int d = C.min_degree; d <= C.max_degree(); ++d) {
        const std::size_t n = C.rank_at(d);
        const std::size_t k = static_cast<std::size_t>(d - C.min_degree);
        IntMatrix ker = (d < C.max_degree() && C.rank_at(d + 1) > 0) ? integer_kernel(C.diffs[k])
                                                                     : IntMatrix::identity(n);
        IntMatrix im = (d > C.min_degree) ? C.diffs[k - 1] : IntMatrix(n, 0);
        if (n == 0) {
            h.groups.push_back({});
            continue;
        }
        h.groups.push_back(Subquotient(ker, im).group());
    }
    return h;
}

}  // namespace weilzeta
