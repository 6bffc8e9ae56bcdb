#pragma once

#include <cstddef>
#include <vector>

#include "weilzeta/smith.hpp"

namespace weilzeta {

/// Bounded cochain complex of free abelian groups Z^{ranks[k]} in degree min_degree + k.
///
/// diffs[k] is the differential from degree min_degree + k to min_degree + k + 1, so
/// diffs.size() == ranks.size() - 1 (an empty or one-term complex has no differentials).
struct ZComplex {
    int min_degree = 0;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;

    int max_degree() const { return min_degree + static_cast<int>(ranks.size()) - 1; }
    std::size_t rank_at(int degree) const;

    /// Throws unless shapes compose and consecutive differentials compose to zero.
    void validate() const;

    /// C[1]: degree i of the result is degree i+1 of C, differentials negated.
    ZComplex shifted(int k = 1) const;

    /// Two-term complex [Z^m -A-> Z^n] in degrees d, d+1.
    static ZComplex two_term(const IntMatrix& A, int degree);
};

/// Degreewise direct sum.
ZComplex direct_sum(const ZComplex& a, const ZComplex& b);

/// Cohomology of a bounded complex, indexed by degree in [lo, hi].
struct Cohomology {
    int lo = 0;
    std::vector<FgAb> groups;

    const FgAb& at(int degree) const;
    bool all_finite() const;
};

Cohomology complex_cohomology(const ZComplex& C);

}  // namespace weilzeta
