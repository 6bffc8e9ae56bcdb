#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weilzeta/matrix.hpp"

namespace weilzeta {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (nonnegative).
struct SmithForm {
    IntMatrix U;
    IntMatrix Uinv;
    IntMatrix D;
    IntMatrix V;
    std::size_t rank = 0;  ///< number of nonzero diagonal entries

    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with d_i | d_{i+1}, d_i >= 2.
struct FgAb {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    static FgAb trivial() { return {}; }
    static FgAb free(std::size_t r) { return {r, {}}; }
    static FgAb cyclic(const Int& n);

    /// Builds the canonical form from arbitrary cyclic orders (0 = infinite, 1 dropped).
    static FgAb from_cyclic_orders(const std::vector<Int>& orders);

    Int torsion_order() const;
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }

    std::string to_string() const;

    friend bool operator==(const FgAb&, const FgAb&) = default;
};

FgAb direct_sum(const FgAb& a, const FgAb& b);

/// coker(A : Z^cols -> Z^rows).
FgAb cokernel_group(const IntMatrix& A);

/// Saturated integral basis (as columns) of ker(A : Z^cols -> Z^rows).
IntMatrix integer_kernel(const IntMatrix& A);

/// Basis (as columns) of the lattice spanned by the columns of A.
IntMatrix lattice_basis(const IntMatrix& A);

/// A subquotient L/N of Z^n, with N contained in L, together with coordinates.
///
/// `generators` has one column per cyclic factor listed in `orders` (0 = infinite order),
/// in SNF order; factors of order 1 are dropped.
class Subquotient {
public:
    Subquotient(const IntMatrix& L, const IntMatrix& N);

    const FgAb& group() const { return group_; }
    const IntMatrix& generators() const { return generators_; }
    const std::vector<Int>& orders() const { return orders_; }

    /// Coordinates of x in L with respect to `generators` (torsion coordinates reduced).
    std::vector<Int> coordinates(const std::vector<Int>& x) const;

    /// Indices (into orders()) of the infinite-order generators.
    std::vector<std::size_t> free_indices() const;

    /// Lifts of the free generators as columns of an ambient matrix.
    IntMatrix free_generators() const;

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;              // n x r basis of L
    IntMatrix lattice_U_;          // U from the SNF of L; (U x)_i = d_i y_i for x = basis_ y
    std::vector<Int> lattice_d_;
    IntMatrix coord_transform_;    // maps L-coordinates to SNF coordinates of L/N
    std::vector<Int> all_orders_;  // diagonal of the coordinate matrix's SNF, padded with 0
    std::vector<std::size_t> kept_;

    std::vector<Int> lattice_coordinates(const std::vector<Int>& x) const;
    FgAb group_;
    IntMatrix generators_;
    std::vector<Int> orders_;
};

}  // namespace weilzeta
