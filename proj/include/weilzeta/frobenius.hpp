#pragma once

#include <cstdint>
#include <random>

#include "weilzeta/polynomial.hpp"
#include "weilzeta/smith.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta {

/// Discrete module over the Galois group of a finite field: M = Z^n / (columns of relations),
/// Frobenius acting on generator column vectors, with phi^order = id on M.
struct FrobModule {
    IntMatrix relations;
    IntMatrix frobenius;
    std::uint64_t order = 1;

    std::size_t generators() const { return frobenius.rows(); }

    /// Throws unless phi preserves the relations, is invertible on M and phi^order = id.
    void validate() const;

    static FrobModule trivial_z();  ///< (Z, id)
    static FrobModule free(const IntMatrix& phi, std::uint64_t order);
    static FrobModule cyclic(const Int& n, const Int& multiplier, std::uint64_t order);
};

FrobModule direct_sum(const FrobModule& a, const FrobModule& b);

/// The module rewritten on SNF generators: torsion coordinates first (orders[i] > 1), then free.
struct CanonicalModule {
    std::vector<Int> torsion;  ///< orders of the torsion coordinates
    std::size_t free_rank = 0;
    IntMatrix phi;             ///< action on canonical coordinates

    std::size_t size() const { return torsion.size() + free_rank; }
    IntMatrix relations() const;
    IntMatrix free_block() const;  ///< action on M / M_tor
};

CanonicalModule canonicalize(const FrobModule& M);

struct FixedPoints {
    FgAb group;
    IntMatrix free_lifts;  ///< canonical coordinates of a basis of H^0 / tor
};

FixedPoints h0(const FrobModule& M);

/// M_phi = M / (phi - 1) M.
FgAb coinvariants(const FrobModule& M);

Int h1_order(const FrobModule& M);

/// H^1(Z/m, M) = ker(N_m) / im(phi - 1) for m a multiple of the order.
FgAb cyclic_h1(const FrobModule& M, std::uint64_t m);

FrobModule induce(const FrobModule& M, std::uint64_t n);

/// det(I - u phi | M / M_tor).
IntPoly local_factor_poly(const FrobModule& M);

SpecialValue local_special_value(const FrobModule& M, std::uint64_t norm);

Rat point_regulator(const FrobModule& M);

struct PointEuler {
    LogMonomial chi;
    int e = 0;  ///< -rank H^0
};

PointEuler chi_point(const FrobModule& M, std::uint64_t norm);

/// Random module of rank <= max_rank, torsion order <= max_torsion, Frobenius order <= max_order.
FrobModule random_frob_module(std::mt19937_64& rng, std::size_t max_rank = 4, int max_torsion = 50,
                              int max_order = 12);

/// Random finite module (free rank 0).
FrobModule random_finite_frob_module(std::mt19937_64& rng, int max_torsion = 50, int max_order = 12);

}  // namespace weilzeta
