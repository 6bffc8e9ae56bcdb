#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weilzeta/zcomplex.hpp"

namespace weilzeta {

/// Integral bases modulo torsion of H^i(C), one matrix of cocycle lifts per degree.
struct CohomologyBases {
    int lo = 0;
    std::vector<IntMatrix> free_lifts;   ///< columns: lifts in C^i of a basis of H^i / tor
    std::vector<FgAb> groups;

    std::size_t even_rank() const;
    std::size_t odd_rank() const;
};

CohomologyBases cohomology_bases(const ZComplex& C);

/// phi : H^ev(C)_R -> H^od(C)_R in the recorded bases: even-degree bases concatenated in
/// increasing degree give the columns, odd-degree bases the rows.
struct Trivialization {
    RatMatrix phi;
};

/// x with det_Z(C) = x Z inside det_R(C_R) = R, x = 1 / prod_i [H^i]^{(-1)^i}.
Rat euler_lattice_index(const ZComplex& C);

/// |det(phi)| / prod_i [H^i(C)_tor]^{(-1)^i}.
Rat trivialized_lattice_index(const ZComplex& C, const Trivialization& t);

/// Real-valued variant for trivializations that are not rational.
double trivialized_lattice_index(const ZComplex& C, const std::vector<std::vector<double>>& phi);

/// Bounded complex of finitely presented groups: term k is Z^{n_k} / (columns of relations[k]),
/// diffs[k] maps generators of term k to generators of term k+1.
struct PresentedComplex {
    int min_degree = 0;
    std::vector<IntMatrix> relations;
    std::vector<IntMatrix> diffs;

    std::size_t generators_at(int degree) const;
    int max_degree() const { return min_degree + static_cast<int>(relations.size()) - 1; }

    /// Checks that differentials respect relations and square to zero modulo relations.
    void validate() const;

    FgAb term(int degree) const;
    Cohomology cohomology() const;
    bool is_acyclic() const;

    /// Matrix of d^i on free quotients, in the recorded bases mod torsion of the terms.
    RatMatrix free_differential(int degree) const;
    std::size_t free_rank_at(int degree) const;
};

/// Degreewise data phi^i : B^i_R -> Hom(A^{1-i}_R, R), in the recorded bases of B^i / tor
/// (columns) and the dual of the recorded basis of A^{1-i} / tor (rows).
struct DualityData {
    int min_degree = 0;  ///< degree of the first matrix, indexed like B
    std::vector<RatMatrix> phi;

    const RatMatrix* at(int degree) const;
};

/// prod [B^i_tor]^{(-1)^i} / (|det phi| prod [A^i_tor]^{(-1)^i}); equals 1 when A and B are
/// acyclic and phi is a chain isomorphism onto the shifted dual.
Rat acyclic_duality_ratio(const PresentedComplex& A, const PresentedComplex& B, const DualityData& phi);

/// Random instances for the randomized suites.
struct AcyclicPair {
    PresentedComplex A;
    PresentedComplex B;
    DualityData phi;
};

/// A, B: random acyclic complexes with torsion (mapping cones of quasi-isomorphisms and
/// presentations 0 -> Z^r -> Z^n -> coker -> 0), hidden behind random unimodular base changes;
/// phi: a random rational chain isomorphism B_Q -> Hom(A_Q, Q)[-1].
AcyclicPair random_acyclic_pair(std::mt19937_64& rng);

/// Random unimodular n x n matrix with its inverse.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 0);

}  // namespace weilzeta
