#pragma once

#include <vector>

#include "weilzeta/quadratic.hpp"

namespace weilzeta {

/// The primitive real character a -> (D / a) of a fundamental discriminant D.
struct QuadCharacter {
    Int D;

    explicit QuadCharacter(const Int& disc);
    long modulus() const { return abs_int(D).get_si(); }
    bool is_odd() const { return D < 0; }
    int operator()(long a) const;
};

/// L(0, chi) = -(1/|D|) sum_a chi(a) a, for odd chi.
Rat l_chi_at_zero(const QuadCharacter& chi);

struct FloatValue {
    double value = 0.0;
    double error = 0.0;
};

/// L'(0, chi) = sum_a chi(a) log Gamma(a / |D|), for even nontrivial chi.
FloatValue l_chi_derivative_at_zero(const QuadCharacter& chi);

/// log Gamma(x) for x > 0 by shifted Stirling series, with a remainder bound.
FloatValue log_gamma(double x);

/// Hurwitz zeta(s, x) by Euler-Maclaurin, s != 1, x > 0.
FloatValue hurwitz_zeta(double s, double x);

/// L(s, chi) = |D|^{-s} sum_a chi(a) zeta(s, a/|D|).
FloatValue numeric_l_oracle(const QuadCharacter& chi, double s);

/// Leading term of L_S(s, chi) at s = 0, with Euler factors (1 - chi(p) p^{-s}) removed for p in S.
SpecialValue l_chi_special_value(const QuadCharacter& chi, const std::vector<Int>& removed_primes = {});

/// Leading term of zeta_{K,S}(s) at s = 0 (zeta_K = zeta * L(chi_D)).
SpecialValue dedekind_zeta_star(const QuadField& K, const std::vector<Place>& S_f = {});

}  // namespace weilzeta
