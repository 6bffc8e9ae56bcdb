#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weilzeta/polynomial.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta {

/// F_{p^k} in a polynomial basis modulo a primitive polynomial, with log/exp tables.
/// Elements are integers in [0, p^k) whose base-p digits are the coordinates.
class FiniteField {
public:
    using Elem = std::uint32_t;

    FiniteField(unsigned p, unsigned k);
    static FiniteField of_size(std::uint64_t q);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t size() const { return q_; }
    /// Monic primitive modulus, low coefficient first.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Elem generator() const { return exp_[1]; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem from_int(long n) const;
    bool is_square(Elem a) const;

private:
    unsigned p_, k_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;  ///< log(1 + g^d), or q - 1 when 1 + g^d = 0
};

/// Element of F_q written as a polynomial in the generator a of the field's modulus.
using FqElem = std::vector<long>;

/// Image of the base field's generator inside an extension, and the induced map on FqElem.
class Embedding {
public:
    Embedding(const FiniteField& base, const FiniteField& ext);
    FiniteField::Elem operator()(const FqElem& c) const;

private:
    const FiniteField* ext_;
    unsigned p_;
    std::vector<FiniteField::Elem> powers_;
};

struct Monomial {
    FqElem coef;
    int ex = 0, ey = 0, ez = 0;
};

/// Parses a polynomial in x, y, z over F_q; `a` denotes the generator of F_q. Integer
/// coefficients, `+ - * ^` and parentheses are accepted.
std::vector<Monomial> parse_polynomial(const std::string& text, const FiniteField& Fq);

enum class CurveKind { projective_plane, affine_plane, p1, p1_minus_points };

const char* to_string(CurveKind k);
CurveKind curve_kind_from_string(const std::string& s);

struct CurveModel {
    CurveKind kind = CurveKind::p1;
    std::uint64_t q = 2;
    std::vector<Monomial> equation;
    /// Removed points with coordinates in F_q (x, y, z; z = 1 for affine, (x : z) on P^1).
    std::vector<std::array<FqElem, 3>> removed;
    unsigned constant_degree = 1;  ///< [constants : F_q]
    std::string name;

    FiniteField base_field() const { return FiniteField::of_size(q); }
    void validate() const;
};

/// Number of F_{q^n}-points; plane models are enumerated, subject to q^{2n} <= budget.
Int count_points(const CurveModel& X, unsigned n, std::uint64_t budget = std::uint64_t(1) << 32);

/// Singular points of a plane model over F_{q^n}.
std::uint64_t singular_point_count(const CurveModel& X, unsigned n, std::uint64_t budget = std::uint64_t(1) << 32);

/// Z(t) = num / den, num(0) = den(0) = 1.
struct ZetaRational {
    IntPoly num{Int(1)}, den{Int(1)};
    Int q{2};

    std::string to_string() const;
    friend bool operator==(const ZetaRational&, const ZetaRational&) = default;
};

/// Equality as rational functions.
bool same_function(const ZetaRational& a, const ZetaRational& b);

/// N_1 .. N_B from the expansion of log Z.
std::vector<Int> counts_from_zeta(const ZetaRational& Z, std::size_t B);

/// The rational function of the given degree bounds whose expansion matches the counts.
ZetaRational zeta_from_counts(const std::vector<Int>& counts, std::size_t deg_num, std::size_t deg_den, const Int& q);

/// Z(t) = (1 - t)^rho W(t): order rho, value W(1) (log q)^rho.
SpecialValue zeta_special_value(const ZetaRational& Z);

/// P(1) for Z = P(t) / ((1 - t)(1 - q t)) (in t^f over a constant field of degree f).
Int picard_zero_order(const ZetaRational& Z);

/// P(t) = q^g t^{2g} P(1 / (q t)) for the numerator P of a smooth proper curve.
bool functional_equation_holds(const ZetaRational& Z, unsigned constant_degree = 1);

struct CatalogCurve {
    CurveModel model;
    std::size_t deg_num = 0, deg_den = 0;
    int genus = 0;  ///< geometric genus
    bool smooth_proper = false;
};

/// Catalog entries available over F_q (several entries require q odd or a fixed q).
std::vector<std::string> curve_catalog_names();
CatalogCurve catalog_curve(const std::string& name, std::uint64_t q);

/// Counts N_1..N_B with B = deg_num + deg_den + 1, then solves (one count in excess).
ZetaRational curve_zeta(const CatalogCurve& C, std::uint64_t budget = std::uint64_t(1) << 32);

/// Z_U = Z_C * prod (1 - t^{deg v}) over the removed closed points.
ZetaRational remove_points(const ZetaRational& Z, const std::vector<unsigned>& degrees);

}  // namespace weilzeta
