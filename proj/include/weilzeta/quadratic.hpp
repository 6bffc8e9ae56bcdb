#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilzeta/smith.hpp"
#include "weilzeta/special_value.hpp"

namespace weilzeta {

bool is_fundamental_discriminant(const Int& D);

/// Fundamental discriminants in [lo, hi], increasing.
std::vector<long> fundamental_discriminants(long lo, long hi);

/// Kronecker symbol (D / n) for n >= 1.
int kronecker(const Int& D, const Int& n);

/// Q (disc = 1) or the quadratic field of fundamental discriminant D, with O = Z + Z w,
/// w = (delta + sqrt D) / 2, delta = D mod 4 in {0, 1}.
struct QuadField {
    Int D{1};

    QuadField() = default;
    explicit QuadField(const Int& disc);
    static QuadField rationals() { return QuadField(); }

    bool is_rationals() const { return D == 1; }
    bool is_imaginary() const { return D < 0; }
    bool is_real() const { return D > 1; }
    int degree() const { return is_rationals() ? 1 : 2; }
    int delta() const;
    Int omega_constant() const;  ///< w^2 = delta w + omega_constant
    int roots_of_unity() const;
    std::size_t archimedean_places() const { return is_real() ? 2 : 1; }
    std::string name() const;
};

/// x + y w.
struct QElem {
    Rat x, y;

    static QElem integer(const Int& n) { return {Rat(n), Rat(0)}; }
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }
    std::string to_string(const QuadField& K) const;
    friend bool operator==(const QElem&, const QElem&) = default;
};

QElem qadd(const QElem& a, const QElem& b);
QElem qsub(const QElem& a, const QElem& b);
QElem qmul(const QuadField& K, const QElem& a, const QElem& b);
QElem qconj(const QuadField& K, const QElem& a);
Rat qnorm(const QuadField& K, const QElem& a);
QElem qinv(const QuadField& K, const QElem& a);
QElem qdiv(const QuadField& K, const QElem& a, const QElem& b);
QElem qpow(const QuadField& K, const QElem& a, int e);

/// log |sigma(a)| for the real embedding with sign * sqrt D (real fields), or log |a|^2 for the
/// complex place; computed in extended precision.
double log_abs(const QuadField& K, const QElem& a, int sign = 1);

/// Integral ideal with Z-basis {a, b + c w}, c | a, c | b, 0 <= b < a.
struct Ideal {
    Int a{1}, b{0}, c{1};

    Int norm() const { return a * c; }
    bool is_unit() const { return a == 1 && c == 1; }
    std::string to_string() const;
    friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// Ideal generated as a Z-module by the given integral elements (must have rank 2).
Ideal lattice_ideal(const std::vector<QElem>& gens);
Ideal principal_ideal(const QuadField& K, const QElem& alpha);
Ideal ideal_mul(const QuadField& K, const Ideal& I, const Ideal& J);
Ideal ideal_pow(const QuadField& K, const Ideal& I, unsigned e);
Ideal ideal_conj(const QuadField& K, const Ideal& I);
bool ideal_contains(const Ideal& I, const QElem& alpha);

enum class Splitting { split, inert, ramified };
const char* to_string(Splitting s);
Splitting splitting_type(const QuadField& K, const Int& p);

/// A finite place: prime p, residue degree f, N(v) = p^f, and the prime ideal.
struct Place {
    Int p;
    int f = 1;
    Int norm;
    Ideal ideal;
    int index = 0;  ///< 0 or 1 among the places above p
    int ramification = 1;

    std::string to_string() const;
    friend bool operator==(const Place&, const Place&) = default;
};

std::vector<Place> places_above(const QuadField& K, const Int& p);

/// ord_v(alpha) for alpha != 0.
int valuation(const QuadField& K, const Place& v, const QElem& alpha);

/// A generator of I when I is principal.
std::optional<QElem> principal_generator(const QuadField& K, const Ideal& I);

/// Ideal class group with discrete logarithms.
struct ClassGroup {
    FgAb group;
    Int order{1};
    std::vector<std::vector<Int>> representatives;  ///< class ids, one per class

    /// Canonical id of the class of I.
    std::vector<Int> class_id(const QuadField& K, const Ideal& I) const;
    /// Coordinates of [I] on the SNF generators of `group`.
    std::vector<Int> dlog(const QuadField& K, const Ideal& I) const;

    std::vector<Ideal> generator_ideals;  ///< prime ideals whose classes generate
    std::vector<std::pair<std::vector<Int>, std::vector<Int>>> table;  ///< class id -> exponents
    IntMatrix relations;
};

ClassGroup class_group(const QuadField& K, const Int& bound = Int(1000000));

/// Canonical id of the ideal class (reduced form for D < 0, least cycle state for D > 0).
std::vector<Int> ideal_class_id(const QuadField& K, const Ideal& I);

struct FundamentalUnit {
    QElem eps;
    Int x, y;  ///< eps = x + y w
    int norm = 1;
    double regulator = 0.0;
    double regulator_error = 0.0;
};

FundamentalUnit fundamental_unit(const QuadField& K);

struct FieldInvariants {
    Int h{1};
    FgAb class_group;
    std::optional<FundamentalUnit> unit;
    SpecialValue regulator;  ///< order 0; exact 1 when there is no fundamental unit
    int omega = 2;
};

FieldInvariants field_invariants(const QuadField& K);

struct SInvariants {
    Int h{1}, h_S{1};
    int omega = 2;
    SpecialValue R_S;  ///< order 0
    std::vector<QElem> units;  ///< fundamental unit (if any) then one S-unit per place of S_f
    std::vector<Place> places;
};

/// h_S, R_S and S-unit generators; `dropped` selects the place left out of the regulator
/// matrix (0 .. archimedean + |S_f| - 1).
SInvariants s_invariants(const QuadField& K, const std::vector<Place>& S_f, std::size_t dropped = 0);

}  // namespace weilzeta
