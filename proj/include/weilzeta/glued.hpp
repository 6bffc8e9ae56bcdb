#pragma once

#include <string>
#include <vector>

#include "weilzeta/curves.hpp"
#include "weilzeta/quadratic.hpp"

namespace weilzeta {

/// A point w of the normalization over a singular point v, f = [k(w) : k(v)].
struct FiberPoint {
    std::string label;
    Int norm;
    int f = 1;
    unsigned degree = 1;  ///< degree over the constant field (curves)
    Place place;          ///< the place of the maximal order (orders)
};

struct SingularFiber {
    std::string label;
    Int norm;
    unsigned degree = 1;
    std::vector<FiberPoint> points;

    Int m() const;  ///< gcd of the f_w
};

struct FiberData {
    std::vector<SingularFiber> fibers;

    std::size_t t() const;  ///< sum over v of (|fiber| - 1)
    bool unibranch() const;
};

/// Fibers of Spec O_K -> Spec O for the order of conductor f.
FiberData singular_fibers(const QuadField& K, const Int& conductor);

enum class GluedKind { quadratic_order, proper_curve, affine_curve };

/// Closed point of P^1 over F_q; finite points are labelled by their monic irreducible polynomial.
struct CurvePoint {
    std::string label;
    unsigned degree = 1;
};

/// A reduced dimension-one scheme given by its normalization and the fibers over singular points.
/// Curves have normalization P^1 over F_q minus `removed`.
struct GluedScheme {
    GluedKind kind = GluedKind::quadratic_order;
    QuadField K;
    Int conductor{1};
    std::uint64_t q = 0;
    std::vector<CurvePoint> removed;
    FiberData fibers;
    std::string name;

    bool is_curve() const { return kind != GluedKind::quadratic_order; }
    /// Archimedean places (orders) or removed points (affine curves).
    std::size_t s() const;
    void validate() const;
};

GluedScheme quadratic_order(const Int& D, const Int& conductor);

/// Singular catalog curves: split_node, nonsplit_node, cusp, cusp_f2, affine_node; and p1, p1_minus_point.
GluedScheme glued_curve(const std::string& name, std::uint64_t q);
std::vector<std::string> glued_curve_names();

/// CH_0(X) as the cokernel of the weighted divisor map.
FgAb ch0(const GluedScheme& X);

struct Ch0Units {
    std::size_t rank = 0;
    Int torsion{1};
    std::vector<std::string> generators;
    std::vector<QElem> elements;                ///< orders
    IntMatrix fiber_ord;                        ///< ord_w of each generator, fiber points in order
    IntMatrix arch_ord;                         ///< curves: ord at removed points
    std::vector<std::vector<double>> arch_log;  ///< orders: log |g|_sigma per archimedean place
};

Ch0Units ch0_units(const GluedScheme& X);

/// Which archimedean place (or removed point) and which point of each fiber leave the matrix.
struct RegulatorChoice {
    std::size_t arch = 0;
    std::vector<std::size_t> fiber;
};

SpecialValue regulator_RX(const GluedScheme& X, const Ch0Units& units, const RegulatorChoice& choice = {});

SpecialValue weil_special_value(const GluedScheme& X);

/// Independent evaluation for orders through the order class number formula.
SpecialValue jp_special_value(const GluedScheme& X);

/// Z_X = Z_Y * prod_v prod_{w | v} (1 - t^{deg w}) / (1 - t^{deg v}), curves only.
ZetaRational glued_zeta(const GluedScheme& X);

}  // namespace weilzeta
