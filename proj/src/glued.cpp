#include "weilzeta/glued.hpp"

#include <algorithm>
#include <cmath>

#include "weilzeta/logmono.hpp"

namespace weilzeta {

namespace {

Int ipow(const Int& b, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<const FiberPoint*> flat_points(const FiberData& F) {
    std::vector<const FiberPoint*> out;
    for (const auto& v : F.fibers)
        for (const auto& w : v.points) out.push_back(&w);
    return out;
}

SingularFiber curve_fiber(std::uint64_t q, const std::string& label, unsigned degree,
                          const std::vector<CurvePoint>& points) {
    SingularFiber v{label, ipow(Int(q), degree), degree, {}};
    for (const auto& w : points) {
        if (w.degree % degree != 0) throw Error("glued curve: fiber degree not divisible by the point degree");
        v.points.push_back({w.label, ipow(Int(q), w.degree), static_cast<int>(w.degree / degree), w.degree, Place{}});
    }
    return v;
}

}  // namespace

Int SingularFiber::m() const {
    Int g = 0;
    for (const auto& w : points) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(w.f).get_mpz_t());
    return g;
}

std::size_t FiberData::t() const {
    std::size_t t = 0;
    for (const auto& v : fibers) t += v.points.size() - 1;
    return t;
}

bool FiberData::unibranch() const {
    return std::all_of(fibers.begin(), fibers.end(), [](const SingularFiber& v) { return v.points.size() == 1; });
}

FiberData singular_fibers(const QuadField& K, const Int& conductor) {
    if (conductor < 1) throw Error("singular_fibers: conductor must be positive");
    if (K.is_rationals()) throw Error("singular_fibers: need a quadratic field");
    FiberData F;
    for (const auto& p : prime_divisors(conductor)) {
        SingularFiber v{"p=" + p.get_str(), p, 1, {}};
        for (const auto& w : places_above(K, p))
            v.points.push_back({w.to_string(), w.norm, w.f, static_cast<unsigned>(w.f), w});
        F.fibers.push_back(std::move(v));
    }
    return F;
}

std::size_t GluedScheme::s() const {
    switch (kind) {
        case GluedKind::quadratic_order: return K.archimedean_places();
        case GluedKind::affine_curve: return removed.size();
        case GluedKind::proper_curve: return 0;
    }
    return 0;
}

void GluedScheme::validate() const {
    for (const auto& v : fibers.fibers) {
        if (v.points.empty()) throw Error("glued scheme: empty fiber over " + v.label);
        for (const auto& w : v.points)
            if (w.f < 1) throw Error("glued scheme: residue degree must be positive");
    }
    if (kind == GluedKind::quadratic_order) {
        if (conductor == 1 && !fibers.fibers.empty()) throw Error("glued scheme: maximal order has no singular fibers");
        for (const auto& v : fibers.fibers) {
            const auto type = splitting_type(K, v.norm);
            const std::size_t expect = type == Splitting::split ? 2 : 1;
            if (v.points.size() != expect || (type == Splitting::inert) != (v.points[0].f == 2))
                throw Error("glued scheme: fiber over " + v.label + " disagrees with the splitting type");
        }
        return;
    }
    if (q < 2) throw Error("glued scheme: missing base field");
    if (kind == GluedKind::proper_curve && !removed.empty()) throw Error("glued scheme: proper curve with removed points");
    if (kind == GluedKind::affine_curve && removed.empty()) throw Error("glued scheme: affine curve needs removed points");
}

GluedScheme quadratic_order(const Int& D, const Int& conductor) {
    GluedScheme X;
    X.kind = GluedKind::quadratic_order;
    X.K = QuadField(D);
    if (X.K.is_rationals()) throw Error("quadratic_order: need a quadratic field");
    X.conductor = conductor;
    X.fibers = singular_fibers(X.K, conductor);
    X.name = "order of conductor " + conductor.get_str() + " in " + X.K.name();
    X.validate();
    return X;
}

std::vector<std::string> glued_curve_names() {
    return {"p1", "p1_minus_point", "split_node", "nonsplit_node", "cusp", "cusp_f2", "affine_node"};
}

GluedScheme glued_curve(const std::string& name, std::uint64_t q) {
    FiniteField::of_size(q);
    GluedScheme X;
    X.q = q;
    X.name = name;
    X.kind = GluedKind::proper_curve;
    auto need_odd = [&] {
        if (q % 2 == 0) throw Error("glued curve: " + name + " needs odd characteristic");
    };
    const std::vector<CurvePoint> split{{"t - 1", 1}, {"t + 1", 1}};
    if (name == "p1") {
    } else if (name == "p1_minus_point") {
        X.kind = GluedKind::affine_curve;
        X.removed = {{"inf", 1}};
    } else if (name == "split_node") {
        need_odd();
        X.fibers.fibers.push_back(curve_fiber(q, "node", 1, split));
    } else if (name == "nonsplit_node") {
        need_odd();
        X.fibers.fibers.push_back(curve_fiber(q, "node", 1, {{"t^2 - a", 2}}));
    } else if (name == "cusp" || name == "cusp_f2") {
        if (name == "cusp_f2" && q != 2) throw Error("glued curve: cusp_f2 is defined over F_2");
        X.fibers.fibers.push_back(curve_fiber(q, "cusp", 1, {{"t", 1}}));
    } else if (name == "affine_node") {
        need_odd();
        X.kind = GluedKind::affine_curve;
        X.removed = {{"inf", 1}};
        X.fibers.fibers.push_back(curve_fiber(q, "node", 1, split));
    } else {
        throw Error("glued curve: unknown curve " + name);
    }
    X.validate();
    return X;
}

FgAb ch0(const GluedScheme& X) {
    X.validate();
    const auto pts = flat_points(X.fibers);
    const std::size_t nz = X.fibers.fibers.size();

    // Class group of the normalization: generators, relation orders, and dlog of each fiber point.
    std::vector<Int> orders;
    std::vector<std::vector<Int>> dlogs;
    if (X.kind == GluedKind::quadratic_order) {
        auto cg = class_group(X.K);
        orders = cg.group.invariant_factors;
        for (const auto* w : pts) dlogs.push_back(cg.dlog(X.K, w->place.ideal));
    } else {
        Int g = 0;
        for (const auto& s : X.removed) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(s.degree).get_mpz_t());
        orders = {g};
        for (const auto* w : pts) dlogs.push_back({Int(w->degree)});
    }
    const std::size_t r = orders.size();
    IntMatrix A(r + nz, r + pts.size());
    for (std::size_t i = 0; i < r; ++i) A(i, i) = orders[i];
    std::size_t col = r;
    for (std::size_t v = 0; v < nz; ++v)
        for (const auto& w : X.fibers.fibers[v].points) {
            const auto& d = dlogs[col - r];
            for (std::size_t i = 0; i < r; ++i) A(i, col) = d[i];
            A(r + v, col) = -w.f;
            ++col;
        }
    auto G = cokernel_group(A);
    if (X.kind != GluedKind::proper_curve && !G.is_finite()) throw Error("ch0: affine CH_0 must be finite");
    return G;
}

Ch0Units ch0_units(const GluedScheme& X) {
    X.validate();
    const auto pts = flat_points(X.fibers);
    const std::size_t nz = X.fibers.fibers.size();
    Ch0Units U;
    const std::size_t expected = X.kind == GluedKind::proper_curve ? X.fibers.t() : X.s() + X.fibers.t() - 1;

    if (X.kind == GluedKind::quadratic_order) {
        const QuadField& K = X.K;
        std::vector<Place> W;
        for (const auto* w : pts) W.push_back(w->place);
        auto si = s_invariants(K, W);
        const auto& base = si.units;
        const std::size_t n = base.size();
        IntMatrix ord(W.size(), n), weighted(nz, n);
        for (std::size_t i = 0; i < W.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) ord(i, j) = valuation(K, W[i], base[j]);
        std::size_t row = 0;
        for (std::size_t v = 0; v < nz; ++v)
            for (const auto& w : X.fibers.fibers[v].points) {
                for (std::size_t j = 0; j < n; ++j) weighted(v, j) += w.f * ord(row, j);
                ++row;
            }
        const IntMatrix ker = nz == 0 ? IntMatrix::identity(n) : integer_kernel(weighted);
        U.rank = ker.cols();
        U.torsion = K.roots_of_unity();
        U.fiber_ord = ord * ker;
        const std::size_t arch = K.archimedean_places();
        U.arch_log.assign(arch, std::vector<double>(U.rank, 0.0));
        for (std::size_t g = 0; g < U.rank; ++g) {
            QElem e = QElem::integer(1);
            for (std::size_t j = 0; j < n; ++j) {
                const long k = ker(j, g).get_si();
                if (k == 0) continue;
                e = qmul(K, e, qpow(K, base[j], static_cast<int>(k)));
                for (std::size_t a = 0; a < arch; ++a) U.arch_log[a][g] += k * log_abs(K, base[j], a == 0 ? 1 : -1);
            }
            U.elements.push_back(e);
            U.generators.push_back(e.to_string(K));
        }
    } else {
        // Functions on P^1 are determined up to constants by degree-zero divisors.
        std::vector<CurvePoint> T = X.removed;
        for (const auto* w : pts) T.push_back({w->label, w->degree});
        IntMatrix A(1 + nz, T.size());
        for (std::size_t j = 0; j < T.size(); ++j) A(0, j) = T[j].degree;
        std::size_t col = X.removed.size();
        for (std::size_t v = 0; v < nz; ++v)
            for (const auto& w : X.fibers.fibers[v].points) A(1 + v, col++) = w.f;
        const IntMatrix ker = integer_kernel(A);
        U.rank = ker.cols();
        U.torsion = Int(X.q) - 1;
        U.arch_ord = ker.row_range(0, X.removed.size());
        U.fiber_ord = ker.row_range(X.removed.size(), T.size());
        for (std::size_t g = 0; g < U.rank; ++g) {
            std::string s;
            for (std::size_t j = 0; j < T.size(); ++j) {
                if (ker(j, g) == 0 || T[j].label == "inf") continue;
                if (!s.empty()) s += " * ";
                s += "(" + T[j].label + ")^" + ker(j, g).get_str();
            }
            U.generators.push_back(s.empty() ? "1" : s);
        }
    }
    if (U.rank != expected) throw Error("ch0_units: rank disagrees with s + t - 1");
    return U;
}

SpecialValue regulator_RX(const GluedScheme& X, const Ch0Units& U, const RegulatorChoice& choice) {
    const std::size_t nz = X.fibers.fibers.size();
    std::vector<std::size_t> drop = choice.fiber;
    drop.resize(nz, 0);
    for (std::size_t v = 0; v < nz; ++v)
        if (drop[v] >= X.fibers.fibers[v].points.size()) throw Error("regulator_RX: dropped fiber point out of range");
    const std::size_t s = X.kind == GluedKind::quadratic_order ? X.K.archimedean_places() : X.s();
    if (s > 0 && choice.arch >= s) throw Error("regulator_RX: dropped place out of range");

    // Rows: exact rows carry an integer row times log N; archimedean rows of orders are floats.
    struct Row {
        std::vector<Int> c;
        Int norm;
    };
    std::vector<Row> exact;
    std::vector<std::vector<double>> approx;
    const std::size_t n = U.rank;
    for (std::size_t a = 0; a < s; ++a) {
        if (a == choice.arch) continue;
        if (X.kind == GluedKind::quadratic_order) {
            approx.push_back(U.arch_log.at(a));
        } else {
            Row r{{}, ipow(Int(X.q), X.removed[a].degree)};
            for (std::size_t g = 0; g < n; ++g) r.c.push_back(-U.arch_ord(a, g));
            exact.push_back(r);
        }
    }
    std::size_t row = 0;
    for (std::size_t v = 0; v < nz; ++v) {
        const auto& F = X.fibers.fibers[v];
        for (std::size_t k = 0; k < F.points.size(); ++k, ++row) {
            if (k == drop[v]) continue;
            Row r{{}, F.points[k].norm};
            for (std::size_t g = 0; g < n; ++g) r.c.push_back(-U.fiber_ord(row, g));
            exact.push_back(r);
        }
    }
    if (exact.size() + approx.size() != n) throw Error("regulator_RX: dimension mismatch");
    if (n == 0) return SpecialValue::from_exact(0, LogMonomial::one());
    if (approx.empty()) {
        IntMatrix C(n, n);
        LogMonomial logs = LogMonomial::one();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) C(i, j) = exact[i].c[j];
            logs = logs * LogMonomial::log_power(exact[i].norm.get_ui(), 1);
        }
        return SpecialValue::from_exact(0, LogMonomial(Rat(abs_int(determinant(C)))) * logs);
    }
    for (const auto& r : exact) {
        std::vector<double> d;
        const double l = std::log(r.norm.get_d());
        for (const auto& c : r.c) d.push_back(c.get_d() * l);
        approx.push_back(d);
    }
    double err = 0;
    const double v = float_regulator(approx, 1e-13, err);
    return SpecialValue::from_float(0, v, err);
}

namespace {

SpecialValue scale(const SpecialValue& v, const LogMonomial& c, int order) {
    if (v.exact) return SpecialValue::from_exact(order, c * *v.exact);
    const double f = c.evaluate();
    return SpecialValue::from_float(order, f * v.approx, std::fabs(f) * v.approx_error + std::fabs(v.approx) * c.evaluation_error());
}

}  // namespace

SpecialValue weil_special_value(const GluedScheme& X) {
    const auto G = ch0(X);
    const auto U = ch0_units(X);
    const auto R = regulator_RX(X, U);
    const int rank = static_cast<int>(U.rank);
    if (X.kind == GluedKind::proper_curve) {
        LogMonomial c(make_rat(-G.torsion_order(), U.torsion));
        c = LogMonomial(c.coefficient()) / LogMonomial::log_power(X.q, 1);
        return scale(R, c, rank - 1);
    }
    return scale(R, LogMonomial(make_rat(-G.torsion_order(), U.torsion)), rank);
}

SpecialValue jp_special_value(const GluedScheme& X) {
    if (X.kind != GluedKind::quadratic_order) throw Error("jp_special_value: needs a quadratic order");
    X.validate();
    const QuadField& K = X.K;
    const Int& f = X.conductor;
    const auto inv = field_invariants(K);
    const int omega_K = inv.omega;

    Int index = 1;
    int omega_O = 2;
    if (K.is_imaginary()) {
        omega_O = f == 1 ? omega_K : 2;
        index = omega_K / omega_O;
    } else {
        QElem e = inv.unit->eps;
        while (e.y.get_den() != 1 || e.y.get_num() % f != 0) {
            e = qmul(K, e, inv.unit->eps);
            ++index;
        }
    }
    Rat hO = Rat(inv.h * f);
    for (const auto& p : prime_divisors(f)) hO *= Rat(1) - make_rat(Int(kronecker(K.D, p)), p);
    hO /= Rat(index);
    if (hO.get_den() != 1) throw Error("jp_special_value: non-integral order class number");

    LogMonomial gamma = LogMonomial::one();
    auto g = [](const Int& N) {
        const Rat c = Rat(1) - make_rat(Int(1), N);
        return LogMonomial(c) / LogMonomial::log_power(N.get_ui(), 1);
    };
    for (const auto& v : X.fibers.fibers) {
        gamma = gamma * g(v.norm);
        for (const auto& w : v.points) gamma = gamma / g(w.norm);
    }
    const Rat lead = -hO / Rat(Int(omega_O) * f);
    const int order = static_cast<int>(X.s() + X.fibers.t()) - 1;
    const int euler_order = static_cast<int>(K.archimedean_places()) - 1 + static_cast<int>(X.fibers.t());
    if (order != euler_order) throw Error("jp_special_value: order inconsistency");
    SpecialValue RO = inv.regulator;
    if (K.is_real()) RO = SpecialValue::from_float(0, index.get_d() * inv.unit->regulator, index.get_d() * inv.unit->regulator_error);
    return scale(RO, LogMonomial(lead) * gamma, order);
}

ZetaRational glued_zeta(const GluedScheme& X) {
    if (!X.is_curve()) throw Error("glued_zeta: curves only");
    ZetaRational Z;
    Z.q = Int(X.q);
    Z.den = {Int(1), Int(-1) - Z.q, Z.q};
    std::vector<unsigned> degrees;
    for (const auto& s : X.removed) degrees.push_back(s.degree);
    for (const auto& v : X.fibers.fibers)
        for (const auto& w : v.points) degrees.push_back(w.degree);
    Z = remove_points(Z, degrees);
    for (const auto& v : X.fibers.fibers) {
        IntPoly g(v.degree + 1, 0);
        g[0] = 1;
        g[v.degree] = -1;
        Z.den = poly_mul(Z.den, g);
    }
    return Z;
}

}  // namespace weilzeta
