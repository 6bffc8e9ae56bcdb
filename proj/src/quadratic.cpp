#include "weilzeta/quadratic.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "weilzeta/logmono.hpp"

namespace weilzeta {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool squarefree(Int n) {
    n = abs_int(n);
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

double log_mpz(const Int& n) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_mpf(const mpf_class& v) {
    long e = 0;
    const double m = mpf_get_d_2exp(&e, v.get_mpf_t());
    return std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
}

constexpr unsigned kPrecisionBits = 1024;

// theta = (P + sqrt D) / Q with Q | D - P^2.
struct CfState {
    Int P, Q;
    friend bool operator==(const CfState&, const CfState&) = default;
};

Int cf_floor(const CfState& s, const Int& root) {
    if (s.Q > 0) return fdiv(s.P + root, s.Q);
    return -fdiv(s.P + root, Int(-s.Q)) - 1;
}

CfState cf_step(const Int& D, const CfState& s, const Int& a) {
    CfState n;
    n.P = a * s.Q - s.P;
    n.Q = (D - n.P * n.P) / s.Q;
    return n;
}

bool cf_reduced(const CfState& s, const Int& root) {
    return s.Q > 0 && s.P > 0 && s.P <= root && s.Q >= root - s.P + 1 && s.Q <= root + s.P;
}

// theta - a as an element of K.
QElem cf_remainder(const QuadField& K, const CfState& s, const Int& a) {
    Rat x(s.P - K.delta(), s.Q), y(2, s.Q);
    x.canonicalize();
    y.canonicalize();
    return {Rat(x - a), y};
}

constexpr long kCfStepLimit = 10000000;

std::vector<Int> reduce_form(Int a, Int b, Int c, const Int& D) {
    for (;;) {
        if (b > a || b <= -a) {
            const Int k = fdiv(a - b, 2 * a);
            b += 2 * a * k;
            c = (b * b - D) / (4 * a);
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    if (a == c && b < 0) b = -b;
    return {a, b};
}

// Primitive part J = [A, (P + sqrt D)/2] and content of I.
void primitive_part(const QuadField& K, const Ideal& I, Int& content, Int& A, Int& P) {
    content = I.c;
    A = I.a / I.c;
    P = 2 * (I.b / I.c) + K.delta();
}

Ideal canonical_ideal(const QuadField& K, const std::vector<Int>& id) {
    if (K.is_rationals()) return {};
    if (K.is_imaginary()) return {id[0], fmod((id[1] - K.delta()) / 2, id[0]), 1};
    const Int A = id[1] / 2;
    return {A, fmod((id[0] - K.delta()) / 2, A), 1};
}

}  // namespace

bool is_fundamental_discriminant(const Int& D) {
    if (D == 0 || D == 1) return false;
    const Int r = fmod(D, 4);
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    const Int m = D / 4;
    const Int rm = fmod(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
}

std::vector<long> fundamental_discriminants(long lo, long hi) {
    std::vector<long> out;
    for (long d = lo; d <= hi; ++d)
        if (is_fundamental_discriminant(Int(d))) out.push_back(d);
    return out;
}

int kronecker(const Int& D, const Int& n) { return mpz_kronecker(D.get_mpz_t(), n.get_mpz_t()); }

QuadField::QuadField(const Int& disc) : D(disc) {
    if (D != 1 && !is_fundamental_discriminant(D)) throw Error("not a fundamental discriminant: " + D.get_str());
}

int QuadField::delta() const { return static_cast<int>(fmod(D, 4).get_si()); }

Int QuadField::omega_constant() const { return (D - delta()) / 4; }

int QuadField::roots_of_unity() const {
    if (D == -4) return 4;
    if (D == -3) return 6;
    return 2;
}

std::string QuadField::name() const {
    if (is_rationals()) return "Q";
    return "Q(sqrt(" + (D % 4 == 0 ? Int(D / 4) : D).get_str() + "))";
}

std::string QElem::to_string(const QuadField& K) const {
    if (K.is_rationals() || y == 0) return x.get_str();
    std::ostringstream os;
    if (x != 0) os << x.get_str() << (y > 0 ? "+" : "");
    os << y.get_str() << "*w";
    return os.str();
}

QElem qadd(const QElem& a, const QElem& b) { return {Rat(a.x + b.x), Rat(a.y + b.y)}; }
QElem qsub(const QElem& a, const QElem& b) { return {Rat(a.x - b.x), Rat(a.y - b.y)}; }

QElem qmul(const QuadField& K, const QElem& a, const QElem& b) {
    const Rat k(K.omega_constant());
    return {Rat(a.x * b.x + a.y * b.y * k), Rat(a.x * b.y + a.y * b.x + a.y * b.y * K.delta())};
}

QElem qconj(const QuadField& K, const QElem& a) {
    if (K.is_rationals()) return a;
    return {Rat(a.x + a.y * K.delta()), Rat(-a.y)};
}

Rat qnorm(const QuadField& K, const QElem& a) {
    if (K.is_rationals()) return a.x;
    return a.x * a.x + a.x * a.y * K.delta() - a.y * a.y * Rat(K.omega_constant());
}

QElem qinv(const QuadField& K, const QElem& a) {
    const Rat n = qnorm(K, a);
    if (n == 0) throw Error("division by zero in quadratic field");
    if (K.is_rationals()) return {Rat(1 / a.x), Rat(0)};
    QElem c = qconj(K, a);
    return {Rat(c.x / n), Rat(c.y / n)};
}

QElem qdiv(const QuadField& K, const QElem& a, const QElem& b) { return qmul(K, a, qinv(K, b)); }

QElem qpow(const QuadField& K, const QElem& a, int e) {
    QElem base = e < 0 ? qinv(K, a) : a, r = QElem::integer(1);
    for (int i = 0; i < std::abs(e); ++i) r = qmul(K, r, base);
    return r;
}

double log_abs(const QuadField& K, const QElem& a, int sign) {
    if (a.is_zero()) throw Error("log of zero");
    if (K.is_rationals()) return log_mpz(a.x.get_num()) - log_mpz(a.x.get_den());
    if (K.is_imaginary()) {
        const Rat n = qnorm(K, a);
        return log_mpz(n.get_num()) - log_mpz(n.get_den());
    }
    mpf_class root(0, kPrecisionBits), v(0, kPrecisionBits);
    mpf_class d(K.D, kPrecisionBits);
    mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
    mpf_class x(a.x, kPrecisionBits), y(a.y, kPrecisionBits);
    v = x + y * (K.delta() + sign * root) / 2;
    if (v == 0) throw Error("log of zero");
    return log_mpf(v);
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "[" << a << ", " << b << "+" << c << "w]";
    return os.str();
}

Ideal lattice_ideal(const std::vector<QElem>& gens) {
    Int px = 0, py = 0, a = 0;
    for (const auto& g : gens) {
        if (!g.is_integral()) throw Error("lattice_ideal: non-integral generator");
        Int x = g.x.get_num(), y = g.y.get_num();
        if (y == 0) {
            a = gcd(a, x);
            continue;
        }
        if (py == 0) {
            px = x;
            py = y;
            continue;
        }
        Int gg, s, t;
        mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
        const Int zero_x = (y / gg) * px - (py / gg) * x;
        px = s * px + t * x;
        py = gg;
        a = gcd(a, zero_x);
    }
    if (a == 0 || py == 0) throw Error("lattice_ideal: generators do not span a full lattice");
    if (py < 0) {
        py = -py;
        px = -px;
    }
    return {abs_int(a), fmod(px, abs_int(a)), py};
}

Ideal principal_ideal(const QuadField& K, const QElem& alpha) {
    if (K.is_rationals()) return {abs_int(alpha.x.get_num()), 0, 1};
    return lattice_ideal({alpha, qmul(K, alpha, {Rat(0), Rat(1)})});
}

Ideal ideal_mul(const QuadField& K, const Ideal& I, const Ideal& J) {
    if (K.is_rationals()) return {I.a * J.a, 0, 1};
    const QElem i1{Rat(I.a), Rat(0)}, i2{Rat(I.b), Rat(I.c)};
    const QElem j1{Rat(J.a), Rat(0)}, j2{Rat(J.b), Rat(J.c)};
    return lattice_ideal({qmul(K, i1, j1), qmul(K, i1, j2), qmul(K, i2, j1), qmul(K, i2, j2)});
}

Ideal ideal_pow(const QuadField& K, const Ideal& I, unsigned e) {
    Ideal r;
    for (unsigned i = 0; i < e; ++i) r = ideal_mul(K, r, I);
    return r;
}

Ideal ideal_conj(const QuadField& K, const Ideal& I) {
    if (K.is_rationals()) return I;
    return lattice_ideal({QElem{Rat(I.a), Rat(0)}, qconj(K, {Rat(I.b), Rat(I.c)})});
}

bool ideal_contains(const Ideal& I, const QElem& alpha) {
    if (!alpha.is_integral()) return false;
    const Int x = alpha.x.get_num(), y = alpha.y.get_num();
    if (y % I.c != 0) return false;
    return (x - (y / I.c) * I.b) % I.a == 0;
}

const char* to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        default: return "ramified";
    }
}

Splitting splitting_type(const QuadField& K, const Int& p) {
    if (!is_prime_u64(p.get_ui())) throw Error("splitting_type: not a prime");
    if (K.is_rationals()) return Splitting::split;
    const int k = kronecker(K.D, p);
    if (k == 0) return Splitting::ramified;
    return k == 1 ? Splitting::split : Splitting::inert;
}

std::string Place::to_string() const {
    std::ostringstream os;
    os << "v" << p;
    if (index > 0) os << "'";
    return os.str();
}

std::vector<Place> places_above(const QuadField& K, const Int& p) {
    const Splitting s = splitting_type(K, p);
    if (K.is_rationals()) return {Place{p, 1, p, Ideal{p, 0, 1}, 0, 1}};
    if (s == Splitting::inert) return {Place{p, 2, p * p, Ideal{p, 0, p}, 0, 1}};
    std::vector<Place> out;
    const Int k = K.omega_constant();
    for (Int r = 0; r < p; ++r) {
        if (fmod(r * r - K.delta() * r - k, p) != 0) continue;
        const QElem w{Rat(0), Rat(1)}, wr{Rat(-r), Rat(1)};
        Ideal I = lattice_ideal({QElem::integer(p), {Rat(0), Rat(p)}, wr, qmul(K, wr, w)});
        out.push_back(Place{p, 1, p, I, static_cast<int>(out.size()), s == Splitting::ramified ? 2 : 1});
    }
    if (out.size() != (s == Splitting::split ? 2u : 1u)) throw Error("places_above: root count mismatch");
    return out;
}

int valuation(const QuadField& K, const Place& v, const QElem& alpha) {
    if (alpha.is_zero()) throw Error("valuation of zero");
    auto vp = [](Int n, const Int& p) {
        int e = 0;
        n = abs_int(n);
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        return e;
    };
    if (K.is_rationals()) return vp(alpha.x.get_num(), v.p) - vp(alpha.x.get_den(), v.p);
    Int den;
    mpz_lcm(den.get_mpz_t(), alpha.x.get_den_mpz_t(), alpha.y.get_den_mpz_t());
    const QElem beta{Rat(alpha.x * den), Rat(alpha.y * den)};
    int k = 0;
    Ideal power = v.ideal;
    while (ideal_contains(power, beta)) {
        ++k;
        power = ideal_mul(K, power, v.ideal);
    }
    return k - v.ramification * vp(den, v.p);
}

std::vector<Int> ideal_class_id(const QuadField& K, const Ideal& I) {
    if (K.is_rationals()) return {Int(1)};
    Int content, A, P;
    primitive_part(K, I, content, A, P);
    if (K.is_imaginary()) return reduce_form(A, P, (P * P - K.D) / (4 * A), K.D);
    const Int root = isqrt(K.D);
    CfState s{P, 2 * A};
    long steps = 0;
    while (!cf_reduced(s, root)) {
        s = cf_step(K.D, s, cf_floor(s, root));
        if (++steps > kCfStepLimit) throw Error("ideal_class_id: continued fraction did not reduce");
    }
    const CfState start = s;
    CfState best = s;
    do {
        s = cf_step(K.D, s, cf_floor(s, root));
        if (s.P < best.P || (s.P == best.P && s.Q < best.Q)) best = s;
        if (++steps > kCfStepLimit) throw Error("ideal_class_id: cycle too long");
    } while (!(s == start));
    return {best.P, best.Q};
}

std::optional<QElem> principal_generator(const QuadField& K, const Ideal& I) {
    if (K.is_rationals()) return QElem::integer(I.a);
    Int content, A, P;
    primitive_part(K, I, content, A, P);
    std::optional<QElem> gen;
    if (K.is_imaginary()) {
        auto N = [&](const QElem& u) { return qnorm(K, u); };
        auto B = [&](const QElem& u, const QElem& v) { return Rat((N(qadd(u, v)) - N(u) - N(v)) / 2); };
        QElem e1 = QElem::integer(A), e2{Rat((P - K.delta()) / 2), Rat(1)};
        if (N(e2) < N(e1)) std::swap(e1, e2);
        for (;;) {
            const Rat t = B(e1, e2) / N(e1);
            const Int m = fdiv(2 * t.get_num() + t.get_den(), 2 * t.get_den());
            e2 = qsub(e2, {Rat(m * e1.x), Rat(m * e1.y)});
            if (N(e2) < N(e1))
                std::swap(e1, e2);
            else
                break;
        }
        if (N(e1) == Rat(A)) gen = e1;
    } else {
        const Int root = isqrt(K.D);
        CfState s{P, 2 * A};
        QElem mu = QElem::integer(1);
        std::optional<CfState> first_reduced;
        for (long steps = 0;; ++steps) {
            if (abs_int(s.Q) == 2) {
                gen = qmul(K, mu, QElem::integer(A));
                break;
            }
            if (cf_reduced(s, root)) {
                if (!first_reduced)
                    first_reduced = s;
                else if (s == *first_reduced)
                    break;
            }
            if (steps > kCfStepLimit) throw Error("principal_generator: continued fraction did not terminate");
            const Int a = cf_floor(s, root);
            mu = qmul(K, mu, cf_remainder(K, s, a));
            s = cf_step(K.D, s, a);
        }
    }
    if (!gen) return std::nullopt;
    QElem g = qmul(K, *gen, QElem::integer(content));
    if (!(principal_ideal(K, g) == I)) throw Error("principal_generator: internal check failed");
    return g;
}

std::vector<Int> ClassGroup::class_id(const QuadField& K, const Ideal& I) const { return ideal_class_id(K, I); }

std::vector<Int> ClassGroup::dlog(const QuadField& K, const Ideal& I) const {
    const auto id = class_id(K, I);
    for (const auto& [key, exps] : table) {
        if (key != id) continue;
        if (exps.empty()) return {};
        Subquotient s(IntMatrix::identity(exps.size()), relations);
        return s.coordinates(exps);
    }
    throw Error("class_group: class not found in table");
}

ClassGroup class_group(const QuadField& K, const Int& bound) {
    ClassGroup cg;
    if (K.is_rationals()) {
        cg.table.push_back({{Int(1)}, {}});
        cg.representatives.push_back({Int(1)});
        return cg;
    }
    if (abs_int(K.D) > bound) throw Error("class_group: |D| exceeds the configured bound");

    struct Elem {
        std::vector<Int> id;
        std::vector<Int> exps;
        Ideal rep;
    };
    std::vector<Elem> H;
    std::map<std::vector<Int>, std::size_t> index;
    auto id_of = [&](const Ideal& I) { return ideal_class_id(K, I); };
    {
        auto id = id_of(Ideal{});
        H.push_back({id, {}, canonical_ideal(K, id)});
        index[id] = 0;
    }
    std::vector<std::vector<Int>> rel_cols;

    const Int limit = isqrt(abs_int(K.D)) + 1;
    for (Int p = 2; p <= limit; ++p) {
        if (!is_prime_u64(p.get_ui()) || splitting_type(K, p) == Splitting::inert) continue;
        for (const auto& v : places_above(K, p)) {
            const auto vid = id_of(v.ideal);
            if (index.count(vid)) continue;
            const Ideal vrep = canonical_ideal(K, vid);
            // Smallest m with [v]^m in the current subgroup.
            std::vector<Int> cur_id = vid;
            unsigned m = 1;
            while (!index.count(cur_id)) {
                cur_id = id_of(ideal_mul(K, canonical_ideal(K, cur_id), vrep));
                ++m;
            }
            const std::size_t k = cg.generator_ideals.size();
            cg.generator_ideals.push_back(v.ideal);
            for (auto& e : H) e.exps.push_back(0);
            for (auto& col : rel_cols) col.push_back(0);
            std::vector<Int> col = H[index[cur_id]].exps;
            for (auto& x : col) x = -x;
            col[k] += m;
            rel_cols.push_back(col);

            std::vector<Elem> next;
            std::map<std::vector<Int>, std::size_t> next_index;
            for (const auto& e : H) {
                Ideal r = e.rep;
                std::vector<Int> rid = e.id;
                for (unsigned i = 0; i < m; ++i) {
                    std::vector<Int> ex = e.exps;
                    ex[k] = i;
                    next_index[rid] = next.size();
                    next.push_back({rid, ex, r});
                    rid = id_of(ideal_mul(K, r, vrep));
                    r = canonical_ideal(K, rid);
                }
            }
            H = std::move(next);
            index = std::move(next_index);
        }
    }
    const std::size_t k = cg.generator_ideals.size();
    cg.relations = IntMatrix(k, rel_cols.size());
    for (std::size_t j = 0; j < rel_cols.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) cg.relations(i, j) = rel_cols[j][i];
    cg.group = k == 0 ? FgAb{} : Subquotient(IntMatrix::identity(k), cg.relations).group();
    cg.order = static_cast<long>(H.size());
    if (cg.group.torsion_order() != cg.order || !cg.group.is_finite())
        throw Error("class_group: inconsistent group structure");
    for (const auto& e : H) {
        cg.table.push_back({e.id, e.exps});
        cg.representatives.push_back(e.id);
    }
    return cg;
}

FundamentalUnit fundamental_unit(const QuadField& K) {
    if (!K.is_real()) throw Error("fundamental_unit: field is not real quadratic");
    const Int root = isqrt(K.D);
    const Int P0 = ((root - K.delta()) % 2 == 0) ? root : Int(root - 1);
    const CfState start{P0, 2};
    CfState s = start;
    QElem mu = QElem::integer(1);
    long steps = 0;
    do {
        const Int a = cf_floor(s, root);
        mu = qmul(K, mu, cf_remainder(K, s, a));
        s = cf_step(K.D, s, a);
        if (++steps > kCfStepLimit) throw Error("fundamental_unit: period too long");
    } while (!(s == start));
    FundamentalUnit u;
    u.eps = qinv(K, mu);
    if (!u.eps.is_integral()) throw Error("fundamental_unit: non-integral unit");
    u.x = u.eps.x.get_num();
    u.y = u.eps.y.get_num();
    u.norm = qnorm(K, u.eps) > 0 ? 1 : -1;
    u.regulator = log_abs(K, u.eps, 1);
    u.regulator_error = 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, u.regulator);
    return u;
}

FieldInvariants field_invariants(const QuadField& K) {
    FieldInvariants f;
    auto cg = class_group(K);
    f.h = cg.order;
    f.class_group = cg.group;
    f.omega = K.roots_of_unity();
    if (K.is_real()) {
        f.unit = fundamental_unit(K);
        f.regulator = SpecialValue::from_float(0, f.unit->regulator, f.unit->regulator_error);
    } else {
        f.regulator = SpecialValue::from_exact(0, LogMonomial::one());
    }
    return f;
}

SInvariants s_invariants(const QuadField& K, const std::vector<Place>& S_f, std::size_t dropped) {
    SInvariants out;
    out.omega = K.roots_of_unity();
    out.places = S_f;
    for (std::size_t i = 0; i < S_f.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (S_f[i] == S_f[j]) throw Error("s_invariants: repeated place");
    const std::size_t arch = K.archimedean_places();
    if (dropped >= arch + S_f.size()) throw Error("s_invariants: dropped place out of range");

    auto cg = class_group(K);
    out.h = cg.order;
    if (K.is_real()) out.units.push_back(fundamental_unit(K).eps);

    // Successive quotients of the class group by the classes of S_f.
    struct Elem {
        std::vector<Int> id;
        std::vector<Int> exps;
        Ideal rep;
    };
    auto id_of = [&](const Ideal& I) { return ideal_class_id(K, I); };
    std::vector<Elem> H{{id_of(Ideal{}), {}, Ideal{}}};
    std::map<std::vector<Int>, std::size_t> index{{H[0].id, 0}};
    for (std::size_t j = 0; j < S_f.size(); ++j) {
        const Place& v = S_f[j];
        Ideal power = v.ideal;
        unsigned m = 1;
        while (!index.count(id_of(power))) {
            power = ideal_mul(K, power, v.ideal);
            ++m;
        }
        const auto& k = H[index[id_of(power)]].exps;
        Ideal J = power;
        Int denom = 1;
        for (std::size_t i = 0; i < j; ++i) {
            const unsigned e = static_cast<unsigned>(k[i].get_ui());
            if (e == 0) continue;
            J = ideal_mul(K, J, ideal_pow(K, ideal_conj(K, S_f[i].ideal), e));
            Int n;
            mpz_pow_ui(n.get_mpz_t(), S_f[i].norm.get_mpz_t(), e);
            denom *= n;
        }
        auto beta = principal_generator(K, J);
        if (!beta) throw Error("s_invariants: principal generator search failed");
        out.units.push_back(qdiv(K, *beta, QElem::integer(denom)));

        std::vector<Elem> next;
        std::map<std::vector<Int>, std::size_t> next_index;
        for (const auto& e : H) {
            Ideal r = e.rep;
            for (unsigned i = 0; i < m; ++i) {
                std::vector<Int> ex = e.exps;
                ex.push_back(i);
                auto rid = id_of(r);
                next_index[rid] = next.size();
                next.push_back({rid, ex, r});
                r = ideal_mul(K, r, v.ideal);
                r = K.is_rationals() ? Ideal{} : canonical_ideal(K, id_of(r));
            }
        }
        H = std::move(next);
        index = std::move(next_index);
    }
    out.h_S = out.h / Int(static_cast<long>(H.size()));

    const std::size_t n = out.units.size();
    if (arch == 1 && dropped == 0) {
        IntMatrix ord(n, n);
        LogMonomial logs = LogMonomial::one();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) ord(i, j) = valuation(K, S_f[i], out.units[j]);
            logs = logs * LogMonomial::log_power(S_f[i].norm.get_ui(), 1);
        }
        const Int d = abs_int(determinant(ord));
        out.R_S = SpecialValue::from_exact(0, LogMonomial(Rat(d)) * logs);
        return out;
    }
    std::vector<std::vector<double>> m;
    for (std::size_t place = 0; place < arch + S_f.size(); ++place) {
        if (place == dropped) continue;
        std::vector<double> row;
        for (const auto& u : out.units) {
            if (place < arch)
                row.push_back(log_abs(K, u, place == 0 ? 1 : -1));
            else {
                const Place& v = S_f[place - arch];
                row.push_back(-valuation(K, v, u) * std::log(v.norm.get_d()));
            }
        }
        m.push_back(row);
    }
    double err = 0;
    const double r = float_regulator(m, 1e-13, err);
    out.R_S = SpecialValue::from_float(0, r, err);
    return out;
}

}  // namespace weilzeta
