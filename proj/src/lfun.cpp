#include "weilzeta/lfun.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "weilzeta/analytic.hpp"
#include "weilzeta/logmono.hpp"

namespace weilzeta {

namespace {

Int ipow(const Int& b, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

SpecialValue with_order(SpecialValue v, int order) {
    v.order = order;
    return v;
}

SpecialValue times(const LogMonomial& c, const SpecialValue& v) { return SpecialValue::from_exact(0, c) * v; }

std::string primes_string(const std::vector<Int>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + ps[i].get_str();
    return s + "}";
}

std::string places_string(const std::vector<Place>& S) {
    std::string s = "{";
    for (std::size_t i = 0; i < S.size(); ++i) s += (i ? ", " : "") + S[i].to_string();
    return s + "}";
}

std::vector<Int> rational_primes(const std::vector<Place>& S) {
    std::vector<Int> out;
    for (const auto& v : S) out.push_back(v.p);
    return out;
}

const CatalogCurve& smooth_curve(const std::string& name, std::uint64_t q) {
    static std::map<std::pair<std::string, std::uint64_t>, CatalogCurve> cache;
    auto key = std::make_pair(name, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, catalog_curve(name, q)).first;
    return it->second;
}

const ZetaRational& curve_zeta_cached(const std::string& name, std::uint64_t q) {
    static std::map<std::pair<std::string, std::uint64_t>, ZetaRational> cache;
    auto key = std::make_pair(name, q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, curve_zeta(smooth_curve(name, q))).first;
    return it->second;
}

// -h / (omega log q^c) for a smooth proper curve of genus <= 1 over the constant field F_{q^c}.
SpecialValue proper_curve_weil(const CatalogCurve& C, unsigned c) {
    if (!C.smooth_proper) throw Error("LDatum: " + C.model.name + " is not smooth and proper");
    Int h = 1;
    if (C.genus == 1)
        h = count_points(C.model, c);
    else if (C.genus > 1)
        throw Error("LDatum: Pic^0 order only available for genus <= 1");
    const Int qc = ipow(Int(C.model.q), c);
    return SpecialValue::from_exact(-1, LogMonomial(make_rat(-h, qc - 1)) / LogMonomial::log_power(qc.get_ui(), 1));
}

SpecialValue curve_twist_value(const std::string& name, std::uint64_t q, bool pushforward) {
    const auto& C = smooth_curve(name, q);
    if (C.model.constant_degree != 1) throw Error("LDatum: base curve must have constant field F_q");
    const auto& Z = curve_zeta_cached(name, q);
    const std::size_t a = C.deg_num, b = C.deg_den;
    const std::size_t B = pushforward ? 2 * (a + b) + 1 : a + b + 1;
    const auto N = counts_from_zeta(Z, B);
    std::vector<Int> twisted(B);
    for (std::size_t n = 1; n <= B; ++n) {
        if (pushforward)
            twisted[n - 1] = n % 2 == 0 ? Int(2 * N[n - 1]) : Int(0);
        else
            twisted[n - 1] = n % 2 == 0 ? N[n - 1] : Int(-N[n - 1]);
    }
    const auto Zt = pushforward ? zeta_from_counts(twisted, 2 * a, 2 * b, Int(q)) : zeta_from_counts(twisted, a, b, Int(q));
    return zeta_special_value(Zt);
}

SpecialValue number_field_weil(const QuadField& K, const std::vector<Place>& S) {
    const auto si = s_invariants(K, S);
    const int order = static_cast<int>(K.archimedean_places() + S.size()) - 1;
    return with_order(times(LogMonomial(make_rat(-si.h_S, Int(si.omega))), si.R_S), order);
}

void check_tolerance_inputs(const SpecialValue& v) {
    if (!std::isfinite(v.approx)) throw Error("special value is not finite");
}

}  // namespace

const char* to_string(CoefficientKind k) {
    switch (k) {
        case CoefficientKind::constant_z: return "ConstantZ";
        case CoefficientKind::skyscraper: return "Skyscraper";
        case CoefficientKind::pushforward_constant: return "PushforwardConstant";
        case CoefficientKind::quotient_chi: return "QuotientChi";
        case CoefficientKind::direct_sum: return "DirectSum";
    }
    return "?";
}

std::vector<Place> places_above_primes(const QuadField& K, const std::vector<Int>& primes) {
    std::vector<Place> out;
    for (const auto& p : primes)
        for (const auto& v : places_above(K, p)) out.push_back(v);
    return out;
}

LDatum LDatum::constant_z(const QuadField& K, const std::vector<Place>& S) {
    LDatum L;
    L.K = K;
    L.s_places = S;
    return L;
}

LDatum LDatum::constant_z(const GluedScheme& X) {
    LDatum L;
    L.base = BaseKind::glued_scheme;
    L.scheme = X;
    return L;
}

LDatum LDatum::constant_z_curve(const std::string& name, std::uint64_t q) {
    LDatum L;
    L.base = BaseKind::curve;
    L.curve = name;
    L.q = q;
    return L;
}

LDatum LDatum::skyscraper(const FrobModule& M, std::uint64_t norm) {
    M.validate();
    if (norm < 2) throw Error("LDatum: residue field size must be at least 2");
    LDatum L;
    L.coefficient = CoefficientKind::skyscraper;
    L.base = BaseKind::closed_point;
    L.module = M;
    L.norm = norm;
    return L;
}

LDatum LDatum::pushforward(const Int& D, const std::vector<Int>& s_primes) {
    LDatum L;
    L.coefficient = CoefficientKind::pushforward_constant;
    L.K = QuadField::rationals();
    L.s_places = places_above_primes(L.K, s_primes);
    L.cover = D;
    (void)QuadField{D};
    return L;
}

LDatum LDatum::pushforward_curve(const std::string& name, std::uint64_t q) {
    LDatum L = constant_z_curve(name, q);
    L.coefficient = CoefficientKind::pushforward_constant;
    L.cover = 2;
    return L;
}

LDatum LDatum::quotient_chi(const Int& D, const std::vector<Int>& s_primes) {
    LDatum L = pushforward(D, s_primes);
    L.coefficient = CoefficientKind::quotient_chi;
    return L;
}

LDatum LDatum::quotient_chi_curve(const std::string& name, std::uint64_t q) {
    LDatum L = pushforward_curve(name, q);
    L.coefficient = CoefficientKind::quotient_chi;
    return L;
}

LDatum LDatum::direct_sum(const std::vector<LDatum>& parts) {
    if (parts.empty()) throw Error("LDatum: empty direct sum");
    LDatum L;
    L.coefficient = CoefficientKind::direct_sum;
    L.base = BaseKind::none;
    L.parts = parts;
    return L;
}

int LDatum::generic_rank() const {
    switch (coefficient) {
        case CoefficientKind::constant_z:
        case CoefficientKind::pushforward_constant: return 1;
        case CoefficientKind::skyscraper:
        case CoefficientKind::quotient_chi: return 0;
        case CoefficientKind::direct_sum: {
            int r = 0;
            for (const auto& p : parts) r += p.generic_rank();
            return r;
        }
    }
    return 0;
}

std::string LDatum::describe() const {
    std::ostringstream os;
    switch (coefficient) {
        case CoefficientKind::constant_z:
            if (base == BaseKind::glued_scheme)
                os << "Z on " << scheme.name << (scheme.is_curve() ? " over F_" + std::to_string(scheme.q) : "");
            else if (base == BaseKind::curve)
                os << "Z on " << curve << " over F_" << q;
            else
                os << "Z on " << K.name() << " minus " << places_string(s_places);
            break;
        case CoefficientKind::skyscraper:
            os << "skyscraper of rank " << module.generators() << " (Frobenius order " << module.order << ") at N(v) = "
               << norm;
            break;
        case CoefficientKind::pushforward_constant:
        case CoefficientKind::quotient_chi: {
            const char* what = coefficient == CoefficientKind::quotient_chi ? "pi_*Z / Z" : "pi_*Z";
            if (base == BaseKind::curve)
                os << what << " for the constant-field extension of degree 2 of " << curve << " over F_" << q;
            else
                os << what << " for Q(sqrt(" << cover << "))/Q, S = " << primes_string(rational_primes(s_places));
            break;
        }
        case CoefficientKind::direct_sum:
            os << "direct sum [";
            for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "; " : "") << parts[i].describe();
            os << "]";
            break;
    }
    return os.str();
}

SpecialValue weil_special_value(const LDatum& L) {
    switch (L.coefficient) {
        case CoefficientKind::constant_z:
            if (L.base == BaseKind::glued_scheme) return weil_special_value(L.scheme);
            if (L.base == BaseKind::curve) {
                const auto& C = smooth_curve(L.curve, L.q);
                return proper_curve_weil(C, C.model.constant_degree);
            }
            return number_field_weil(L.K, L.s_places);
        case CoefficientKind::skyscraper: {
            const auto pe = chi_point(L.module, L.norm);
            return SpecialValue::from_exact(pe.e, pe.chi);
        }
        case CoefficientKind::pushforward_constant:
            if (L.base == BaseKind::curve) {
                const auto& C = smooth_curve(L.curve, L.q);
                if (C.model.constant_degree != 1) throw Error("LDatum: base curve must have constant field F_q");
                return proper_curve_weil(C, 2);
            } else {
                const QuadField E(L.cover);
                return number_field_weil(E, places_above_primes(E, rational_primes(L.s_places)));
            }
        case CoefficientKind::quotient_chi: {
            LDatum push = L, base = L;
            push.coefficient = CoefficientKind::pushforward_constant;
            base.coefficient = CoefficientKind::constant_z;
            return weil_special_value(push) / weil_special_value(base);
        }
        case CoefficientKind::direct_sum: {
            SpecialValue v = SpecialValue::from_exact(0, LogMonomial::one());
            for (const auto& p : L.parts) v = v * weil_special_value(p);
            return v;
        }
    }
    throw Error("LDatum: unsupported combination");
}

SpecialValue analytic_special_value(const LDatum& L) {
    switch (L.coefficient) {
        case CoefficientKind::constant_z:
            if (L.base == BaseKind::glued_scheme) {
                const auto& X = L.scheme;
                if (X.is_curve()) return zeta_special_value(curve_zeta(catalog_curve(X.name, X.q)));
                // zeta_X = zeta_K * prod_v prod_{w|v} (1 - N(w)^-s) / (1 - N(v)^-s)
                std::vector<Place> W;
                LogMonomial singular = LogMonomial::one();
                for (const auto& v : X.fibers.fibers) {
                    for (const auto& w : v.points) W.push_back(w.place);
                    singular = singular * LogMonomial::log_power(v.norm.get_ui(), 1);
                }
                const int z = static_cast<int>(X.fibers.fibers.size());
                return dedekind_zeta_star(X.K, W) / SpecialValue::from_exact(z, singular);
            }
            if (L.base == BaseKind::curve) return zeta_special_value(curve_zeta_cached(L.curve, L.q));
            return dedekind_zeta_star(L.K, L.s_places);
        case CoefficientKind::skyscraper: return local_special_value(L.module, L.norm);
        case CoefficientKind::pushforward_constant:
            if (L.base == BaseKind::curve) return curve_twist_value(L.curve, L.q, true);
            else {
                const QuadField E(L.cover);
                return dedekind_zeta_star(E, places_above_primes(E, rational_primes(L.s_places)));
            }
        case CoefficientKind::quotient_chi:
            if (L.base == BaseKind::curve) return curve_twist_value(L.curve, L.q, false);
            return l_chi_special_value(QuadCharacter(L.cover), rational_primes(L.s_places));
        case CoefficientKind::direct_sum: {
            SpecialValue v = SpecialValue::from_exact(0, LogMonomial::one());
            for (const auto& p : L.parts) v = v * analytic_special_value(p);
            return v;
        }
    }
    throw Error("LDatum: unsupported combination");
}

bool same_special_value(const SpecialValue& a, const SpecialValue& b, double tolerance) {
    return a.order == b.order && compare_values(a, b, tolerance) != ValueMatch::mismatch;
}

Report verify(const LDatum& L, double tolerance) {
    Report r;
    r.object = L.describe();
    r.weil = weil_special_value(L);
    r.analytic = analytic_special_value(L);
    check_tolerance_inputs(r.weil);
    check_tolerance_inputs(r.analytic);
    if (L.coefficient == CoefficientKind::constant_z && L.base == BaseKind::glued_scheme && !L.scheme.is_curve())
        r.jp = jp_special_value(L.scheme);
    r.match_order = r.weil.order == r.analytic.order && (!r.jp || r.jp->order == r.weil.order);
    r.match_value = compare_values(r.weil, r.analytic, tolerance);
    if (r.jp) {
        const auto m = compare_values(*r.jp, r.weil, tolerance);
        if (m == ValueMatch::mismatch || (m == ValueMatch::tolerance && r.match_value == ValueMatch::exact))
            r.match_value = m;
    }
    const bool negative = r.weil.exact ? r.weil.exact->coefficient() < 0 : r.weil.approx < 0;
    r.sign_ok = negative == (L.generic_rank() % 2 != 0);
    return r;
}

nlohmann::json to_json(const SpecialValue& v) {
    nlohmann::json j;
    j["order"] = v.order;
    if (v.exact) {
        j["rational"] = v.exact->coefficient().get_str();
        nlohmann::json logs = nlohmann::json::object();
        for (const auto& [p, e] : v.exact->exponents()) logs[std::to_string(p)] = e;
        j["logs"] = logs;
    } else {
        j["rational"] = nullptr;
        j["logs"] = nullptr;
    }
    j["float"] = v.approx;
    j["err"] = v.approx_error;
    return j;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["object"] = r.object;
    j["order"] = {{"weil", r.weil.order}, {"analytic", r.analytic.order}, {"match", r.match_order}};
    j["value"] = {{"weil", to_json(r.weil)}, {"analytic", to_json(r.analytic)}, {"match", to_string(r.match_value)}};
    if (r.jp) j["value"]["jordan_poonen"] = to_json(*r.jp);
    j["sign"] = r.sign_ok;
    j["pass"] = r.pass();
    return j;
}

std::vector<LDatum> ldatum_catalog() {
    std::vector<LDatum> out;
    const std::vector<Int> small{Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)};
    // Z over rings of S-integers with |S_f| <= 2, p <= 13.
    for (long D : {1L, -4L, 8L}) {
        const QuadField K = D == 1 ? QuadField::rationals() : QuadField(Int(D));
        const auto places = places_above_primes(K, small);
        out.push_back(LDatum::constant_z(K));
        for (std::size_t i = 0; i < places.size(); ++i) {
            out.push_back(LDatum::constant_z(K, {places[i]}));
            for (std::size_t j = i + 1; j < places.size(); ++j) out.push_back(LDatum::constant_z(K, {places[i], places[j]}));
        }
    }
    for (long D : fundamental_discriminants(-40, 40))
        if (D != 1 && D != -4 && D != 8) out.push_back(LDatum::constant_z(QuadField(Int(D))));
    // Orders.
    for (long D : {-4L, -3L, -7L, -8L, 5L, 8L, 12L, 13L})
        for (long f : {2L, 3L, 5L, 6L, 10L}) out.push_back(LDatum::constant_z(quadratic_order(Int(D), Int(f))));
    // Curves.
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) out.push_back(LDatum::constant_z_curve("p1", q));
    out.push_back(LDatum::constant_z_curve("elliptic_f5", 5));
    out.push_back(LDatum::constant_z_curve("elliptic_f2", 2));
    out.push_back(LDatum::constant_z_curve("p1_over_fq2", 3));
    for (const auto& name : glued_curve_names())
        for (std::uint64_t q : {2u, 3u, 5u, 7u}) {
            const bool odd_only = name == "split_node" || name == "nonsplit_node" || name == "affine_node";
            if ((odd_only && q == 2) || (name == "cusp_f2" && q != 2)) continue;
            out.push_back(LDatum::constant_z(glued_curve(name, q)));
        }
    // Closed points.
    for (std::uint64_t N : {2u, 3u, 4u, 5u, 7u, 9u}) {
        out.push_back(LDatum::skyscraper(FrobModule::trivial_z(), N));
        out.push_back(LDatum::skyscraper(FrobModule::cyclic(Int(6), Int(5), 2), N));
        out.push_back(LDatum::skyscraper(FrobModule::free(IntMatrix{{0, 1}, {1, 0}}, 2), N));
    }
    // Quadratic covers and their characters.
    for (long D : {-4L, -3L, -7L, 5L, 8L, 12L})
        for (const auto& S : std::vector<std::vector<Int>>{{}, {Int(2)}, {Int(3)}, {Int(2), Int(3)}}) {
            out.push_back(LDatum::pushforward(Int(D), S));
            out.push_back(LDatum::quotient_chi(Int(D), S));
        }
    for (auto [name, q] : {std::pair{"p1", 2u}, {"p1", 3u}, {"p1", 5u}, {"elliptic_f5", 5u}, {"elliptic_f2", 2u}}) {
        out.push_back(LDatum::pushforward_curve(name, q));
        out.push_back(LDatum::quotient_chi_curve(name, q));
    }
    // Sums.
    out.push_back(LDatum::direct_sum({LDatum::constant_z(QuadField::rationals()), LDatum::quotient_chi(Int(-4))}));
    out.push_back(LDatum::direct_sum({LDatum::pushforward(Int(5)), LDatum::quotient_chi(Int(-3), {Int(2)})}));
    out.push_back(LDatum::direct_sum(
        {LDatum::skyscraper(FrobModule::trivial_z(), 3), LDatum::skyscraper(FrobModule::cyclic(Int(4), Int(3), 2), 5)}));
    return out;
}

std::vector<LDatum> random_skyscrapers(std::mt19937_64& rng, std::size_t count) {
    static const std::uint64_t norms[] = {2, 3, 4, 5, 7, 9};
    std::vector<LDatum> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto M = random_frob_module(rng);
        out.push_back(LDatum::skyscraper(M, norms[rng() % 6]));
    }
    return out;
}

std::vector<CheckResult> functoriality_battery(std::uint64_t seed, double tolerance) {
    std::vector<CheckResult> out;
    auto both = [&](const std::string& name, const LDatum& lhs, const LDatum& rhs) {
        const auto wl = weil_special_value(lhs), wr = weil_special_value(rhs);
        out.push_back({name + " [weil]", same_special_value(wl, wr, tolerance), wl.to_string() + " vs " + wr.to_string()});
        const auto al = analytic_special_value(lhs), ar = analytic_special_value(rhs);
        out.push_back(
            {name + " [analytic]", same_special_value(al, ar, tolerance), al.to_string() + " vs " + ar.to_string()});
    };
    const std::vector<std::vector<Int>> prime_sets{{}, {Int(2)}, {Int(3)}, {Int(2), Int(3)}, {Int(5)}};

    // Pushforward invariance.
    for (long D : {-4L, -3L, -7L, 8L, 5L, 12L, -20L})
        for (const auto& S : prime_sets) {
            const QuadField E{Int(D)};
            both("pushforward D=" + std::to_string(D) + " S=" + primes_string(S), LDatum::pushforward(Int(D), S),
                 LDatum::constant_z(E, places_above_primes(E, S)));
        }
    for (std::uint64_t q : {2u, 3u, 5u})
        both("pushforward p1 F_" + std::to_string(q), LDatum::pushforward_curve("p1", q),
             LDatum::constant_z_curve("p1_over_fq2", q));

    // Open immersion: U minus v, and the skyscraper at v.
    for (long D : {1L, -4L, 8L, -3L}) {
        const QuadField K = D == 1 ? QuadField::rationals() : QuadField(Int(D));
        const auto places = places_above_primes(K, {Int(2), Int(3), Int(5), Int(7)});
        for (std::size_t i = 0; i < places.size(); ++i)
            for (std::size_t j = 0; j < places.size(); ++j) {
                if (i == j) continue;
                const auto& v = places[j];
                both("open immersion " + K.name() + " S=" + places_string({places[i]}) + " v=" + v.to_string(),
                     LDatum::constant_z(K, {places[i]}),
                     LDatum::direct_sum({LDatum::constant_z(K, {places[i], v}),
                                         LDatum::skyscraper(FrobModule::trivial_z(), v.norm.get_ui())}));
            }
    }
    for (std::uint64_t q : {2u, 3u, 5u})
        both("open immersion p1 F_" + std::to_string(q), LDatum::constant_z_curve("p1", q),
             LDatum::direct_sum({LDatum::constant_z(glued_curve("p1_minus_point", q)),
                                 LDatum::skyscraper(FrobModule::trivial_z(), q)}));

    // Induction invariance.
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const auto M = random_frob_module(rng, 3, 30, 6);
        const std::uint64_t n = 2 + rng() % 2, N = 2 + rng() % 2;
        std::uint64_t Nn = 1;
        for (std::uint64_t k = 0; k < n; ++k) Nn *= N;
        both("induction n=" + std::to_string(n) + " N=" + std::to_string(N), LDatum::skyscraper(induce(M, n), N),
             LDatum::skyscraper(M, Nn));
    }

    // Multiplicativity: pi_*Z = Z (+) Z(chi).
    for (long D : {-4L, -3L, -7L, 8L, 5L, 12L, -20L})
        for (const auto& S : prime_sets) {
            const QuadField Q = QuadField::rationals();
            both("multiplicativity D=" + std::to_string(D) + " S=" + primes_string(S), LDatum::pushforward(Int(D), S),
                 LDatum::direct_sum(
                     {LDatum::constant_z(Q, places_above_primes(Q, S)), LDatum::quotient_chi(Int(D), S)}));
        }
    for (auto [name, q] : {std::pair{"p1", 2u}, {"p1", 3u}, {"p1", 5u}, {"elliptic_f5", 5u}, {"elliptic_f2", 2u}})
        both(std::string("multiplicativity ") + name + " F_" + std::to_string(q), LDatum::pushforward_curve(name, q),
             LDatum::direct_sum({LDatum::constant_z_curve(name, q), LDatum::quotient_chi_curve(name, q)}));
    return out;
}

}  // namespace weilzeta
