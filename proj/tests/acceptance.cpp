#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "weilzeta/analytic.hpp"
#include "weilzeta/det_lattice.hpp"
#include "weilzeta/lfun.hpp"

using namespace weilzeta;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0) out.require(s < limit_s, "runtime " + std::to_string(s) + " s over limit");
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", n, title, s,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    failures += !out.pass;
}

LogMonomial lm(long n, long d) { return LogMonomial(make_rat(Int(n), Int(d))); }

bool exact_is(const SpecialValue& v, int order, const LogMonomial& value) {
    return v.order == order && v.exact && *v.exact == value;
}

}  // namespace

int main() {
    criterion(1, "determinant lattice suite", 10, [](Outcome& o) {
        for (long m = 1; m <= 50; ++m)
            o.require(euler_lattice_index(ZComplex::two_term(IntMatrix{{m}}, -1)) == make_rat(Int(1), Int(m)),
                      "lattice index m=" + std::to_string(m));
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 500; ++t) {
            const auto P = random_acyclic_pair(rng);
            o.require(acyclic_duality_ratio(P.A, P.B, P.phi) == 1, "duality ratio, trial " + std::to_string(t));
        }
    });

    criterion(2, "local special-value theorem on 200 random modules", 30, [](Outcome& o) {
        std::mt19937_64 rng(17);
        const std::uint64_t norms[] = {2, 3, 4, 5, 7, 9};
        for (int t = 0; t < 200; ++t) {
            const auto M = random_frob_module(rng, 4, 50, 12);
            const std::uint64_t N = norms[rng() % 6];
            const auto sv = local_special_value(M, N);
            const auto chi = chi_point(M, N);
            const auto H0 = h0(M).group;
            const std::string tag = " (trial " + std::to_string(t) + ")";
            o.require(sv.exact && *sv.exact == chi.chi, "L* != chi" + tag);
            o.require(sv.order == -static_cast<int>(H0.free_rank) && chi.e == sv.order, "order" + tag);
            const auto [r, g] = split_one_minus_u(local_factor_poly(M));
            o.require(poly_eval(g, 1) * Rat(H0.torsion_order()) == Rat(h1_order(M)) * point_regulator(M),
                      "g(1)[H0_tor] != [H1]R" + tag);
        }
    });

    criterion(3, "constructible triviality on 100 finite modules", 0, [](Outcome& o) {
        std::mt19937_64 rng(23);
        const std::uint64_t norms[] = {2, 3, 4, 5, 7, 8, 9, 11};
        for (int t = 0; t < 100; ++t) {
            const auto M = random_finite_frob_module(rng);
            const std::uint64_t N = norms[rng() % 8];
            o.require(local_factor_poly(M) == IntPoly{1}, "local factor");
            const auto chi = chi_point(M, N);
            o.require(chi.chi == LogMonomial::one() && chi.e == 0, "chi");
            o.require(exact_is(local_special_value(M, N), 0, LogMonomial::one()), "special value");
        }
    });

    criterion(4, "imaginary quadratic class number formula, exact", 10, [](Outcome& o) {
        for (long D : fundamental_discriminants(-200, -3)) {
            const QuadField K{Int(D)};
            const auto fi = field_invariants(K);
            const auto expected = LogMonomial(make_rat(-fi.h, Int(fi.omega)));
            const auto L = LDatum::constant_z(K);
            const auto zeta0 = LogMonomial(make_rat(Int(-1), Int(2))) * LogMonomial(l_chi_at_zero(QuadCharacter(Int(D))));
            o.require(exact_is(weil_special_value(L), 0, expected), "weil D=" + std::to_string(D));
            o.require(exact_is(analytic_special_value(L), 0, expected) && zeta0 == expected,
                      "analytic D=" + std::to_string(D));
        }
        o.require(exact_is(weil_special_value(LDatum::constant_z(QuadField(Int(-4)))), 0, lm(-1, 4)), "D=-4");
    });

    criterion(5, "real quadratic fields to 1e-8", 30, [](Outcome& o) {
        for (long D : fundamental_discriminants(2, 100)) {
            const QuadField K{Int(D)};
            const auto fi = field_invariants(K);
            const auto L = LDatum::constant_z(K);
            const auto w = weil_special_value(L), a = analytic_special_value(L);
            const double lp = l_chi_derivative_at_zero(QuadCharacter(Int(D))).value;
            const double hR = Int(fi.h).get_d() * fi.regulator.approx;
            const std::string tag = " D=" + std::to_string(D);
            o.require(w.order == 1 && a.order == 1, "order" + tag);
            o.require(std::abs(-hR / 2 - w.approx) <= 1e-8, "weil value" + tag);
            o.require(std::abs(-lp / 2 - a.approx) <= 1e-8, "analytic value" + tag);
            o.require(std::abs(w.approx - a.approx) <= 1e-8, "match" + tag);
        }
    });

    criterion(6, "S-inversion over Q, Q(i), Q(sqrt 2)", 0, [](Outcome& o) {
        const std::vector<Int> primes{Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)};
        for (long D : {1L, -4L, 8L}) {
            const QuadField K = D == 1 ? QuadField::rationals() : QuadField(Int(D));
            const auto fi = field_invariants(K);
            const double hR = Int(fi.h).get_d() * fi.regulator.approx;
            const auto places = places_above_primes(K, primes);
            std::vector<std::vector<Place>> sets{{}};
            for (std::size_t i = 0; i < places.size(); ++i) {
                sets.push_back({places[i]});
                for (std::size_t j = i + 1; j < places.size(); ++j) sets.push_back({places[i], places[j]});
            }
            for (const auto& S : sets) {
                const auto L = LDatum::constant_z(K, S);
                const auto r = verify(L, 1e-8);
                const std::string tag = " " + r.object;
                o.require(r.pass(), "verify" + tag);
                if (r.weil.exact && r.analytic.exact) o.require(r.match_value == ValueMatch::exact, "exact" + tag);
                const auto si = s_invariants(K, S);
                double expected = hR;
                for (const auto& v : S) expected *= std::log(v.norm.get_d());
                o.require(std::abs(Int(si.h_S).get_d() * si.R_S.approx - expected) <= 1e-8, "h_S R_S" + tag);
            }
        }
    });

    criterion(7, "singular orders, three routes", 0, [](Outcome& o) {
        for (long D : fundamental_discriminants(-40, 40)) {
            if (D == 1) continue;
            for (long f = 2; f <= 10; ++f) {
                const auto r = verify(LDatum::constant_z(quadratic_order(Int(D), Int(f))));
                const std::string tag = " D=" + std::to_string(D) + " f=" + std::to_string(f);
                o.require(r.jp.has_value() && r.pass(), "agreement" + tag);
            }
        }
        const auto z3 = verify(LDatum::constant_z(quadratic_order(Int(-4), Int(3))));
        o.require(exact_is(z3.weil, 0, lm(-1, 2)) && exact_is(*z3.jp, 0, lm(-1, 2)) && exact_is(z3.analytic, 0, lm(-1, 2)),
                  "Z[3i]");
        const auto log5 = lm(-1, 4) * LogMonomial::log_power(5, 1);
        const auto z5 = verify(LDatum::constant_z(quadratic_order(Int(-4), Int(5))));
        o.require(exact_is(z5.weil, 1, log5) && exact_is(*z5.jp, 1, log5) && exact_is(z5.analytic, 1, log5), "Z[5i]");
    });

    criterion(8, "function-field exact suite", 60, [](Outcome& o) {
        for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
            const auto expected = LogMonomial(make_rat(Int(-1), Int(q - 1))) / LogMonomial::log_power(q, 1);
            const auto r = verify(LDatum::constant_z_curve("p1", q));
            o.require(r.pass() && exact_is(r.weil, -1, expected) && exact_is(r.analytic, -1, expected),
                      "P1 over F_" + std::to_string(q));
        }
        const auto e = verify(LDatum::constant_z_curve("elliptic_f5", 5));
        const auto inv_log5 = LogMonomial(Rat(-1)) / LogMonomial::log_power(5, 1);
        o.require(e.pass() && exact_is(e.weil, -1, inv_log5) && exact_is(e.analytic, -1, inv_log5), "elliptic F_5");
        for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
            const auto X = glued_curve("split_node", q);
            const auto r = verify(LDatum::constant_z(X));
            const auto expected = LogMonomial(make_rat(Int(-1), Int(q - 1)));
            o.require(r.pass() && r.match_value == ValueMatch::exact && exact_is(r.weil, 0, expected),
                      "split node over F_" + std::to_string(q));
        }
        for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
            const auto X = glued_curve(q == 2 ? "cusp_f2" : "cusp", q);
            const auto units = ch0_units(X);
            o.require(exact_is(regulator_RX(X, units), 0, LogMonomial::one()), "cusp R_X");
            const auto r = verify(LDatum::constant_z(X));
            o.require(r.pass() && exact_is(r.weil, -1, *weil_special_value(LDatum::constant_z_curve("p1", q)).exact),
                      "cusp matches P1 over F_" + std::to_string(q));
        }
    });

    criterion(9, "functoriality battery", 0, [](Outcome& o) {
        const auto checks = functoriality_battery(9);
        o.require(!checks.empty(), "empty battery");
        for (const auto& c : checks) o.require(c.pass, c.name + ": " + c.detail);
    });

    criterion(10, "order of vanishing over the catalog", 0, [](Outcome& o) {
        for (const auto& L : ldatum_catalog()) {
            const auto w = weil_special_value(L), a = analytic_special_value(L);
            o.require(w.order == a.order, "order " + L.describe());
            if (L.base == BaseKind::glued_scheme && L.scheme.kind != GluedKind::proper_curve) {
                const auto& X = L.scheme;
                const std::size_t expected = X.s() + X.fibers.t() - 1;
                o.require(ch0_units(X).rank == expected && w.order == static_cast<int>(expected),
                          "rank s + t - 1 for " + L.describe());
            }
        }
    });

    return failures == 0 ? 0 : 1;
}
