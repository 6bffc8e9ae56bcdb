#include <cmath>

#include "doctest.h"
#include "weilzeta/analytic.hpp"

using namespace weilzeta;

TEST_CASE("L(0, chi) for imaginary fields is h / (w/2)") {
    for (long D : fundamental_discriminants(-400, -3)) {
        QuadField K{Int(D)};
        auto inv = field_invariants(K);
        Rat expected(2 * inv.h, Int(inv.omega));
        expected.canonicalize();
        CHECK(l_chi_at_zero(QuadCharacter(Int(D))) == expected);
    }
}

TEST_CASE("log_gamma agrees with lgamma") {
    for (double x : {0.01, 0.125, 0.5, 0.9, 1.0, 2.5, 7.3, 40.0}) {
        auto g = log_gamma(x);
        CHECK(std::fabs(g.value - std::lgamma(x)) < 1e-12);
        CHECK(g.error < 1e-11);
    }
    CHECK(std::fabs(log_gamma(0.5).value - 0.5 * std::log(std::acos(-1.0))) < 1e-14);
    CHECK_THROWS_AS(log_gamma(0.0), Error);
}

TEST_CASE("Hurwitz zeta special values") {
    CHECK(std::fabs(hurwitz_zeta(0.0, 0.3).value - 0.2) < 1e-12);
    CHECK(std::fabs(hurwitz_zeta(2.0, 1.0).value - std::pow(std::acos(-1.0), 2) / 6) < 1e-12);
    CHECK(std::fabs(hurwitz_zeta(-1.0, 1.0).value + 1.0 / 12) < 1e-12);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), Error);
}

TEST_CASE("L'(0, chi) for real fields is h log eps") {
    for (long D : fundamental_discriminants(5, 200)) {
        QuadField K{Int(D)};
        auto inv = field_invariants(K);
        auto d = l_chi_derivative_at_zero(QuadCharacter(Int(D)));
        const double expected = inv.h.get_d() * inv.unit->regulator;
        CHECK(std::fabs(d.value - expected) < 1e-9);
        CHECK(std::fabs(d.value - expected) <= d.error + inv.unit->regulator_error * inv.h.get_d() + 1e-12);
    }
}

TEST_CASE("numeric oracle matches closed forms at s = 0") {
    for (long D : {-3L, -4L, -7L, -23L, -84L, 5L, 8L, 12L, 13L, 40L}) {
        QuadCharacter chi{Int(D)};
        auto l0 = numeric_l_oracle(chi, 0.0);
        if (chi.is_odd()) {
            CHECK(std::fabs(l0.value - l_chi_at_zero(chi).get_d()) < 1e-10);
        } else {
            CHECK(std::fabs(l0.value) < 1e-10);
            const double h = 1e-4;
            const double deriv = (numeric_l_oracle(chi, h).value - numeric_l_oracle(chi, -h).value) / (2 * h);
            CHECK(std::fabs(deriv - l_chi_derivative_at_zero(chi).value) < 1e-6);
        }
    }
    CHECK_THROWS_AS(numeric_l_oracle(QuadCharacter(Int(5)), 0.9), Error);
}

TEST_CASE("S-modified L-values") {
    QuadCharacter chi{Int(-4)};
    auto v = l_chi_special_value(chi, {Int(5), Int(3), Int(2)});
    CHECK(v.order == 1);
    REQUIRE(v.exact);
    CHECK(*v.exact == LogMonomial(Rat(1)) * LogMonomial::log_power(5, 1));
    auto r = l_chi_special_value(QuadCharacter(Int(5)), {Int(11)});
    CHECK(r.order == 2);
    CHECK(std::fabs(r.approx - std::log((1 + std::sqrt(5.0)) / 2) * std::log(11.0)) < 1e-9);
    CHECK_THROWS_AS(QuadCharacter(Int(20)), Error);
}

TEST_CASE("Dedekind zeta leading terms") {
    auto q = dedekind_zeta_star(QuadField::rationals());
    CHECK(q.order == 0);
    CHECK(*q.exact == LogMonomial(Rat(-1, 2)));
    QuadField Ki{Int(-4)};
    auto zi = dedekind_zeta_star(Ki);
    CHECK(*zi.exact == LogMonomial(Rat(-1, 4)));
    auto zi5 = dedekind_zeta_star(Ki, {places_above(Ki, Int(5))[0]});
    CHECK(zi5.order == 1);
    CHECK(*zi5.exact == LogMonomial(Rat(-1, 4)) * LogMonomial::log_power(5, 1));
    QuadField K2{Int(8)};
    auto z2 = dedekind_zeta_star(K2);
    CHECK(z2.order == 1);
    CHECK(std::fabs(z2.approx + 0.5 * std::log(1 + std::sqrt(2.0))) < 1e-10);
}
