#include "doctest.h"

#include <random>

#include "weilzeta/frobenius.hpp"

using namespace weilzeta;

namespace {

FrobModule swap2() { return FrobModule::free(IntMatrix{{0, 1}, {1, 0}}, 2); }
FrobModule minus_one() { return FrobModule::free(IntMatrix{{-1}}, 2); }
FrobModule rotation4() { return FrobModule::free(IntMatrix{{0, -1}, {1, 0}}, 4); }

Int exponent_of_torsion(const FrobModule& M) {
    auto c = canonicalize(M);
    Int e = 1;
    for (const auto& t : c.torsion) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), t.get_mpz_t());
    return e;
}

}  // namespace

TEST_CASE("h0 examples") {
    CHECK(h0(FrobModule::trivial_z()).group == FgAb::free(1));
    auto s = h0(swap2());
    CHECK(s.group == FgAb::free(1));
    CHECK(abs_int(s.free_lifts(0, 0)) == 1);
    CHECK(s.free_lifts(0, 0) == s.free_lifts(1, 0));
    CHECK(h0(FrobModule::cyclic(5, 2, 4)).group == FgAb::trivial());
}

TEST_CASE("h1 examples") {
    CHECK(h1_order(FrobModule::trivial_z()) == 1);
    for (long n = 2; n < 10; ++n) CHECK(h1_order(FrobModule::cyclic(n, 1, 1)) == n);
    CHECK(h1_order(minus_one()) == 2);
    CHECK(h1_order(rotation4()) == 2);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(FrobModule::free(IntMatrix{{2}}, 1).validate(), Error);
    CHECK_THROWS_AS(FrobModule::free(IntMatrix{{-1}}, 1).validate(), Error);
    CHECK_THROWS_AS(FrobModule::cyclic(4, 2, 1).validate(), Error);
    FrobModule bad{IntMatrix{{2}, {0}}, IntMatrix{{0, 1}, {1, 0}}, 2};
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_NOTHROW(FrobModule::cyclic(5, 2, 4).validate());
    CHECK_NOTHROW(rotation4().validate());
}

TEST_CASE("induce") {
    auto ind = induce(FrobModule::trivial_z(), 2);
    CHECK(ind.frobenius == IntMatrix{{0, 1}, {1, 0}});
    CHECK(ind.order == 2);
    CHECK(local_factor_poly(ind) == IntPoly{1, 0, -1});
}

TEST_CASE("local factors and special values") {
    CHECK(local_factor_poly(FrobModule::trivial_z()) == IntPoly{1, -1});
    CHECK(local_factor_poly(minus_one()) == IntPoly{1, 1});
    CHECK(local_factor_poly(FrobModule::cyclic(5, 2, 4)) == IntPoly{1});

    auto v = local_special_value(FrobModule::trivial_z(), 9);
    CHECK(v.order == -1);
    CHECK(*v.exact == LogMonomial(Rat(1, 2), {{3, -1}}));
    v = local_special_value(minus_one(), 7);
    CHECK(v.order == 0);
    CHECK(*v.exact == LogMonomial(Rat(1, 2)));
    CHECK(*local_special_value(rotation4(), 5).exact == LogMonomial(Rat(1, 2)));
    CHECK_THROWS_AS(local_special_value(minus_one(), 6), Error);
}

TEST_CASE("point regulator and chi") {
    CHECK(point_regulator(FrobModule::trivial_z()) == 1);
    CHECK(point_regulator(swap2()) == 2);
    CHECK(point_regulator(direct_sum(FrobModule::trivial_z(), FrobModule::cyclic(3, 1, 1))) == 1);

    auto c = chi_point(FrobModule::trivial_z(), 7);
    CHECK(c.chi == LogMonomial::log_power(7, -1));
    CHECK(c.e == -1);
    CHECK(chi_point(minus_one(), 7).chi == LogMonomial(Rat(1, 2)));
    CHECK(chi_point(FrobModule::cyclic(12, 5, 2), 4).chi == LogMonomial::one());

    // Z + Z/2 with phi(1, 0) = (1, 1): R = 2, H^0_tor = Z/2, H^1 = 0.
    FrobModule ext{IntMatrix{{0}, {2}}, IntMatrix{{1, 0}, {1, 1}}, 2};
    ext.validate();
    CHECK(point_regulator(ext) == 2);
    CHECK(h0(ext).group == direct_sum(FgAb::free(1), FgAb::cyclic(2)));
    CHECK(h1_order(ext) == 1);
}

TEST_CASE("random modules: local theorem and oracles") {
    std::mt19937_64 rng(99);
    const std::uint64_t norms[] = {2, 3, 4, 5, 7, 9};
    for (int t = 0; t < 200; ++t) {
        auto M = random_frob_module(rng);
        REQUIRE_NOTHROW(M.validate());
        REQUIRE(M.order <= 12);
        const std::uint64_t N = norms[t % 6];

        auto sv = local_special_value(M, N);
        auto chi = chi_point(M, N);
        auto fixed = h0(M);
        CHECK(*sv.exact == chi.chi);
        CHECK(sv.order == -static_cast<int>(fixed.group.free_rank));
        CHECK(chi.e == sv.order);

        auto [r, g] = split_one_minus_u(local_factor_poly(M));
        CHECK(r == static_cast<int>(fixed.group.free_rank));
        const Int h1 = h1_order(M);
        CHECK(poly_eval(g, 1) * Rat(fixed.group.torsion_order()) == Rat(h1) * point_regulator(M));

        CHECK(h1 == coinvariants(M).torsion_order());
        const std::uint64_t base = M.order * exponent_of_torsion(M).get_ui();
        for (std::uint64_t a = 0; a < 4; ++a) CHECK(cyclic_h1(M, base << a).torsion_order() == h1);

        auto ind = induce(M, 2);
        CHECK(local_factor_poly(ind) == poly_inflate(local_factor_poly(M), 2));
        if (N <= 3) CHECK(chi_point(ind, N).chi == chi_point(M, N * N).chi);

        auto M2 = random_frob_module(rng, 2);
        auto S = direct_sum(M, M2);
        CHECK(local_factor_poly(S) == poly_mul(local_factor_poly(M), local_factor_poly(M2)));
        CHECK(chi_point(S, N).chi == chi_point(M, N).chi * chi_point(M2, N).chi);
    }
}

TEST_CASE("random finite modules are balanced") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto M = random_finite_frob_module(rng);
        M.validate();
        CHECK(h0(M).group.torsion_order() == h1_order(M));
        CHECK(local_factor_poly(M) == IntPoly{1});
        CHECK(chi_point(M, 5).chi == LogMonomial::one());
        CHECK(local_special_value(M, 5).order == 0);
    }
}
