#include "doctest.h"

#include <cmath>
#include <numeric>

#include "weilzeta/quadratic.hpp"

using namespace weilzeta;

namespace {

// Number of reduced positive definite forms of discriminant D, without composition.
long count_reduced_forms(long D) {
    long h = 0;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            const long c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++h;
        }
    return h;
}

double product(const std::vector<Place>& S) {
    double p = 1;
    for (const auto& v : S) p *= std::log(v.norm.get_d());
    return p;
}

}  // namespace

TEST_CASE("discriminants and splitting") {
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(8));
    CHECK(!is_fundamental_discriminant(-16));
    CHECK(!is_fundamental_discriminant(12 * 4));
    CHECK_THROWS_AS(QuadField(Int(18)), Error);
    QuadField K(Int(-4));
    CHECK(splitting_type(K, 5) == Splitting::split);
    CHECK(splitting_type(K, 3) == Splitting::inert);
    CHECK(splitting_type(K, 2) == Splitting::ramified);
    CHECK(places_above(K, 5).size() == 2);
    CHECK(places_above(K, 3)[0].norm == 9);
    CHECK(places_above(K, 2)[0].ramification == 2);
}

TEST_CASE("arithmetic and ideals") {
    QuadField K(Int(-20));
    QElem a{Rat(3), Rat(-2)}, b{Rat(1, 2), Rat(5)};
    CHECK(qnorm(K, qmul(K, a, b)) == qnorm(K, a) * qnorm(K, b));
    CHECK(qmul(K, a, qinv(K, a)) == QElem::integer(1));
    for (const auto& v : places_above(K, 7)) {
        CHECK(v.ideal.norm() == 7);
        CHECK(ideal_mul(K, v.ideal, ideal_conj(K, v.ideal)) == principal_ideal(K, QElem::integer(7)));
    }
    auto v3 = places_above(K, 3);
    CHECK(valuation(K, v3[0], QElem::integer(9)) == 2);
    CHECK(valuation(K, v3[0], QElem{Rat(1, 3), Rat(0)}) == -1);
}

TEST_CASE("class groups") {
    CHECK(class_group(QuadField(Int(-4))).group == FgAb::trivial());
    CHECK(class_group(QuadField(Int(-20))).group == FgAb::cyclic(2));
    CHECK(class_group(QuadField(Int(-23))).group == FgAb::cyclic(3));
    CHECK(class_group(QuadField(Int(-84))).group == FgAb::from_cyclic_orders({2, 2}));
    CHECK(class_group(QuadField(Int(-56))).group == FgAb::cyclic(4));
    for (long D : fundamental_discriminants(-200, -3)) CHECK(class_group(QuadField(Int(D))).order == count_reduced_forms(D));

    const std::pair<long, long> real[] = {{5, 1}, {8, 1}, {12, 1}, {40, 2}, {60, 2}, {65, 2}, {136, 2},
                                          {145, 4}, {229, 3}, {316, 3}, {401, 5}};
    for (auto [D, h] : real) CHECK(class_group(QuadField(Int(D))).order == h);
    CHECK_THROWS_AS(class_group(QuadField(Int(-20)), Int(10)), Error);
}

TEST_CASE("fundamental units") {
    auto u8 = fundamental_unit(QuadField(Int(8)));
    CHECK(u8.x == 1);
    CHECK(u8.y == 1);
    CHECK(u8.regulator == doctest::Approx(0.8813735870).epsilon(1e-10));
    auto u5 = fundamental_unit(QuadField(Int(5)));
    CHECK(u5.x == 0);
    CHECK(u5.y == 1);
    CHECK(u5.regulator == doctest::Approx(0.4812118251).epsilon(1e-10));
    auto u12 = fundamental_unit(QuadField(Int(12)));
    CHECK(u12.x == 2);
    CHECK(u12.y == 1);
    CHECK(u12.regulator == doctest::Approx(1.3169578969).epsilon(1e-10));
    for (long D : fundamental_discriminants(5, 1000)) {
        QuadField K{Int(D)};
        auto u = fundamental_unit(K);
        const Int X = 2 * u.x + K.delta() * u.y, Y = u.y;
        CHECK(abs_int(X * X - D * Y * Y) == 4);
        CHECK(u.regulator > 0);
    }
}

TEST_CASE("principal generators") {
    QuadField K(Int(-4));
    auto g = principal_generator(K, places_above(K, 5)[0].ideal);
    REQUIRE(g);
    CHECK(qnorm(K, *g) == 5);
    CHECK(principal_generator(K, Ideal{})->x * principal_generator(K, Ideal{})->x == 1);
    QuadField K20(Int(-20));
    CHECK(!principal_generator(K20, places_above(K20, 2)[0].ideal));
    for (long D : {40L, 229L, 145L, 316L, -23L, -56L}) {
        QuadField L{Int(D)};
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            if (splitting_type(L, p) == Splitting::inert) continue;
            for (const auto& v : places_above(L, p)) {
                const bool principal = ideal_class_id(L, v.ideal) == ideal_class_id(L, Ideal{});
                CHECK(principal_generator(L, v.ideal).has_value() == principal);
                auto n = principal_generator(L, ideal_mul(L, v.ideal, ideal_conj(L, v.ideal)));
                REQUIRE(n);
                CHECK(abs(qnorm(L, *n)) == p * p);
            }
        }
    }
}

TEST_CASE("S-invariants") {
    QuadField Q;
    auto s = s_invariants(Q, places_above(Q, 7));
    CHECK(s.h_S == 1);
    CHECK(*s.R_S.exact == LogMonomial::log_power(7, 1));
    auto si = s_invariants(QuadField(Int(-4)), {});
    CHECK(*si.R_S.exact == LogMonomial::one());
    auto s2 = s_invariants(QuadField(Int(8)), {});
    CHECK(s2.R_S.approx == doctest::Approx(std::log(1 + std::sqrt(2.0))).epsilon(1e-12));

    // h_S R_S = h R prod log N(v), independent of the dropped place.
    for (long D : {1L, -4L, -20L, -23L, 8L, 40L, 229L}) {
        QuadField K = D == 1 ? QuadField() : QuadField(Int(D));
        auto base = field_invariants(K);
        std::vector<Place> pool;
        for (long p : {2L, 3L, 5L, 7L, 13L})
            for (const auto& v : places_above(K, p)) pool.push_back(v);
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i; j < pool.size(); ++j) {
                std::vector<Place> S{pool[i]};
                if (j != i) S.push_back(pool[j]);
                auto inv = s_invariants(K, S);
                const double lhs = inv.h_S.get_d() * inv.R_S.approx;
                const double rhs = base.h.get_d() * base.regulator.approx * product(S);
                CHECK(std::abs(lhs - rhs) <= 1e-8 * rhs);
                for (std::size_t d = 1; d < K.archimedean_places() + S.size(); ++d) {
                    auto other = s_invariants(K, S, d);
                    CHECK(std::abs(other.R_S.approx - inv.R_S.approx) <= 1e-8 * inv.R_S.approx);
                }
                for (const auto& u : inv.units)
                    for (const auto& v : places_above(K, 17)) CHECK(valuation(K, v, u) == 0);
            }
    }
}
