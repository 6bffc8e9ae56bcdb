#include "doctest.h"

#include <random>

#include "weilzeta/det_lattice.hpp"

using namespace weilzeta;

namespace {

IntMatrix scalar(long m) {
    IntMatrix a(1, 1);
    a(0, 0) = m;
    return a;
}

PresentedComplex single(int lo, std::vector<IntMatrix> rels, std::vector<IntMatrix> diffs) {
    PresentedComplex c;
    c.min_degree = lo;
    c.relations = std::move(rels);
    c.diffs = std::move(diffs);
    return c;
}

}  // namespace

TEST_CASE("euler lattice index of [Z -m-> Z]") {
    for (long m = 1; m <= 50; ++m) {
        CHECK(euler_lattice_index(ZComplex::two_term(scalar(m), -1)) == Rat(1, m));
        CHECK(euler_lattice_index(ZComplex::two_term(scalar(m), 0)) == Rat(m));
    }
    CHECK(euler_lattice_index(ZComplex::two_term(IntMatrix{{1, 0}, {0, 1}}, 3)) == 1);
    CHECK_THROWS_AS(euler_lattice_index(ZComplex::two_term(IntMatrix{{1, 1}}, 0)), Error);
}

TEST_CASE("euler lattice index: direct sums and shifts") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(-4, 4);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a(i, j) = e(rng);
                b(i, j) = e(rng);
            }
        if (determinant(a) == 0 || determinant(b) == 0) continue;
        ZComplex x = ZComplex::two_term(a, -1), y = ZComplex::two_term(b, 0);
        CHECK(euler_lattice_index(direct_sum(x, y)) == euler_lattice_index(x) * euler_lattice_index(y));
        CHECK(euler_lattice_index(x.shifted(1)) == 1 / euler_lattice_index(x));
        CHECK(euler_lattice_index(x) == Rat(1) / Rat(abs_int(determinant(a))));
    }
}

TEST_CASE("trivialized lattice index") {
    // H^0 = Z, H^1 = Z.
    ZComplex c{0, {1, 1}, {IntMatrix(1, 1)}};
    CHECK(trivialized_lattice_index(c, {RatMatrix{{3}}}) == 3);
    CHECK(trivialized_lattice_index(c, {RatMatrix{{-3}}}) == 3);
    CHECK(trivialized_lattice_index(c, std::vector<std::vector<double>>{{3.0}}) == doctest::Approx(3.0));

    // H^0 = Z + Z/2, H^1 = Z via [Z^2 -(0 2)-> Z] ... built as Z -2-> Z summed with Z -0-> Z.
    ZComplex tor = ZComplex::two_term(scalar(2), -1);
    ZComplex d = direct_sum(tor, c);
    CHECK(complex_cohomology(d).at(0) == direct_sum(FgAb::free(1), FgAb::cyclic(2)));
    CHECK(trivialized_lattice_index(d, {RatMatrix{{5}}}) == Rat(5, 2));
    for (long lambda : {2L, -3L, 7L})
        CHECK(trivialized_lattice_index(d, {RatMatrix{{5 * lambda}}}) == Rat(5, 2) * abs(lambda));

    ZComplex fin = ZComplex::two_term(scalar(6), 0);
    CHECK(trivialized_lattice_index(fin, {RatMatrix(0, 0)}) == euler_lattice_index(fin));

    CHECK_THROWS_AS(trivialized_lattice_index(c, {RatMatrix{{0}}}), Error);
    CHECK_THROWS_AS(trivialized_lattice_index(c, {RatMatrix{{1, 2}}}), Error);
}

TEST_CASE("presented complexes") {
    // Z/4 -2-> Z/4 -2-> Z/4: cohomology Z/2 in the middle... and at both ends.
    auto c = single(0, {scalar(4), scalar(4), scalar(4)}, {scalar(2), scalar(2)});
    auto h = c.cohomology();
    CHECK(h.at(0) == FgAb::cyclic(2));
    CHECK(h.at(1) == FgAb::trivial());
    CHECK(h.at(2) == FgAb::cyclic(2));
    CHECK(!c.is_acyclic());

    auto bad = single(0, {scalar(4), scalar(3)}, {scalar(1)});
    CHECK_THROWS_AS(bad.validate(), Error);

    auto pres = single(0, {IntMatrix(1, 0), IntMatrix(1, 0), scalar(3)}, {scalar(3), scalar(1)});
    CHECK(pres.is_acyclic());
    CHECK(pres.term(2) == FgAb::cyclic(3));
}

TEST_CASE("acyclic duality ratio: examples") {
    auto iso = single(0, {IntMatrix(1, 0), IntMatrix(1, 0)}, {scalar(1)});
    DualityData phi{0, {RatMatrix{{1}}, RatMatrix{{1}}}};
    CHECK(acyclic_duality_ratio(iso, iso, phi) == 1);

    auto t2 = single(0, {scalar(2), scalar(2)}, {scalar(1)});
    auto zero = single(0, {IntMatrix(0, 0)}, {});
    CHECK(acyclic_duality_ratio(t2, zero, DualityData{}) == 1);

    // A = Z -2-> Z -> Z/2, B = Z -id-> Z in degrees 0, 1.
    auto A = single(0, {IntMatrix(1, 0), IntMatrix(1, 0), scalar(2)}, {scalar(2), scalar(1)});
    auto B = single(0, {IntMatrix(1, 0), IntMatrix(1, 0)}, {scalar(1)});
    CHECK(acyclic_duality_ratio(A, B, DualityData{0, {RatMatrix{{1}}, RatMatrix{{2}}}}) == 1);

    auto notacyclic = single(0, {IntMatrix(1, 0)}, {});
    CHECK_THROWS_AS(acyclic_duality_ratio(notacyclic, zero, DualityData{}), Error);
    CHECK_THROWS_AS(acyclic_duality_ratio(iso, iso, DualityData{0, {RatMatrix{{1}}, RatMatrix{{2}}}}), Error);
}

TEST_CASE("acyclic duality ratio: random pairs") {
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 100; ++t) {
        auto p = random_acyclic_pair(rng);
        REQUIRE(p.A.is_acyclic());
        REQUIRE(p.B.is_acyclic());
        CHECK(acyclic_duality_ratio(p.A, p.B, p.phi) == 1);
    }
}

TEST_CASE("random unimodular") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 0; n < 5; ++n) {
        auto [g, gi] = random_unimodular(rng, n);
        CHECK(g * gi == IntMatrix::identity(n));
    }
}
