#include "weilzeta/frobenius.hpp"

#include <numeric>

#include "weilzeta/det_lattice.hpp"

namespace weilzeta {

namespace {

IntMatrix minus_identity(IntMatrix a) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= 1;
    return a;
}

IntMatrix negated(IntMatrix a) {
    for (std::size_t i = 0; i < a.rows(); ++i) a.negate_row(i);
    return a;
}

// Reduces the torsion rows of a canonical-coordinate matrix.
void reduce_rows(IntMatrix& a, const std::vector<Int>& torsion) {
    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_fdiv_r(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), torsion[i].get_mpz_t());
}

// sum_{i<m} phi^i on canonical coordinates, torsion rows reduced.
IntMatrix norm_map(const CanonicalModule& c, std::uint64_t m) {
    const std::size_t n = c.size();
    IntMatrix acc(n, n), power = IntMatrix::identity(n);
    for (std::uint64_t i = 0; i < m; ++i) {
        acc = acc + power;
        power = c.phi * power;
        reduce_rows(power, c.torsion);
    }
    reduce_rows(acc, c.torsion);
    return acc;
}

IntMatrix free_norm(const IntMatrix& phi, std::uint64_t m) {
    IntMatrix acc(phi.rows(), phi.cols()), power = IntMatrix::identity(phi.rows());
    for (std::uint64_t i = 0; i < m; ++i) {
        acc = acc + power;
        power = phi * power;
    }
    return acc;
}

bool is_identity_mod(const IntMatrix& a, const std::vector<Int>& torsion) {
    IntMatrix d = minus_identity(a);
    reduce_rows(d, torsion);
    return d.is_zero();
}

// Lattice {x : A x in span(R)} projected to the x coordinates.
IntMatrix preimage_lattice(const IntMatrix& A, const IntMatrix& R) {
    const std::size_t n = A.cols();
    if (n == 0) return IntMatrix(0, 0);
    if (A.rows() == 0) return IntMatrix::identity(n);
    return integer_kernel(hconcat(A, negated(R))).row_range(0, n);
}

}  // namespace

FrobModule FrobModule::trivial_z() { return free(IntMatrix::identity(1), 1); }

FrobModule FrobModule::free(const IntMatrix& phi, std::uint64_t order) {
    return {IntMatrix(phi.rows(), 0), phi, order};
}

FrobModule FrobModule::cyclic(const Int& n, const Int& multiplier, std::uint64_t order) {
    IntMatrix rel(1, 1), phi(1, 1);
    rel(0, 0) = n;
    phi(0, 0) = multiplier;
    return {rel, phi, order};
}

void FrobModule::validate() const {
    const std::size_t n = generators();
    if (frobenius.cols() != n) throw Error("frobenius module: frobenius must be square");
    if (relations.rows() != n && !(relations.cols() == 0)) throw Error("frobenius module: relation shape mismatch");
    if (order == 0) throw Error("frobenius module: order must be positive");
    if (n == 0) return;
    Subquotient m(IntMatrix::identity(n), relations.rows() == n ? relations : IntMatrix(n, 0));
    for (std::size_t j = 0; j < relations.cols(); ++j) {
        auto c = m.coordinates(frobenius * relations.column(j));
        for (const auto& x : c)
            if (x != 0) throw Error("frobenius module: frobenius does not preserve relations");
    }
    auto c = canonicalize(*this);
    if (c.size() == 0) return;
    if (!cokernel_group(hconcat(c.phi, c.relations())).is_trivial())
        throw Error("frobenius module: frobenius is not invertible on M");
    IntMatrix power = IntMatrix::identity(c.size());
    for (std::uint64_t i = 0; i < order; ++i) {
        power = c.phi * power;
        reduce_rows(power, c.torsion);
    }
    if (!is_identity_mod(power, c.torsion))
        throw Error("frobenius module: phi^" + std::to_string(order) + " != id");
}

FrobModule direct_sum(const FrobModule& a, const FrobModule& b) {
    auto rel = [](const FrobModule& m) {
        return m.relations.rows() == m.generators() ? m.relations : IntMatrix(m.generators(), 0);
    };
    return {block_diag(rel(a), rel(b)), block_diag(a.frobenius, b.frobenius), std::lcm(a.order, b.order)};
}

IntMatrix CanonicalModule::relations() const {
    IntMatrix r(size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) r(i, i) = torsion[i];
    return r;
}

IntMatrix CanonicalModule::free_block() const {
    const std::size_t t = torsion.size();
    return phi.row_range(t, size()).col_range(t, size());
}

CanonicalModule canonicalize(const FrobModule& M) {
    const std::size_t n = M.generators();
    CanonicalModule c;
    if (n == 0) return c;
    Subquotient s(IntMatrix::identity(n), M.relations.rows() == n ? M.relations : IntMatrix(n, 0));
    const auto& orders = s.orders();
    for (const auto& o : orders) {
        if (o == 0)
            ++c.free_rank;
        else
            c.torsion.push_back(o);
    }
    const auto& gens = s.generators();
    c.phi = IntMatrix(orders.size(), orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k) {
        auto col = s.coordinates(M.frobenius * gens.column(k));
        for (std::size_t i = 0; i < col.size(); ++i) c.phi(i, k) = col[i];
    }
    return c;
}

FixedPoints h0(const FrobModule& M) {
    auto c = canonicalize(M);
    FixedPoints out;
    if (c.size() == 0) {
        out.free_lifts = IntMatrix(0, 0);
        return out;
    }
    const IntMatrix rc = c.relations();
    Subquotient s(preimage_lattice(minus_identity(c.phi), rc), rc);
    out.group = s.group();
    out.free_lifts = s.free_generators();
    return out;
}

FgAb coinvariants(const FrobModule& M) {
    auto c = canonicalize(M);
    if (c.size() == 0) return {};
    return Subquotient(IntMatrix::identity(c.size()), hconcat(c.relations(), minus_identity(c.phi))).group();
}

Int h1_order(const FrobModule& M) {
    auto c = canonicalize(M);
    const std::size_t t = c.torsion.size(), f = c.free_rank, n = c.size();
    if (n == 0) return 1;

    // H^1 of the torsion submodule: coker(phi - 1) on M_tor.
    Int h1t = 1;
    if (t > 0) {
        IntMatrix tt = c.phi.row_range(0, t).col_range(0, t);
        IntMatrix rel(t, t);
        for (std::size_t i = 0; i < t; ++i) rel(i, i) = c.torsion[i];
        h1t = cokernel_group(hconcat(minus_identity(tt), rel)).torsion_order();
    }
    if (f == 0) return h1t;

    // H^1 of the free quotient: ker(Norm) / im(phi - 1).
    const IntMatrix ff = c.free_block();
    const IntMatrix norm = free_norm(ff, M.order);
    const IntMatrix ker_norm = norm.is_zero() ? IntMatrix::identity(f) : integer_kernel(norm);
    FgAb h1f = Subquotient(ker_norm, minus_identity(ff)).group();
    if (!h1f.is_finite()) throw Error("h1_order: H^1 of the free part is not finite");

    // Cokernel of H^0(M) -> H^0(M / M_tor), which feeds the connecting map.
    const IntMatrix fixed_free = integer_kernel(minus_identity(ff));
    IntMatrix image = h0(M).free_lifts;
    image = image.cols() > 0 ? image.row_range(t, n) : IntMatrix(f, 0);
    FgAb coker = Subquotient(fixed_free, image).group();
    if (!coker.is_finite()) throw Error("h1_order: H^0 comparison is not of finite index");

    Int total = h1t * h1f.torsion_order();
    if (!mpz_divisible_p(total.get_mpz_t(), coker.torsion_order().get_mpz_t()))
        throw Error("h1_order: inconsistent six-term sequence");
    return total / coker.torsion_order();
}

FgAb cyclic_h1(const FrobModule& M, std::uint64_t m) {
    auto c = canonicalize(M);
    if (c.size() == 0) return {};
    if (m % M.order != 0) throw Error("cyclic_h1: m must be a multiple of the order");
    const IntMatrix rc = c.relations();
    IntMatrix kernel = preimage_lattice(norm_map(c, m), rc);
    return Subquotient(kernel, hconcat(rc, minus_identity(c.phi))).group();
}

FrobModule induce(const FrobModule& M, std::uint64_t n) {
    if (n == 0) throw Error("induce: index must be positive");
    const std::size_t g = M.generators();
    const IntMatrix rel = M.relations.rows() == g ? M.relations : IntMatrix(g, 0);
    FrobModule out;
    out.order = n * M.order;
    out.relations = IntMatrix(0, 0);
    for (std::uint64_t b = 0; b < n; ++b) out.relations = b == 0 ? rel : block_diag(out.relations, rel);
    out.frobenius = IntMatrix(g * n, g * n);
    for (std::uint64_t b = 0; b + 1 < n; ++b)
        for (std::size_t i = 0; i < g; ++i) out.frobenius((b + 1) * g + i, b * g + i) = 1;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) out.frobenius(i, (n - 1) * g + j) = M.frobenius(i, j);
    return out;
}

IntPoly local_factor_poly(const FrobModule& M) {
    auto c = canonicalize(M);
    if (c.free_rank == 0) return {Int(1)};
    return reciprocal_charpoly(c.free_block());
}

SpecialValue local_special_value(const FrobModule& M, std::uint64_t norm) {
    if (!prime_power(norm)) throw Error("local_special_value: norm must be a prime power");
    auto [r, g] = split_one_minus_u(local_factor_poly(M));
    const Rat g1 = poly_eval(g, Rat(1));
    if (g1 <= 0) throw Error("local_special_value: nonpositive leading coefficient");
    LogMonomial v = LogMonomial(Rat(1 / g1)) / LogMonomial::log_power(norm, r);
    return SpecialValue::from_exact(-r, v);
}

Rat point_regulator(const FrobModule& M) {
    auto c = canonicalize(M);
    const std::size_t n = c.size();
    if (n == 0) return 1;
    const IntMatrix lifts = h0(M).free_lifts;
    Subquotient co(IntMatrix::identity(n), hconcat(c.relations(), minus_identity(c.phi)));
    const auto idx = co.free_indices();
    if (idx.size() != lifts.cols()) throw Error("point_regulator: rank H^0 != rank of coinvariants");
    RatMatrix m(idx.size(), idx.size());
    for (std::size_t j = 0; j < lifts.cols(); ++j) {
        auto x = co.coordinates(lifts.column(j));
        for (std::size_t i = 0; i < idx.size(); ++i) m(i, j) = Rat(x[idx[i]]);
    }
    Rat d = determinant(m);
    if (d == 0) throw Error("point_regulator: degenerate pairing");
    return d < 0 ? Rat(-d) : d;
}

PointEuler chi_point(const FrobModule& M, std::uint64_t norm) {
    if (!prime_power(norm)) throw Error("chi_point: norm must be a prime power");
    auto fp = h0(M);
    const int r = static_cast<int>(fp.group.free_rank);
    Rat v = Rat(fp.group.torsion_order()) / (Rat(h1_order(M)) * point_regulator(M));
    return {LogMonomial(v) / LogMonomial::log_power(norm, r), -r};
}

namespace {

struct Cyclotomic {
    int order;
    std::vector<long> coeffs;  // low to high, monic
};

const std::vector<Cyclotomic>& cyclotomics() {
    static const std::vector<Cyclotomic> table = {
        {1, {-1, 1}},          {2, {1, 1}},           {3, {1, 1, 1}},          {4, {1, 0, 1}},
        {5, {1, 1, 1, 1, 1}},  {6, {1, -1, 1}},       {8, {1, 0, 0, 0, 1}},    {10, {1, -1, 1, -1, 1}},
        {12, {1, 0, -1, 0, 1}},
    };
    return table;
}

IntMatrix companion(const std::vector<long>& p) {
    const std::size_t k = p.size() - 1;
    IntMatrix c(k, k);
    for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -p[i];
    return c;
}

int multiplicative_order(long u, long m) {
    long x = ((u % m) + m) % m;
    int k = 1;
    while (x != 1 % m) {
        x = (x * u) % m;
        if (++k > m) return 0;
    }
    return k;
}

std::uint64_t canonical_order(const CanonicalModule& c, int bound) {
    IntMatrix power = c.phi;
    reduce_rows(power, c.torsion);
    for (int k = 1; k <= bound; ++k) {
        if (is_identity_mod(power, c.torsion)) return static_cast<std::uint64_t>(k);
        power = c.phi * power;
        reduce_rows(power, c.torsion);
    }
    return 0;
}

FrobModule build_random(std::mt19937_64& rng, std::size_t max_rank, int max_torsion, int max_order,
                        bool require_torsion) {
    std::uniform_int_distribution<std::size_t> rank_dist(0, max_rank);
    const std::size_t target_rank = rank_dist(rng);
    std::uint64_t lcm_order = 1;

    IntMatrix free_phi(0, 0);
    for (int tries = 0; free_phi.rows() < target_rank && tries < 50; ++tries) {
        const auto& cy = cyclotomics()[rng() % cyclotomics().size()];
        const std::size_t k = cy.coeffs.size() - 1;
        const auto l = std::lcm(lcm_order, static_cast<std::uint64_t>(cy.order));
        if (free_phi.rows() + k > target_rank || l > static_cast<std::uint64_t>(max_order)) continue;
        free_phi = block_diag(free_phi, companion(cy.coeffs));
        lcm_order = l;
    }

    std::vector<Int> torsion;
    std::vector<long> mult;
    long budget = max_torsion;
    const int summands = require_torsion ? 1 + static_cast<int>(rng() % 2) : static_cast<int>(rng() % 3);
    for (int s = 0; s < summands && budget >= 2; ++s) {
        std::uniform_int_distribution<long> md(2, std::min<long>(budget, 25));
        const long m = md(rng);
        long u = 1;
        for (int tries = 0; tries < 20; ++tries) {
            const long cand = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
            if (std::gcd(cand, m) != 1) continue;
            const int o = multiplicative_order(cand, m);
            if (o > 0 && std::lcm(lcm_order, static_cast<std::uint64_t>(o)) <= static_cast<std::uint64_t>(max_order)) {
                u = cand;
                break;
            }
        }
        lcm_order = std::lcm(lcm_order, static_cast<std::uint64_t>(multiplicative_order(u, m)));
        torsion.push_back(m);
        mult.push_back(u);
        budget /= m;
    }

    const std::size_t t = torsion.size(), f = free_phi.rows(), n = t + f;
    CanonicalModule c;
    c.torsion = torsion;
    c.free_rank = f;
    c.phi = IntMatrix(n, n);
    for (std::size_t i = 0; i < t; ++i) c.phi(i, i) = mult[i];
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) c.phi(t + i, t + j) = free_phi(i, j);
    if (t > 0 && f > 0 && rng() % 2) {
        CanonicalModule coupled = c;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < f; ++j)
                coupled.phi(i, t + j) = static_cast<long>(rng() % torsion[i].get_ui());
        if (canonical_order(coupled, max_order) != 0) c = coupled;
    }
    std::uint64_t order = canonical_order(c, max_order);
    if (order == 0) order = lcm_order;

    // Hide the canonical coordinates behind a random unimodular change of generators.
    auto [G, Ginv] = random_unimodular(rng, n);
    auto W = random_unimodular(rng, t).first;
    FrobModule M;
    M.relations = t > 0 ? IntMatrix(G * c.relations() * W) : IntMatrix(n, 0);
    M.frobenius = G * c.phi * Ginv;
    M.order = order;
    return M;
}

}  // namespace

FrobModule random_frob_module(std::mt19937_64& rng, std::size_t max_rank, int max_torsion, int max_order) {
    return build_random(rng, max_rank, max_torsion, max_order, false);
}

FrobModule random_finite_frob_module(std::mt19937_64& rng, int max_torsion, int max_order) {
    return build_random(rng, 0, max_torsion, max_order, true);
}

}  // namespace weilzeta
