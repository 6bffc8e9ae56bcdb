#include "weilzeta/det_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weilzeta {

namespace {

bool in_lattice(const IntMatrix& gens, const std::vector<Int>& x) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
    if (zero) return true;
    if (gens.cols() == 0) return false;
    try {
        Subquotient(gens, IntMatrix(gens.rows(), 0)).coordinates(x);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Rat alternating_torsion(const Cohomology& h) {
    Rat p = 1;
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        const int degree = h.lo + static_cast<int>(k);
        const Rat t(h.groups[k].torsion_order());
        p = (degree % 2 == 0) ? Rat(p * t) : Rat(p / t);
    }
    return p;
}

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace

std::size_t CohomologyBases::even_rank() const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < free_lifts.size(); ++k)
        if ((lo + static_cast<int>(k)) % 2 == 0) r += free_lifts[k].cols();
    return r;
}

std::size_t CohomologyBases::odd_rank() const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < free_lifts.size(); ++k)
        if ((lo + static_cast<int>(k)) % 2 != 0) r += free_lifts[k].cols();
    return r;
}

CohomologyBases cohomology_bases(const ZComplex& C) {
    C.validate();
    CohomologyBases b;
    b.lo = C.min_degree;
    for (int d = C.min_degree; d <= C.max_degree(); ++d) {
        const std::size_t n = C.rank_at(d);
        const std::size_t k = static_cast<std::size_t>(d - C.min_degree);
        if (n == 0) {
            b.free_lifts.emplace_back(0, 0);
            b.groups.push_back({});
            continue;
        }
        IntMatrix ker = (d < C.max_degree() && C.rank_at(d + 1) > 0) ? integer_kernel(C.diffs[k])
                                                                     : IntMatrix::identity(n);
        IntMatrix im = (d > C.min_degree) ? C.diffs[k - 1] : IntMatrix(n, 0);
        Subquotient sq(ker, im);
        b.free_lifts.push_back(sq.free_generators());
        b.groups.push_back(sq.group());
    }
    return b;
}

Rat euler_lattice_index(const ZComplex& C) {
    auto h = complex_cohomology(C);
    if (!h.all_finite()) throw Error("euler_lattice_index: cohomology is not finite");
    return 1 / alternating_torsion(h);
}

Rat trivialized_lattice_index(const ZComplex& C, const Trivialization& t) {
    auto b = cohomology_bases(C);
    const std::size_t ev = b.even_rank(), od = b.odd_rank();
    if (ev != od) throw Error("trivialization: rank H^ev != rank H^od");
    if (t.phi.rows() != od || t.phi.cols() != ev) throw Error("trivialization: dimension mismatch");
    Rat det = determinant(t.phi);
    if (det == 0) throw Error("trivialization: singular phi");
    Cohomology h{b.lo, b.groups};
    return abs_rat(det) / alternating_torsion(h);
}

double trivialized_lattice_index(const ZComplex& C, const std::vector<std::vector<double>>& phi) {
    auto b = cohomology_bases(C);
    const std::size_t n = b.even_rank();
    if (n != b.odd_rank()) throw Error("trivialization: rank H^ev != rank H^od");
    if (phi.size() != n) throw Error("trivialization: dimension mismatch");
    // Partial-pivot LU determinant.
    std::vector<std::vector<double>> a = phi;
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k].size() != n) throw Error("trivialization: dimension mismatch");
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        if (a[p][k] == 0.0) throw Error("trivialization: singular phi");
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    Cohomology h{b.lo, b.groups};
    return std::abs(det) / alternating_torsion(h).get_d();
}

std::size_t PresentedComplex::generators_at(int degree) const {
    if (degree < min_degree || degree > max_degree()) return 0;
    return relations[static_cast<std::size_t>(degree - min_degree)].rows();
}

void PresentedComplex::validate() const {
    const std::size_t terms = relations.size();
    if (diffs.size() != (terms ? terms - 1 : 0)) throw Error("presented complex: wrong number of differentials");
    for (std::size_t k = 0; k + 1 < terms; ++k) {
        const auto& d = diffs[k];
        if (d.cols() != relations[k].rows() || d.rows() != relations[k + 1].rows())
            throw Error("presented complex: differential " + std::to_string(k) + " has the wrong shape");
        if (d.rows() == 0 || d.cols() == 0) continue;
        IntMatrix image = d * relations[k];
        for (std::size_t j = 0; j < image.cols(); ++j)
            if (!in_lattice(relations[k + 1], image.column(j)))
                throw Error("presented complex: differential does not respect relations");
    }
    for (std::size_t k = 0; k + 2 < terms; ++k) {
        if (diffs[k].cols() == 0 || diffs[k + 1].rows() == 0) continue;
        IntMatrix dd = diffs[k + 1] * diffs[k];
        for (std::size_t j = 0; j < dd.cols(); ++j)
            if (!in_lattice(relations[k + 2], dd.column(j)))
                throw Error("presented complex: d^2 != 0 modulo relations");
    }
}

FgAb PresentedComplex::term(int degree) const {
    if (generators_at(degree) == 0) return {};
    return cokernel_group(relations[static_cast<std::size_t>(degree - min_degree)]);
}

Cohomology PresentedComplex::cohomology() const {
    validate();
    Cohomology h;
    h.lo = min_degree;
    for (int d = min_degree; d <= max_degree(); ++d) {
        const std::size_t k = static_cast<std::size_t>(d - min_degree);
        const std::size_t n = generators_at(d);
        if (n == 0) {
            h.groups.push_back({});
            continue;
        }
        IntMatrix L = IntMatrix::identity(n);
        if (d < max_degree() && generators_at(d + 1) > 0) {
            const auto& rel_next = relations[k + 1];
            IntMatrix neg(rel_next.rows(), rel_next.cols());
            for (std::size_t i = 0; i < neg.rows(); ++i)
                for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -rel_next(i, j);
            IntMatrix ker = integer_kernel(hconcat(diffs[k], neg));
            L = ker.row_range(0, n);
        }
        IntMatrix N = relations[k];
        if (d > min_degree) N = hconcat(N, diffs[k - 1]);
        h.groups.push_back(Subquotient(L, N).group());
    }
    return h;
}

bool PresentedComplex::is_acyclic() const {
    auto h = cohomology();
    return std::all_of(h.groups.begin(), h.groups.end(), [](const FgAb& g) { return g.is_trivial(); });
}

std::size_t PresentedComplex::free_rank_at(int degree) const { return term(degree).free_rank; }

RatMatrix PresentedComplex::free_differential(int degree) const {
    const std::size_t n = generators_at(degree), m = generators_at(degree + 1);
    const std::size_t src_rank = free_rank_at(degree), dst_rank = free_rank_at(degree + 1);
    RatMatrix out(dst_rank, src_rank);
    if (src_rank == 0 || dst_rank == 0) return out;
    const std::size_t k = static_cast<std::size_t>(degree - min_degree);
    Subquotient src(IntMatrix::identity(n), relations[k]);
    Subquotient dst(IntMatrix::identity(m), relations[k + 1]);
    const auto lifts = src.free_generators();
    const auto dst_free = dst.free_indices();
    for (std::size_t j = 0; j < src_rank; ++j) {
        auto img = diffs[k] * lifts.column(j);
        auto c = dst.coordinates(img);
        for (std::size_t i = 0; i < dst_rank; ++i) out(i, j) = Rat(c[dst_free[i]]);
    }
    return out;
}

const RatMatrix* DualityData::at(int degree) const {
    if (degree < min_degree || degree >= min_degree + static_cast<int>(phi.size())) return nullptr;
    return &phi[static_cast<std::size_t>(degree - min_degree)];
}

Rat acyclic_duality_ratio(const PresentedComplex& A, const PresentedComplex& B, const DualityData& phi) {
    if (!A.is_acyclic()) throw Error("acyclic_duality_ratio: A is not acyclic");
    if (!B.is_acyclic()) throw Error("acyclic_duality_ratio: B is not acyclic");
    const int lo = std::min({B.min_degree, 1 - A.max_degree(), phi.min_degree});
    const int hi = std::max({B.max_degree(), 1 - A.min_degree, phi.min_degree + static_cast<int>(phi.phi.size()) - 1});

    auto phi_at = [&](int i) {
        const std::size_t rb = B.free_rank_at(i), ra = A.free_rank_at(1 - i);
        if (rb != ra) throw Error("acyclic_duality_ratio: rank B^" + std::to_string(i) + " != rank A^" + std::to_string(1 - i));
        const RatMatrix* m = phi.at(i);
        if (rb == 0) return RatMatrix(0, 0);
        if (!m || m->rows() != ra || m->cols() != rb)
            throw Error("acyclic_duality_ratio: phi^" + std::to_string(i) + " has the wrong shape");
        return *m;
    };

    Rat det = 1;
    for (int i = lo; i <= hi; ++i) {
        RatMatrix p = phi_at(i);
        if (p.rows() == 0) continue;
        Rat d = determinant(p);
        if (d == 0) throw Error("acyclic_duality_ratio: phi^" + std::to_string(i) + " is singular");
        det = (i % 2 == 0) ? Rat(det * d) : Rat(det / d);
    }

    // phi must commute with the differentials up to one global sign convention for the dual.
    bool plus_ok = true, minus_ok = true;
    for (int i = lo; i < hi; ++i) {
        RatMatrix p0 = phi_at(i), p1 = phi_at(i + 1);
        const std::size_t r0 = B.free_rank_at(i), r1 = B.free_rank_at(i + 1);
        if (r0 == 0 || r1 == 0) continue;
        RatMatrix lhs = p1 * B.free_differential(i);
        RatMatrix rhs = A.free_differential(-i).transpose() * p0;
        if (!(lhs == rhs)) plus_ok = false;
        RatMatrix neg = rhs;
        for (std::size_t a = 0; a < neg.rows(); ++a) neg.negate_row(a);
        if (!(lhs == neg)) minus_ok = false;
    }
    if (!plus_ok && !minus_ok) throw Error("acyclic_duality_ratio: phi is not a chain map to the shifted dual");

    auto torsion_product = [](const PresentedComplex& X) {
        Rat p = 1;
        for (int d = X.min_degree; d <= X.max_degree(); ++d) {
            Rat t(X.term(d).torsion_order());
            p = (d % 2 == 0) ? Rat(p * t) : Rat(p / t);
        }
        return p;
    };
    return torsion_product(B) / (abs_rat(det) * torsion_product(A));
}

std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    IntMatrix G = IntMatrix::identity(n), Ginv = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && rng() % 2) {
            G.negate_row(0);
            Ginv.negate_col(0);
        }
        return {G, Ginv};
    }
    if (steps <= 0) steps = static_cast<int>(3 * n + 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) {
            G.negate_row(a);
            Ginv.negate_col(a);
            continue;
        }
        Int k = mult(rng);
        if (k == 0) {
            G.swap_rows(a, b);
            Ginv.swap_cols(a, b);
            continue;
        }
        G.add_row(a, b, k);
        Ginv.add_col(b, a, Int(-k));
    }
    return {G, Ginv};
}

namespace {

PresentedComplex empty_complex(int lo, int hi) {
    PresentedComplex c;
    c.min_degree = lo;
    c.relations.assign(static_cast<std::size_t>(hi - lo + 1), IntMatrix(0, 0));
    c.diffs.assign(static_cast<std::size_t>(hi - lo), IntMatrix(0, 0));
    return c;
}

// Appends a summand given by relations at consecutive degrees starting at `start` and
// differentials between them.
void add_summand(PresentedComplex& c, int start, const std::vector<IntMatrix>& rels,
                 const std::vector<IntMatrix>& diffs) {
    const std::size_t first = static_cast<std::size_t>(start - c.min_degree);
    std::vector<std::size_t> old_gens;
    for (int d = c.min_degree; d <= c.max_degree(); ++d) old_gens.push_back(c.generators_at(d));
    auto piece_gens = [&](std::size_t k) -> std::size_t {
        return (k >= first && k - first < rels.size()) ? rels[k - first].rows() : 0;
    };
    for (std::size_t k = 0; k < c.relations.size(); ++k) {
        IntMatrix r = (k >= first && k - first < rels.size()) ? rels[k - first] : IntMatrix(0, 0);
        IntMatrix cur = c.relations[k];
        if (cur.rows() != old_gens[k]) cur = IntMatrix(old_gens[k], 0);
        c.relations[k] = block_diag(cur, r);
    }
    for (std::size_t k = 0; k < c.diffs.size(); ++k) {
        IntMatrix d(piece_gens(k + 1), piece_gens(k));
        if (k >= first && k - first < diffs.size()) d = diffs[k - first];
        IntMatrix cur = c.diffs[k];
        if (cur.rows() != old_gens[k + 1] || cur.cols() != old_gens[k]) cur = IntMatrix(old_gens[k + 1], old_gens[k]);
        c.diffs[k] = block_diag(cur, d);
    }
}

void add_iso(PresentedComplex& c, int d, std::size_t k) {
    add_summand(c, d, {IntMatrix(k, 0), IntMatrix(k, 0)}, {IntMatrix::identity(k)});
}

void add_torsion_iso(PresentedComplex& c, int d, long m) {
    IntMatrix r(1, 1);
    r(0, 0) = m;
    add_summand(c, d, {r, r}, {IntMatrix::identity(1)});
}

// 0 -> Z^r -P-> Z^n -> Z^n / P Z^r -> 0.
void add_presentation(PresentedComplex& c, int d, const IntMatrix& P) {
    add_summand(c, d, {IntMatrix(P.cols(), 0), IntMatrix(P.rows(), 0), P}, {P, IntMatrix::identity(P.rows())});
}

IntMatrix random_full_rank(std::mt19937_64& rng, std::size_t n, std::size_t r) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        IntMatrix P(n, r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < r; ++j) P(i, j) = entry(rng);
        if (rank(P) == r) return P;
    }
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        RatMatrix G(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) G(i, j) = entry(rng);
        if (determinant(G) != 0) return G;
    }
}

void scramble(PresentedComplex& c, std::mt19937_64& rng) {
    std::vector<std::pair<IntMatrix, IntMatrix>> g;
    for (int d = c.min_degree; d <= c.max_degree(); ++d) g.push_back(random_unimodular(rng, c.generators_at(d)));
    for (std::size_t k = 0; k < c.relations.size(); ++k) {
        auto w = random_unimodular(rng, c.relations[k].cols()).first;
        if (c.relations[k].rows() > 0) c.relations[k] = g[k].first * c.relations[k] * w;
    }
    for (std::size_t k = 0; k < c.diffs.size(); ++k)
        if (!c.diffs[k].empty()) c.diffs[k] = g[k + 1].first * c.diffs[k] * g[k].second;
}

// Standard basis vectors at the pivot columns of m, spanning a complement of ker m.
RatMatrix pivot_complement(const RatMatrix& m) {
    std::vector<std::size_t> cols;
    RatMatrix acc(m.rows(), 0);
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        RatMatrix trial = hconcat(acc, m.col_range(j, j + 1));
        if (trial.rows() > 0 && rank(trial) > r) {
            acc = trial;
            ++r;
            cols.push_back(j);
        }
    }
    RatMatrix w(m.cols(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) w(cols[k], k) = 1;
    return w;
}

}  // namespace

AcyclicPair random_acyclic_pair(std::mt19937_64& rng) {
    const int lo = -1, hi = 2;
    std::uniform_int_distribution<int> coin(0, 2), small(1, 2), tors(2, 6);
    AcyclicPair out;

    PresentedComplex A = empty_complex(lo, hi);
    const int pieces = 2 + static_cast<int>(rng() % 3);
    for (int p = 0; p < pieces; ++p) {
        switch (coin(rng)) {
            case 0: add_iso(A, lo + static_cast<int>(rng() % 3), static_cast<std::size_t>(small(rng))); break;
            case 1: add_torsion_iso(A, lo + static_cast<int>(rng() % 3), tors(rng)); break;
            default: {
                const std::size_t r = static_cast<std::size_t>(small(rng));
                add_presentation(A, lo + static_cast<int>(rng() % 2), random_full_rank(rng, r + rng() % 2, r));
            }
        }
    }
    scramble(A, rng);

    const int blo = -hi + 1, bhi = -lo + 2;
    PresentedComplex B = empty_complex(blo, bhi);
    for (int i = blo; i < bhi; ++i) {
        const std::size_t r = rank(A.free_differential(-i));
        if (r == 0) continue;
        if (i + 2 <= bhi && rng() % 2)
            add_presentation(B, i, random_full_rank(rng, r, r));
        else
            add_iso(B, i, r);
    }
    for (int t = static_cast<int>(rng() % 3); t > 0; --t)
        add_torsion_iso(B, blo + static_cast<int>(rng() % static_cast<unsigned>(bhi - blo)), tors(rng));
    scramble(B, rng);

    // phi from matching splittings of B_Q and the shifted dual of A_Q.
    auto dB = [&](int i) { return B.free_differential(i); };
    auto dE = [&](int i) { return A.free_differential(-i).transpose(); };
    std::vector<RatMatrix> WB, WE, G;
    for (int i = blo - 1; i <= bhi; ++i) {
        WB.push_back(pivot_complement(dB(i)));
        WE.push_back(pivot_complement(dE(i)));
        G.push_back(random_invertible(rng, WB.back().cols()));
    }
    out.phi.min_degree = blo;
    for (int i = blo; i <= bhi; ++i) {
        const std::size_t k = static_cast<std::size_t>(i - blo + 1);
        const std::size_t m = B.free_rank_at(i);
        if (m == 0) {
            out.phi.phi.emplace_back(0, 0);
            continue;
        }
        RatMatrix basis = hconcat(dB(i - 1) * WB[k - 1], WB[k]);
        RatMatrix target = hconcat(dE(i - 1) * WE[k - 1] * G[k - 1], WE[k] * G[k]);
        out.phi.phi.push_back(target * inverse(basis));
    }
    out.A = std::move(A);
    out.B = std::move(B);
    return out;
}

}  // namespace weilzeta
