#include "weilzeta/smith.hpp"

#include <algorithm>
#include <sstream>

namespace weilzeta {

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

struct SnfState {
    IntMatrix M, U, Uinv, V;

    void swap_rows(std::size_t a, std::size_t b) {
        M.swap_rows(a, b);
        U.swap_rows(a, b);
        Uinv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        M.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    // row[dst] += k row[src]; inverse transform subtracts column dst from column src.
    void add_row(std::size_t dst, std::size_t src, const Int& k) {
        M.add_row(dst, src, k);
        U.add_row(dst, src, k);
        Uinv.add_col(src, dst, Int(-k));
    }
    void add_col(std::size_t dst, std::size_t src, const Int& k) {
        M.add_col(dst, src, k);
        V.add_col(dst, src, k);
    }
    void negate_row(std::size_t r) {
        M.negate_row(r);
        U.negate_row(r);
        Uinv.negate_col(r);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SnfState s{A, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Smallest nonzero |entry| in the trailing block becomes the pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (s.M(i, j) == 0) continue;
                Int a = abs_int(s.M(i, j));
                if (!found || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        s.swap_rows(t, pr);
        s.swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.M(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.M(i, t).get_mpz_t(), s.M(t, t).get_mpz_t());
                s.add_row(i, t, Int(-q));
                if (s.M(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.M(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s.M(t, j).get_mpz_t(), s.M(t, t).get_mpz_t());
                s.add_col(j, t, Int(-q));
                if (s.M(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder is smaller than the pivot; promote the smallest one.
                std::size_t br = t, bc = t;
                Int b = abs_int(s.M(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (s.M(i, t) != 0 && abs_int(s.M(i, t)) < b) {
                        b = abs_int(s.M(i, t));
                        br = i;
                        bc = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.M(t, j) != 0 && abs_int(s.M(t, j)) < b) {
                        b = abs_int(s.M(t, j));
                        br = t;
                        bc = j;
                    }
                s.swap_rows(t, br);
                s.swap_cols(t, bc);
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(s.M(i, j).get_mpz_t(), s.M(t, t).get_mpz_t())) {
                        s.add_row(t, i, Int(1));
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        if (s.M(t, t) < 0) s.negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    out.U = std::move(s.U);
    out.Uinv = std::move(s.Uinv);
    out.D = std::move(s.M);
    out.V = std::move(s.V);
    return out;
}

FgAb FgAb::cyclic(const Int& n) { return from_cyclic_orders({n}); }

FgAb FgAb::from_cyclic_orders(const std::vector<Int>& orders) {
    // Canonicalize via SNF of the diagonal relation matrix.
    std::size_t free = 0;
    std::vector<Int> finite;
    for (const auto& o : orders) {
        if (o == 0)
            ++free;
        else if (abs_int(o) != 1)
            finite.push_back(abs_int(o));
    }
    FgAb g;
    g.free_rank = free;
    if (finite.empty()) return g;
    IntMatrix d(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
    auto sf = smith_normal_form(d);
    for (const auto& x : sf.diagonal())
        if (x != 1) g.invariant_factors.push_back(x);
    return g;
}

Int FgAb::torsion_order() const {
    Int p = 1;
    for (const auto& d : invariant_factors) p *= d;
    return p;
}

std::string FgAb::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FgAb direct_sum(const FgAb& a, const FgAb& b) {
    std::vector<Int> orders(a.invariant_factors);
    orders.insert(orders.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    orders.insert(orders.end(), a.free_rank + b.free_rank, Int(0));
    return FgAb::from_cyclic_orders(orders);
}

FgAb cokernel_group(const IntMatrix& A) {
    if (A.rows() == 0) return {};
    if (A.cols() == 0) return FgAb::free(A.rows());
    auto sf = smith_normal_form(A);
    std::vector<Int> orders(A.rows(), Int(0));
    for (std::size_t i = 0; i < sf.rank; ++i) orders[i] = sf.D(i, i);
    return FgAb::from_cyclic_orders(orders);
}

IntMatrix integer_kernel(const IntMatrix& A) {
    if (A.rows() == 0) return IntMatrix::identity(A.cols());
    auto sf = smith_normal_form(A);
    return sf.V.col_range(sf.rank, A.cols());
}

IntMatrix lattice_basis(const IntMatrix& A) {
    if (A.cols() == 0 || A.rows() == 0) return IntMatrix(A.rows(), 0);
    auto sf = smith_normal_form(A);
    IntMatrix b(A.rows(), sf.rank);
    for (std::size_t j = 0; j < sf.rank; ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) b(i, j) = sf.Uinv(i, j) * sf.D(j, j);
    return b;
}

Subquotient::Subquotient(const IntMatrix& L, const IntMatrix& N) : ambient_(L.rows()) {
    if (N.cols() > 0 && N.rows() != L.rows()) throw Error("subquotient: ambient dimension mismatch");
    std::size_t r = 0;
    if (L.cols() > 0 && L.rows() > 0) {
        auto sf = smith_normal_form(L);
        r = sf.rank;
        lattice_U_ = sf.U;
        for (std::size_t j = 0; j < r; ++j) lattice_d_.push_back(sf.D(j, j));
        basis_ = IntMatrix(L.rows(), r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < L.rows(); ++i) basis_(i, j) = sf.Uinv(i, j) * sf.D(j, j);
    } else {
        lattice_U_ = IntMatrix::identity(L.rows());
        basis_ = IntMatrix(L.rows(), 0);
    }
    IntMatrix C(r, N.cols());
    for (std::size_t j = 0; j < N.cols(); ++j) {
        auto y = lattice_coordinates(N.column(j));
        for (std::size_t i = 0; i < r; ++i) C(i, j) = y[i];
    }
    IntMatrix Uc_inv;
    if (r > 0 && N.cols() > 0) {
        auto sc = smith_normal_form(C);
        coord_transform_ = sc.U;
        Uc_inv = sc.Uinv;
        all_orders_.assign(r, Int(0));
        for (std::size_t i = 0; i < sc.rank; ++i) all_orders_[i] = sc.D(i, i);
    } else {
        coord_transform_ = IntMatrix::identity(r);
        Uc_inv = IntMatrix::identity(r);
        all_orders_.assign(r, Int(0));
    }
    for (std::size_t i = 0; i < r; ++i)
        if (all_orders_[i] != 1) kept_.push_back(i);
    group_ = FgAb::from_cyclic_orders(all_orders_);
    IntMatrix gens_L(r, kept_.size());
    for (std::size_t k = 0; k < kept_.size(); ++k)
        for (std::size_t i = 0; i < r; ++i) gens_L(i, k) = Uc_inv(i, kept_[k]);
    generators_ = r > 0 ? basis_ * gens_L : IntMatrix(ambient_, 0);
    for (auto k : kept_) orders_.push_back(all_orders_[k]);
}

std::vector<Int> Subquotient::lattice_coordinates(const std::vector<Int>& x) const {
    if (x.size() != ambient_) throw Error("subquotient: vector has wrong length");
    auto ux = lattice_U_ * x;
    std::vector<Int> y(lattice_d_.size());
    for (std::size_t i = 0; i < ux.size(); ++i) {
        if (i < lattice_d_.size()) {
            if (!mpz_divisible_p(ux[i].get_mpz_t(), lattice_d_[i].get_mpz_t()))
                throw Error("subquotient: vector not in lattice");
            y[i] = ux[i] / lattice_d_[i];
        } else if (ux[i] != 0) {
            throw Error("subquotient: vector not in lattice");
        }
    }
    return y;
}

std::vector<Int> Subquotient::coordinates(const std::vector<Int>& x) const {
    auto y = lattice_coordinates(x);
    auto z = coord_transform_ * y;
    std::vector<Int> out;
    for (auto k : kept_) {
        Int c = z[k];
        if (all_orders_[k] != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), all_orders_[k].get_mpz_t());
        out.push_back(c);
    }
    return out;
}

std::vector<std::size_t> Subquotient::free_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < orders_.size(); ++k)
        if (orders_[k] == 0) idx.push_back(k);
    return idx;
}

IntMatrix Subquotient::free_generators() const {
    auto idx = free_indices();
    IntMatrix g(ambient_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < ambient_; ++i) g(i, k) = generators_(i, idx[k]);
    return g;
}

}  // namespace weilzeta
