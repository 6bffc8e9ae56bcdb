#include "weilzeta/matrix.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace weilzeta {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw Error("division by zero");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Row-reduces in place; returns pivot columns. Tracks the determinant sign/scale when asked.
std::vector<std::size_t> row_reduce(RatMatrix& a, Rat* det = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    if (det) *det = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            a.swap_rows(p, r);
            if (det) *det = -*det;
        }
        Rat inv = 1 / a(r, c);
        if (det) *det *= a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    RatMatrix a = m;
    Rat det;
    auto piv = row_reduce(a, &det);
    if (piv.size() < m.rows()) return 0;
    return det;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = row_reduce(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw Error("inverse of singular matrix");
    return aug.col_range(n, 2 * n);
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return row_reduce(a).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix kernel_basis(const RatMatrix& m) {
    RatMatrix a = m;
    auto piv = row_reduce(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], f) = -a(r, free_cols[f]);
    }
    return k;
}

bool solve(const RatMatrix& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
    if (b.size() != m.rows()) throw Error("solve: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = row_reduce(aug);
    if (!piv.empty() && piv.back() == m.cols()) return false;
    x.assign(m.cols(), Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return true;
}

double float_determinant(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        if (a[p][k] == 0.0) return 0.0;
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
    return det;
}

double float_regulator(const std::vector<std::vector<double>>& m, double entry_error, double& error) {
    const std::size_t n = m.size();
    const double d = std::abs(float_determinant(m));
    std::vector<double> norms;
    for (const auto& row : m) {
        double s = 0;
        for (double x : row) s += x * x;
        norms.push_back(std::sqrt(s) + entry_error * std::sqrt(static_cast<double>(n)));
    }
    error = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double prod = entry_error * std::sqrt(static_cast<double>(n));
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) prod *= norms[k];
        error += prod;
    }
    error += 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, d) * static_cast<double>(n * n);
    return d;
}

}  // namespace weilzeta
