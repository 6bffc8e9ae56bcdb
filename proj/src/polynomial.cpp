#include "weilzeta/polynomial.hpp"

#include <sstream>

namespace weilzeta {

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

Rat poly_eval(const IntPoly& f, const Rat& x) {
    Rat v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

IntPoly poly_inflate(const IntPoly& f, unsigned n) {
    if (f.empty()) return {};
    IntPoly g((f.size() - 1) * n + 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) g[i * n] = f[i];
    return g;
}

IntPoly charpoly(const IntMatrix& A) {
    // Faddeev-LeVerrier over Q; every division is exact in the end.
    if (A.rows() != A.cols()) throw Error("charpoly of non-square matrix");
    const std::size_t n = A.rows();
    RatMatrix a = to_rational(A);
    RatMatrix M(n, n);
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next = a * M;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        M = next;
        RatMatrix AM = a * M;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    IntPoly f(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (c[i].get_den() != 1) throw Error("charpoly: non-integral coefficient");
        f[i] = c[i].get_num();
    }
    return f;
}

IntPoly reciprocal_charpoly(const IntMatrix& A) {
    auto p = charpoly(A);
    IntPoly r(p.rbegin(), p.rend());
    trim(r);
    return r;
}

std::pair<int, IntPoly> split_one_minus_u(IntPoly f) {
    trim(f);
    if (f.empty()) throw Error("split_one_minus_u: zero polynomial");
    int r = 0;
    for (;;) {
        Int s = 0;
        for (const auto& c : f) s += c;
        if (s != 0) break;
        // f = (1 - u) g: g_0 = f_0, g_k = g_{k-1} + f_k.
        IntPoly g(f.size() - 1);
        Int acc = 0;
        for (std::size_t k = 0; k + 1 < f.size(); ++k) {
            acc += f[k];
            g[k] = acc;
        }
        f = std::move(g);
        trim(f);
        ++r;
    }
    return {r, f};
}

std::string poly_to_string(const IntPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Int c = f[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Int a = abs_int(c);
        if (i == 0 || a != 1) os << a;
        if (i > 0) os << (i == 0 || a != 1 ? "*" : "") << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace weilzeta
