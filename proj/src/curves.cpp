#include "weilzeta/curves.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <thread>

#include "weilzeta/logmono.hpp"

namespace weilzeta {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 24;

std::vector<unsigned> digits(std::uint32_t a, unsigned p, unsigned k) {
    std::vector<unsigned> d(k);
    for (unsigned i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t from_digits(const std::vector<unsigned>& d, unsigned p) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
    if (k == 0 || !is_prime_u64(p)) throw Error("finite field: need a prime p and k >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw Error("finite field: size exceeds table limit");
    }
    q_ = static_cast<std::uint32_t>(q);
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    // Monic candidates x^k + c_{k-1} x^{k-1} + ... + c_0, tried in increasing order of (c_0, ..., c_{k-1}).
    for (std::uint32_t idx = 1; idx < q_; ++idx) {
        auto c = digits(idx, p, k);
        if (c[0] == 0) continue;
        std::uint32_t cur = 1;
        bool primitive = true;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            if (i > 0 && cur == 1) {
                primitive = false;
                break;
            }
            exp_[i] = cur;
            auto d = digits(cur, p, k);
            const unsigned top = d[k - 1];
            for (unsigned j = k; j-- > 0;) {
                const unsigned lower = j > 0 ? d[j - 1] : 0;
                d[j] = (lower + p * p - top * c[j] % p) % p;
            }
            cur = from_digits(d, p);
        }
        if (!primitive || cur != 1) continue;
        modulus_.assign(c.begin(), c.end());
        modulus_.push_back(1);
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i + q_ - 1] = exp_[i];
            log_[exp_[i]] = i;
        }
        zech_.assign(q_ - 1, q_ - 1);
        for (std::uint32_t d = 0; d < q_ - 1; ++d) {
            auto v = digits(exp_[d], p, k);
            v[0] = (v[0] + 1) % p;
            const auto s = from_digits(v, p);
            if (s != 0) zech_[d] = log_[s];
        }
        return;
    }
    throw Error("finite field: no primitive polynomial found");
}

FiniteField FiniteField::of_size(std::uint64_t q) {
    if (q < 2) throw Error("finite field: q must be a prime power");
    auto f = factor_u64(q);
    if (f.size() != 1) throw Error("finite field: q must be a prime power");
    return FiniteField(static_cast<unsigned>(f.begin()->first), static_cast<unsigned>(f.begin()->second));
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return (a + b) % p_;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    const std::uint32_t z = zech_[(log_[b] + q_ - 1 - la) % (q_ - 1)];
    return z == q_ - 1 ? 0 : exp_[la + z];
}

FiniteField::Elem FiniteField::neg(Elem a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw Error("finite field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

FiniteField::Elem FiniteField::from_int(long n) const { return static_cast<Elem>(((n % long(p_)) + long(p_)) % long(p_)); }

bool FiniteField::is_square(Elem a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

Embedding::Embedding(const FiniteField& base, const FiniteField& ext) : ext_(&ext), p_(base.characteristic()) {
    if (base.characteristic() != ext.characteristic() || ext.degree() % base.degree() != 0)
        throw Error("embedding: not a subfield");
    const std::uint64_t step = (std::uint64_t(ext.size()) - 1) / (std::uint64_t(base.size()) - 1);
    const auto& f = base.modulus();
    for (std::uint64_t j = 0; j + 1 < base.size(); ++j) {
        const auto beta = ext.pow(ext.generator(), j * step);
        FiniteField::Elem v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = ext.add(ext.mul(v, beta), ext.from_int(f[i]));
        if (v != 0) continue;
        powers_.assign(base.degree(), 1);
        for (std::size_t i = 1; i < powers_.size(); ++i) powers_[i] = ext.mul(powers_[i - 1], beta);
        return;
    }
    throw Error("embedding: no root of the base modulus");
}

FiniteField::Elem Embedding::operator()(const FqElem& c) const {
    if (c.size() > powers_.size()) throw Error("embedding: element not reduced");
    FiniteField::Elem v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v = ext_->add(v, ext_->mul(ext_->from_int(c[i]), powers_[i]));
    return v;
}

namespace {

// Polynomial in (a, x, y, z) over Z.
using Key = std::array<int, 4>;
using ZPoly = std::map<Key, Int>;

ZPoly zmul(const ZPoly& f, const ZPoly& g) {
    ZPoly r;
    for (const auto& [a, c] : f)
        for (const auto& [b, d] : g) {
            Key k{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
            r[k] += c * d;
        }
    return r;
}

ZPoly zadd(ZPoly f, const ZPoly& g, int sign) {
    for (const auto& [k, c] : g) f[k] += sign * c;
    return f;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    ZPoly parse() {
        auto f = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return f;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("polynomial: " + what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    ZPoly expr() {
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = s_[i_++] == '-' ? -1 : 1;
        ZPoly f = zadd({}, term(), sign);
        while (peek() == '+' || peek() == '-') {
            sign = s_[i_++] == '-' ? -1 : 1;
            f = zadd(std::move(f), term(), sign);
        }
        return f;
    }

    ZPoly term() {
        ZPoly f = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++i_;
                f = zmul(f, power());
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                f = zmul(f, power());
            } else {
                return f;
            }
        }
    }

    ZPoly power() {
        ZPoly b = atom();
        if (peek() == '^') {
            ++i_;
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("expected exponent");
            const int e = std::stoi(s_.substr(start, i_ - start));
            ZPoly r{{Key{0, 0, 0, 0}, Int(1)}};
            for (int j = 0; j < e; ++j) r = zmul(r, b);
            return r;
        }
        return b;
    }

    ZPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++i_;
            auto f = expr();
            if (peek() != ')') fail("expected ')'");
            ++i_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return {{Key{0, 0, 0, 0}, Int(s_.substr(start, i_ - start))}};
        }
        Key k{0, 0, 0, 0};
        switch (c) {
            case 'a': k[0] = 1; break;
            case 'x': k[1] = 1; break;
            case 'y': k[2] = 1; break;
            case 'z': k[3] = 1; break;
            default: fail("unexpected token");
        }
        ++i_;
        return {{k, Int(1)}};
    }
};

// c * a^e reduced modulo the field modulus, coefficients in [0, p).
void add_reduced(FqElem& out, const FiniteField& F, int e, const Int& c) {
    const long p = F.characteristic();
    const auto& m = F.modulus();
    const std::size_t k = F.degree();
    std::vector<long> v(std::max<std::size_t>(k, e + 1), 0);
    v[e] = mpz_fdiv_ui(c.get_mpz_t(), p);
    for (std::size_t d = v.size(); d-- > k;) {
        const long top = v[d];
        if (top == 0) continue;
        for (std::size_t j = 0; j < k; ++j) v[d - k + j] = ((v[d - k + j] - top * long(m[j])) % p + p) % p;
        v[d] = 0;
    }
    out.resize(k, 0);
    for (std::size_t j = 0; j < k; ++j) out[j] = (out[j] + v[j]) % p;
}

bool fq_is_zero(const FqElem& c) {
    return std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
}

bool is_plane(CurveKind k) { return k == CurveKind::projective_plane || k == CurveKind::affine_plane; }

struct Evaluator {
    const FiniteField& F;
    std::vector<std::pair<FiniteField::Elem, std::array<int, 3>>> terms;
    int deg_y = 0;

    Evaluator(const FiniteField& ext, const Embedding& emb, const std::vector<Monomial>& eq) : F(ext) {
        for (const auto& m : eq) {
            terms.push_back({emb(m.coef), {m.ex, m.ey, m.ez}});
            deg_y = std::max(deg_y, m.ey);
        }
    }

    FiniteField::Elem operator()(FiniteField::Elem x, FiniteField::Elem y, FiniteField::Elem z) const {
        FiniteField::Elem v = 0;
        for (const auto& [c, e] : terms)
            v = F.add(v, F.mul(c, F.mul(F.pow(x, e[0]), F.mul(F.pow(y, e[1]), F.pow(z, e[2])))));
        return v;
    }

    /// Coefficients in y with x and z fixed.
    std::vector<FiniteField::Elem> row(FiniteField::Elem x, FiniteField::Elem z) const {
        std::vector<FiniteField::Elem> r(deg_y + 1, 0);
        for (const auto& [c, e] : terms) r[e[1]] = F.add(r[e[1]], F.mul(c, F.mul(F.pow(x, e[0]), F.pow(z, e[2]))));
        return r;
    }

    FiniteField::Elem horner(const std::vector<FiniteField::Elem>& r, FiniteField::Elem y) const {
        FiniteField::Elem v = 0;
        for (std::size_t i = r.size(); i-- > 0;) v = F.add(F.mul(v, y), r[i]);
        return v;
    }
};

std::vector<Monomial> derivative(const std::vector<Monomial>& eq, int var, unsigned p) {
    std::vector<Monomial> out;
    for (const auto& m : eq) {
        const int e = var == 0 ? m.ex : var == 1 ? m.ey : m.ez;
        if (e % long(p) == 0) continue;
        Monomial d = m;
        for (auto& c : d.coef) c = (c * e) % long(p);
        (var == 0 ? d.ex : var == 1 ? d.ey : d.ez) -= 1;
        out.push_back(d);
    }
    return out;
}

// Counts plane points where all evaluators vanish, parallel over x.
std::uint64_t count_plane(const FiniteField& F, CurveKind kind, const std::vector<Evaluator>& eqs) {
    const std::uint32_t Q = F.size();
    auto vanish = [&](FiniteField::Elem x, FiniteField::Elem y, FiniteField::Elem z) {
        for (const auto& e : eqs)
            if (e(x, y, z) != 0) return false;
        return true;
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = Q >= 128 ? std::min(hw, 8u) : 1u;
    std::vector<std::uint64_t> partial(nthreads, 0);
    auto work = [&](unsigned t) {
        std::uint64_t c = 0;
        std::vector<std::vector<FiniteField::Elem>> rows(eqs.size());
        for (std::uint32_t x = t; x < Q; x += nthreads) {
            for (std::size_t i = 0; i < eqs.size(); ++i) rows[i] = eqs[i].row(x, 1);
            for (std::uint32_t y = 0; y < Q; ++y) {
                bool zero = true;
                for (std::size_t i = 0; i < eqs.size() && zero; ++i) zero = eqs[i].horner(rows[i], y) == 0;
                c += zero;
            }
        }
        partial[t] = c;
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (auto c : partial) total += c;
    if (kind == CurveKind::projective_plane) {
        for (std::uint32_t x = 0; x < Q; ++x) total += vanish(x, 1, 0);
        total += vanish(1, 0, 0);
    }
    return total;
}

void check_budget(const CurveModel& X, unsigned n, std::uint64_t budget) {
    Int Q2;
    mpz_ui_pow_ui(Q2.get_mpz_t(), X.q, 2 * n);
    if (Q2 > Int(std::to_string(budget))) throw Error("count_points: enumeration budget exceeded");
}

FiniteField extension(const CurveModel& X, unsigned n) {
    const auto base = X.base_field();
    return FiniteField(base.characteristic(), base.degree() * n);
}

Int ipow(const Int& b, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

std::vector<Monomial> parse_polynomial(const std::string& text, const FiniteField& Fq) {
    auto f = Parser(text).parse();
    std::map<std::array<int, 3>, FqElem> grouped;
    for (const auto& [k, c] : f) {
        if (c == 0) continue;
        add_reduced(grouped[{k[1], k[2], k[3]}], Fq, k[0], c);
    }
    std::vector<Monomial> out;
    for (const auto& [e, c] : grouped)
        if (!fq_is_zero(c)) out.push_back({c, e[0], e[1], e[2]});
    return out;
}

const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::projective_plane: return "projective_plane";
        case CurveKind::affine_plane: return "affine_plane";
        case CurveKind::p1: return "p1";
        case CurveKind::p1_minus_points: return "p1_minus_points";
    }
    return "?";
}

CurveKind curve_kind_from_string(const std::string& s) {
    for (auto k : {CurveKind::projective_plane, CurveKind::affine_plane, CurveKind::p1, CurveKind::p1_minus_points})
        if (s == to_string(k)) return k;
    throw Error("unknown curve kind: " + s);
}

void CurveModel::validate() const {
    const auto F = base_field();
    if (constant_degree == 0) throw Error("curve: constant degree must be positive");
    if (!is_plane(kind)) {
        if (!equation.empty()) throw Error("curve: P^1 models take no equation");
        if (kind == CurveKind::p1 && !removed.empty()) throw Error("curve: use p1_minus_points to remove points");
        for (std::size_t i = 0; i < removed.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (removed[i] == removed[j]) throw Error("curve: removed points must be distinct");
        return;
    }
    if (equation.empty()) throw Error("curve: empty equation");
    int total = -1;
    for (const auto& m : equation) {
        if (kind == CurveKind::affine_plane && m.ez != 0) throw Error("curve: affine equation may not involve z");
        const int d = m.ex + m.ey + m.ez;
        if (kind == CurveKind::projective_plane) {
            if (total >= 0 && d != total) throw Error("curve: projective equation must be homogeneous");
            total = d;
        }
    }
    Embedding id(F, F);
    Evaluator ev(F, id, equation);
    for (std::size_t i = 0; i < removed.size(); ++i) {
        const auto& pt = removed[i];
        if (kind == CurveKind::affine_plane && !fq_is_zero(pt[2]) && pt[2] != FqElem{1})
            throw Error("curve: affine removed points need z = 1");
        if (ev(id(pt[0]), id(pt[1]), kind == CurveKind::affine_plane ? 1 : id(pt[2])) != 0)
            throw Error("curve: removed point is not on the curve");
        for (std::size_t j = 0; j < i; ++j)
            if (removed[j] == pt) throw Error("curve: removed points must be distinct");
    }
}

Int count_points(const CurveModel& X, unsigned n, std::uint64_t budget) {
    if (n == 0) throw Error("count_points: n must be positive");
    X.validate();
    if (!is_plane(X.kind)) {
        if (n % X.constant_degree != 0) return 0;
        return Int(X.constant_degree) * (ipow(Int(X.q), n) + 1 - Int(X.removed.size()));
    }
    check_budget(X, n, budget);
    const auto F = extension(X, n);
    Embedding emb(X.base_field(), F);
    std::vector<Evaluator> eqs{Evaluator(F, emb, X.equation)};
    return Int(count_plane(F, X.kind, eqs)) - Int(X.removed.size());
}

std::uint64_t singular_point_count(const CurveModel& X, unsigned n, std::uint64_t budget) {
    X.validate();
    if (!is_plane(X.kind)) return 0;
    check_budget(X, n, budget);
    const auto F = extension(X, n);
    Embedding emb(X.base_field(), F);
    const unsigned p = F.characteristic();
    std::vector<Evaluator> eqs{Evaluator(F, emb, X.equation), Evaluator(F, emb, derivative(X.equation, 0, p)),
                               Evaluator(F, emb, derivative(X.equation, 1, p))};
    if (X.kind == CurveKind::projective_plane) eqs.emplace_back(F, emb, derivative(X.equation, 2, p));
    return count_plane(F, X.kind, eqs);
}

std::string ZetaRational::to_string() const {
    return "(" + poly_to_string(num, "t") + ") / (" + poly_to_string(den, "t") + ")";
}

bool same_function(const ZetaRational& a, const ZetaRational& b) {
    return a.q == b.q && poly_mul(a.num, b.den) == poly_mul(b.num, a.den);
}

std::vector<Int> counts_from_zeta(const ZetaRational& Z, std::size_t B) {
    auto power_sums = [B](const IntPoly& P) {
        std::vector<Int> L(B + 1, 0);
        auto a = [&](std::size_t i) { return i < P.size() ? P[i] : Int(0); };
        for (std::size_t n = 1; n <= B; ++n) {
            Int v = Int(n) * a(n);
            for (std::size_t i = 1; i < n; ++i) v -= a(i) * L[n - i];
            L[n] = v;
        }
        return L;
    };
    const auto ln = power_sums(Z.num), ld = power_sums(Z.den);
    std::vector<Int> N(B);
    for (std::size_t n = 1; n <= B; ++n) N[n - 1] = ln[n] - ld[n];
    return N;
}

ZetaRational zeta_from_counts(const std::vector<Int>& counts, std::size_t deg_num, std::size_t deg_den, const Int& q) {
    const std::size_t B = counts.size();
    if (B < deg_num + deg_den) throw Error("zeta_from_counts: need at least deg num + deg den counts");
    std::vector<Rat> c(B + 1, Rat(0));
    c[0] = 1;
    for (std::size_t m = 1; m <= B; ++m) {
        Rat s = 0;
        for (std::size_t n = 1; n <= m; ++n) s += Rat(counts[n - 1]) * c[m - n];
        c[m] = s / Rat(Int(m));
    }
    auto coef = [&](long i) { return i < 0 ? Rat(0) : c[i]; };
    std::vector<Rat> d(deg_den + 1, Rat(0));
    d[0] = 1;
    if (deg_den > 0) {
        RatMatrix A(B - deg_num, deg_den);
        std::vector<Rat> rhs(B - deg_num);
        for (std::size_t r = 0; r < B - deg_num; ++r) {
            const long m = static_cast<long>(deg_num + 1 + r);
            for (std::size_t j = 1; j <= deg_den; ++j) A(r, j - 1) = coef(m - static_cast<long>(j));
            rhs[r] = -c[m];
        }
        if (rank(A) < deg_den) throw Error("zeta_from_counts: degree bounds do not determine a unique solution");
        std::vector<Rat> x;
        if (!solve(A, rhs, x)) throw Error("zeta_from_counts: counts inconsistent with the degree bounds");
        for (std::size_t j = 1; j <= deg_den; ++j) d[j] = x[j - 1];
    } else {
        for (std::size_t m = deg_num + 1; m <= B; ++m)
            if (c[m] != 0) throw Error("zeta_from_counts: counts inconsistent with the degree bounds");
    }
    ZetaRational Z;
    Z.q = q;
    Z.den.clear();
    for (const auto& v : d) {
        if (v.get_den() != 1) throw Error("zeta_from_counts: non-integral denominator");
        Z.den.push_back(v.get_num());
    }
    Z.num.clear();
    for (std::size_t i = 0; i <= deg_num; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j <= std::min(i, deg_den); ++j) s += d[j] * c[i - j];
        if (s.get_den() != 1) throw Error("zeta_from_counts: non-integral numerator");
        Z.num.push_back(s.get_num());
    }
    trim(Z.num);
    trim(Z.den);
    if (counts_from_zeta(Z, B) != counts) throw Error("zeta_from_counts: solution does not reproduce the counts");
    return Z;
}

SpecialValue zeta_special_value(const ZetaRational& Z) {
    auto [rn, gn] = split_one_minus_u(Z.num);
    auto [rd, gd] = split_one_minus_u(Z.den);
    const int rho = rn - rd;
    const Rat w = poly_eval(gn, Rat(1)) / poly_eval(gd, Rat(1));
    return SpecialValue::from_exact(rho, LogMonomial(w) * LogMonomial::log_power(Z.q.get_ui(), rho));
}

Int picard_zero_order(const ZetaRational& Z) {
    std::size_t f = 1;
    while (f < Z.den.size() && Z.den[f] == 0) ++f;
    IntPoly a(f + 1, 0), b(f + 1, 0);
    a[0] = b[0] = 1;
    a[f] = -1;
    b[f] = -ipow(Z.q, static_cast<unsigned>(f));
    if (f >= Z.den.size() || Z.den != poly_mul(a, b))
        throw Error("picard_zero_order: not the zeta function of a smooth proper curve");
    const Rat h = poly_eval(Z.num, Rat(1));
    if (h <= 0 || h.get_den() != 1) throw Error("picard_zero_order: P(1) is not a positive integer");
    return h.get_num();
}

bool functional_equation_holds(const ZetaRational& Z, unsigned constant_degree) {
    const unsigned f = constant_degree;
    IntPoly P;
    for (std::size_t i = 0; i < Z.num.size(); ++i) {
        if (i % f != 0) {
            if (Z.num[i] != 0) return false;
            continue;
        }
        P.push_back(Z.num[i]);
    }
    const int d = degree(P);
    if (d < 0 || d % 2 != 0) return false;
    const unsigned g = d / 2;
    const Int qf = ipow(Z.q, f);
    for (unsigned i = 0; i <= g; ++i)
        if (P[2 * g - i] != ipow(qf, g - i) * P[i]) return false;
    return true;
}

std::vector<std::string> curve_catalog_names() {
    return {"p1",        "p1_minus_point", "p1_over_fq2",  "elliptic_f5",  "elliptic_f5_open", "elliptic_f2",
            "cusp_f2",   "split_node",     "nonsplit_node", "cusp",        "affine_node",      "a1_over_fq2"};
}

CatalogCurve catalog_curve(const std::string& name, std::uint64_t q) {
    const auto F = FiniteField::of_size(q);
    auto need_q = [&](std::uint64_t want) {
        if (q != want) throw Error("catalog: " + name + " is defined over F_" + std::to_string(want));
    };
    auto need_odd = [&] {
        if (q % 2 == 0) throw Error("catalog: " + name + " needs odd characteristic");
    };
    CatalogCurve C;
    C.model.q = q;
    C.model.name = name;
    auto plane = [&](CurveKind kind, const std::string& eq) {
        C.model.kind = kind;
        C.model.equation = parse_polynomial(eq, F);
    };
    if (name == "p1") {
        C.deg_den = 2;
        C.smooth_proper = true;
    } else if (name == "p1_minus_point") {
        C.model.kind = CurveKind::p1_minus_points;
        C.model.removed.push_back({FqElem{1}, FqElem{}, FqElem{}});
        C.deg_den = 1;
    } else if (name == "p1_over_fq2") {
        C.model.constant_degree = 2;
        C.deg_den = 4;
        C.smooth_proper = true;
    } else if (name == "elliptic_f5" || name == "elliptic_f5_open") {
        need_q(5);
        plane(CurveKind::projective_plane, "y^2*z - x^3 - x*z^2");
        C.genus = 1;
        C.deg_num = 2;
        if (name == "elliptic_f5") {
            C.deg_den = 2;
            C.smooth_proper = true;
        } else {
            C.model.removed.push_back({FqElem{}, FqElem{1}, FqElem{}});
            C.deg_den = 1;
        }
    } else if (name == "elliptic_f2") {
        need_q(2);
        plane(CurveKind::projective_plane, "y^2*z + y*z^2 - x^3");
        C.genus = 1;
        C.deg_num = C.deg_den = 2;
        C.smooth_proper = true;
    } else if (name == "cusp_f2") {
        need_q(2);
        plane(CurveKind::projective_plane, "y^2*z - x^3 - z^3");
        C.deg_den = 2;
    } else if (name == "split_node") {
        need_odd();
        plane(CurveKind::projective_plane, "y^2*z - x^3 - x^2*z");
        C.deg_den = 1;
    } else if (name == "nonsplit_node") {
        need_odd();
        plane(CurveKind::projective_plane, "y^2*z - x^3 - a*x^2*z");
        C.deg_num = 1;
        C.deg_den = 2;
    } else if (name == "cusp") {
        plane(CurveKind::projective_plane, "y^2*z - x^3");
        C.deg_den = 2;
    } else if (name == "affine_node") {
        need_odd();
        plane(CurveKind::affine_plane, "y^2 - x^3 - x^2");
        C.deg_num = C.deg_den = 1;
    } else if (name == "a1_over_fq2") {
        need_odd();
        plane(CurveKind::affine_plane, "x^2 - a");
        C.model.constant_degree = 2;
        C.deg_den = 2;
    } else {
        throw Error("catalog: unknown curve " + name);
    }
    C.model.validate();
    return C;
}

ZetaRational curve_zeta(const CatalogCurve& C, std::uint64_t budget) {
    const std::size_t B = C.deg_num + C.deg_den + 1;
    std::vector<Int> counts;
    for (unsigned n = 1; n <= B; ++n) counts.push_back(count_points(C.model, n, budget));
    return zeta_from_counts(counts, C.deg_num, C.deg_den, Int(C.model.q));
}

ZetaRational remove_points(const ZetaRational& Z, const std::vector<unsigned>& degrees) {
    ZetaRational U = Z;
    for (unsigned d : degrees) {
        if (d == 0) throw Error("remove_points: degree must be positive");
        IntPoly g(d + 1, 0);
        g[0] = 1;
        g[d] = -1;
        // Exact division of den by 1 - t^d when possible, else multiply num.
        IntPoly quot, rem = U.den;
        bool divides = degree(rem) >= static_cast<int>(d);
        if (divides) {
            quot.assign(rem.size() - d, 0);
            for (std::size_t i = 0; i < quot.size(); ++i) {
                quot[i] = rem[i];
                rem[i] = 0;
                rem[i + d] += quot[i];
            }
            trim(rem);
            divides = rem.empty();
        }
        if (divides) {
            trim(quot);
            U.den = quot;
        } else {
            U.num = poly_mul(U.num, g);
        }
    }
    return U;
}

}  // namespace weilzeta
