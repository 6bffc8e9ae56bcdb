#include "weilzeta/logmono.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace weilzeta {

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factor_u64(n);
    return f.size() == 1 && f[0].second == 1;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factor_u64(n);
    if (f.size() != 1) return std::nullopt;
    return f[0];
}

LogMonomial::LogMonomial(Rat c, std::map<std::uint64_t, int> exps) : coefficient_(std::move(c)) {
    coefficient_.canonicalize();
    for (auto& [p, e] : exps)
        if (e != 0) exps_[p] = e;
}

LogMonomial LogMonomial::log_power(std::uint64_t n, int e) { return logmono_normalize(Rat(1), {{n, e}}); }

int LogMonomial::log_degree() const {
    int d = 0;
    for (const auto& [p, e] : exps_) d += e;
    return d;
}

double LogMonomial::evaluate() const {
    double v = coefficient_.get_d();
    for (const auto& [p, e] : exps_) v *= std::pow(std::log(static_cast<double>(p)), e);
    return v;
}

double LogMonomial::evaluation_error() const {
    // Each rounding step contributes at most one ulp-scale relative error.
    int steps = 2;
    for (const auto& [p, e] : exps_) steps += 2 + std::abs(e);
    return std::abs(evaluate()) * steps * 4 * std::numeric_limits<double>::epsilon();
}

std::string LogMonomial::to_string() const {
    std::ostringstream os;
    os << coefficient_.get_str();
    for (const auto& [p, e] : exps_) {
        os << "*log(" << p << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LogMonomial LogMonomial::inverse() const {
    if (coefficient_ == 0) throw Error("inverse of zero log-monomial");
    std::map<std::uint64_t, int> e;
    for (const auto& [p, k] : exps_) e[p] = -k;
    return LogMonomial(1 / coefficient_, std::move(e));
}

LogMonomial operator*(const LogMonomial& a, const LogMonomial& b) {
    auto e = a.exps_;
    for (const auto& [p, k] : b.exps_) e[p] += k;
    return LogMonomial(a.coefficient_ * b.coefficient_, std::move(e));
}

LogMonomial logmono_normalize(const Rat& c, const std::vector<std::pair<std::uint64_t, int>>& factors) {
    Rat coef = c;
    std::map<std::uint64_t, int> exps;
    for (const auto& [n, e] : factors) {
        if (n <= 1) throw Error("log-monomial factor must be an integer >= 2");
        auto pp = prime_power(n);
        if (!pp) throw Error("log(" + std::to_string(n) + ") is not a rational multiple of a prime log");
        const auto [p, k] = *pp;
        Int ke;
        mpz_ui_pow_ui(ke.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(std::abs(e)));
        if (e >= 0)
            coef *= ke;
        else
            coef /= ke;
        exps[p] += e;
    }
    return LogMonomial(coef, std::move(exps));
}

}  // namespace weilzeta
