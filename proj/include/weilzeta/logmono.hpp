#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/matrix.hpp"

namespace weilzeta {

/// Exact value  coefficient * prod_p (log p)^{e_p}  over distinct primes p.
///
/// Logs of distinct primes are linearly independent over Q, so two monomials are equal
/// as real numbers iff coefficient and exponent map agree.
class LogMonomial {
public:
    LogMonomial() = default;
    explicit LogMonomial(Rat c) : coefficient_(std::move(c)) { coefficient_.canonicalize(); }
    LogMonomial(Rat c, std::map<std::uint64_t, int> exps);

    static LogMonomial one() { return LogMonomial(Rat(1)); }
    /// (log n)^e, with n >= 2 factored into primes.
    static LogMonomial log_power(std::uint64_t n, int e);

    const Rat& coefficient() const { return coefficient_; }
    const std::map<std::uint64_t, int>& exponents() const { return exps_; }
    bool is_rational() const { return exps_.empty(); }
    bool is_zero() const { return coefficient_ == 0; }

    /// Degree in logs (sum of exponents).
    int log_degree() const;

    double evaluate() const;
    /// Bound on |evaluate() - true value|.
    double evaluation_error() const;

    std::string to_string() const;

    LogMonomial inverse() const;
    LogMonomial operator-() const { return LogMonomial(-coefficient_, exps_); }
    friend LogMonomial operator*(const LogMonomial& a, const LogMonomial& b);
    friend LogMonomial operator/(const LogMonomial& a, const LogMonomial& b) { return a * b.inverse(); }
    friend bool operator==(const LogMonomial& a, const LogMonomial& b) {
        return a.coefficient_ == b.coefficient_ && a.exps_ == b.exps_;
    }

private:
    Rat coefficient_{1};
    std::map<std::uint64_t, int> exps_;
};

/// Canonical form of c * prod (log n_i)^{e_i}: (log p^k)^e = k^e (log p)^e, and a
/// composite n must be a prime power (logs of non-prime-powers are not monomials).
LogMonomial logmono_normalize(const Rat& c, const std::vector<std::pair<std::uint64_t, int>>& factors);

/// Prime factorization by trial division.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
bool is_prime_u64(std::uint64_t n);
/// n = p^k -> (p, k); nullopt when n is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n);

}  // namespace weilzeta
