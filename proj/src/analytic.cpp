#include "weilzeta/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "weilzeta/logmono.hpp"

namespace weilzeta {

namespace {

// B_{2k} for k = 1..10.
constexpr long double kBernoulli[] = {1.0L / 6,         -1.0L / 30,   1.0L / 42,       -1.0L / 30,
                                      5.0L / 66,        -691.0L / 2730, 7.0L / 6,      -3617.0L / 510,
                                      43867.0L / 798,   -174611.0L / 330};

constexpr double kUlp = std::numeric_limits<double>::epsilon();

}  // namespace

QuadCharacter::QuadCharacter(const Int& disc) : D(disc) {
    if (!is_fundamental_discriminant(D)) throw Error("character: not a fundamental discriminant");
}

int QuadCharacter::operator()(long a) const { return kronecker(D, Int(a)); }

Rat l_chi_at_zero(const QuadCharacter& chi) {
    if (!chi.is_odd()) throw Error("l_chi_at_zero: character is even (L(0, chi) = 0)");
    const long m = chi.modulus();
    Int s = 0;
    for (long a = 1; a <= m; ++a) s += chi(a) * a;
    return make_rat(-s, Int(m));
}

FloatValue log_gamma(double x) {
    if (!(x > 0)) throw Error("log_gamma: argument must be positive");
    constexpr int kShift = 30, kTerms = 8;
    long double z = x, shift = 0;
    while (z < kShift) {
        shift += std::log(z);
        z += 1;
    }
    long double v = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * std::numbers::pi_v<long double>);
    long double zp = z;
    for (int k = 1; k <= kTerms; ++k) {
        v += kBernoulli[k - 1] / (2.0L * k * (2 * k - 1) * zp);
        zp *= z * z;
    }
    const long double remainder = std::fabs(kBernoulli[kTerms] / (2.0L * (kTerms + 1) * (2 * kTerms + 1) * zp));
    const double value = static_cast<double>(v - shift);
    return {value, static_cast<double>(remainder) + 64 * kUlp * (std::fabs(value) + static_cast<double>(shift) + 1)};
}

FloatValue l_chi_derivative_at_zero(const QuadCharacter& chi) {
    if (chi.is_odd()) throw Error("l_chi_derivative_at_zero: character is odd");
    const long m = chi.modulus();
    double sum = 0, err = 0;
    for (long a = 1; a < m; ++a) {
        const int c = chi(a);
        if (c == 0) continue;
        auto g = log_gamma(static_cast<double>(a) / static_cast<double>(m));
        sum += c * g.value;
        err += g.error + 2 * kUlp * std::fabs(sum);
    }
    return {sum, err};
}

FloatValue hurwitz_zeta(double s, double x) {
    if (s == 1.0) throw Error("hurwitz_zeta: pole at s = 1");
    if (!(x > 0)) throw Error("hurwitz_zeta: x must be positive");
    constexpr int kN = 40, kTerms = 8;
    long double sum = 0;
    for (int n = 0; n < kN; ++n) sum += std::pow(static_cast<long double>(n) + x, -static_cast<long double>(s));
    const long double a = kN + x;
    sum += std::pow(a, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(a, -static_cast<long double>(s));
    // sum_k B_2k / (2k)! * s (s+1) ... (s + 2k - 2) a^{-s-2k+1}
    long double rising = s, fact = 2;
    long double term = 0;
    for (int k = 1; k <= kTerms + 1; ++k) {
        term = kBernoulli[k - 1] / fact * rising * std::pow(a, -static_cast<long double>(s) - 2 * k + 1);
        if (k <= kTerms) sum += term;
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        fact *= (2 * k + 1) * (2 * k + 2);
    }
    const double value = static_cast<double>(sum);
    return {value, static_cast<double>(std::fabs(term)) * 2 + 64 * kUlp * (std::fabs(value) + 1)};
}

FloatValue numeric_l_oracle(const QuadCharacter& chi, double s) {
    if (std::fabs(s) > 0.5) throw Error("numeric_l_oracle: |s| must be at most 1/2");
    const long m = chi.modulus();
    double sum = 0, err = 0;
    for (long a = 1; a < m; ++a) {
        const int c = chi(a);
        if (c == 0) continue;
        auto h = hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(m));
        sum += c * h.value;
        err += h.error + 2 * kUlp * std::fabs(sum);
    }
    const double scale = std::pow(static_cast<double>(m), -s);
    return {scale * sum, scale * err + 4 * kUlp * std::fabs(scale * sum)};
}

SpecialValue l_chi_special_value(const QuadCharacter& chi, const std::vector<Int>& removed_primes) {
    int order = 0;
    Rat factor = 1;
    LogMonomial logs = LogMonomial::one();
    for (const auto& p : removed_primes) {
        const int c = kronecker(chi.D, p);
        if (c == 1) {
            ++order;
            logs = logs * LogMonomial::log_power(p.get_ui(), 1);
        } else if (c == -1) {
            factor *= 2;
        }
    }
    if (chi.is_odd()) return SpecialValue::from_exact(order, LogMonomial(Rat(factor * l_chi_at_zero(chi))) * logs);
    auto d = l_chi_derivative_at_zero(chi);
    const double scale = factor.get_d() * logs.evaluate();
    return SpecialValue::from_float(order + 1, d.value * scale,
                                    d.error * std::fabs(scale) + std::fabs(d.value) * logs.evaluation_error() * factor.get_d());
}

SpecialValue dedekind_zeta_star(const QuadField& K, const std::vector<Place>& S_f) {
    LogMonomial logs = LogMonomial::one();
    for (const auto& v : S_f) logs = logs * LogMonomial::log_power(v.norm.get_ui(), 1);
    const int removed = static_cast<int>(S_f.size());
    const LogMonomial zeta0(Rat(-1, 2));
    if (K.is_rationals()) return SpecialValue::from_exact(removed, zeta0 * logs);
    QuadCharacter chi(K.D);
    if (K.is_imaginary()) return SpecialValue::from_exact(removed, zeta0 * LogMonomial(l_chi_at_zero(chi)) * logs);
    auto d = l_chi_derivative_at_zero(chi);
    const double scale = -0.5 * logs.evaluate();
    return SpecialValue::from_float(removed + 1, d.value * scale,
                                    d.error * std::fabs(scale) + 0.5 * std::fabs(d.value) * logs.evaluation_error());
}

}  // namespace weilzeta
