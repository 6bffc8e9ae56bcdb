#pragma once

#include <optional>
#include <string>

#include "weilzeta/logmono.hpp"

namespace weilzeta {

/// Order of vanishing at s = 0 (negative for a pole) and leading Taylor coefficient.
///
/// When `exact` is present, |approx - exact| <= approx_error.
struct SpecialValue {
    int order = 0;
    std::optional<LogMonomial> exact;
    double approx = 0.0;
    double approx_error = 0.0;

    static SpecialValue from_exact(int order, const LogMonomial& v);
    static SpecialValue from_float(int order, double v, double err);

    bool is_exact() const { return exact.has_value(); }
    std::string to_string() const;

    SpecialValue operator-() const;
    SpecialValue inverse() const;
    friend SpecialValue operator*(const SpecialValue& a, const SpecialValue& b);
    friend SpecialValue operator/(const SpecialValue& a, const SpecialValue& b) { return a * b.inverse(); }
};

enum class ValueMatch { exact, tolerance, mismatch };

const char* to_string(ValueMatch m);

/// Exact comparison when both sides are exact, else |a - b| <= tol + a.err + b.err.
ValueMatch compare_values(const SpecialValue& a, const SpecialValue& b, double tol);

}  // namespace weilzeta
