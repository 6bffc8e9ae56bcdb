#include "weilzeta/special_value.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace weilzeta {

SpecialValue SpecialValue::from_exact(int order, const LogMonomial& v) {
    return {order, v, v.evaluate(), v.evaluation_error()};
}

SpecialValue SpecialValue::from_float(int order, double v, double err) { return {order, std::nullopt, v, err}; }

std::string SpecialValue::to_string() const {
    std::ostringstream os;
    os.precision(15);
    os << "order " << order << ", value ";
    if (exact)
        os << exact->to_string() << " (" << approx << ")";
    else
        os << approx << " +- " << approx_error;
    return os.str();
}

SpecialValue SpecialValue::operator-() const {
    SpecialValue v = *this;
    v.approx = -v.approx;
    if (v.exact) v.exact = -*v.exact;
    return v;
}

SpecialValue SpecialValue::inverse() const {
    if (exact) return from_exact(-order, exact->inverse());
    if (std::abs(approx) <= approx_error) throw Error("cannot invert a value indistinguishable from zero");
    const double inv = 1.0 / approx;
    // |1/a - 1/x| <= e / (|a| (|a| - e)) for |x - a| <= e.
    const double err = approx_error / (std::abs(approx) * (std::abs(approx) - approx_error)) +
                       std::abs(inv) * std::numeric_limits<double>::epsilon();
    return from_float(-order, inv, err);
}

SpecialValue operator*(const SpecialValue& a, const SpecialValue& b) {
    if (a.exact && b.exact) return SpecialValue::from_exact(a.order + b.order, *a.exact * *b.exact);
    const double v = a.approx * b.approx;
    const double err = std::abs(a.approx) * b.approx_error + std::abs(b.approx) * a.approx_error +
                       a.approx_error * b.approx_error + std::abs(v) * 2 * std::numeric_limits<double>::epsilon();
    return SpecialValue::from_float(a.order + b.order, v, err);
}

const char* to_string(ValueMatch m) {
    switch (m) {
        case ValueMatch::exact: return "exact";
        case ValueMatch::tolerance: return "tol";
        case ValueMatch::mismatch: return "fail";
    }
    return "fail";
}

ValueMatch compare_values(const SpecialValue& a, const SpecialValue& b, double tol) {
    if (a.exact && b.exact) return *a.exact == *b.exact ? ValueMatch::exact : ValueMatch::mismatch;
    const double diff = std::abs(a.approx - b.approx);
    return diff <= tol + a.approx_error + b.approx_error ? ValueMatch::tolerance : ValueMatch::mismatch;
}

}  // namespace weilzeta
