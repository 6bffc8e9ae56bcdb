#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "weilzeta/frobenius.hpp"
#include "weilzeta/glued.hpp"

namespace weilzeta {

enum class CoefficientKind { constant_z, skyscraper, pushforward_constant, quotient_chi, direct_sum };
enum class BaseKind { number_field, glued_scheme, curve, closed_point, none };

const char* to_string(CoefficientKind k);

/// A base scheme with a coefficient sheaf from the supported catalog.
///
/// Number-field pushforwards and quotients live over Z[1/S] with cover Q(sqrt cover); curve
/// pushforwards and quotients use the constant-field extension of degree 2 of a smooth proper curve.
struct LDatum {
    CoefficientKind coefficient = CoefficientKind::constant_z;
    BaseKind base = BaseKind::number_field;
    QuadField K;
    std::vector<Place> s_places;
    GluedScheme scheme;
    std::string curve;
    std::uint64_t q = 0;
    FrobModule module;
    std::uint64_t norm = 0;
    Int cover{1};
    std::vector<LDatum> parts;

    int generic_rank() const;
    std::string describe() const;

    static LDatum constant_z(const QuadField& K, const std::vector<Place>& S = {});
    static LDatum constant_z(const GluedScheme& X);
    static LDatum constant_z_curve(const std::string& name, std::uint64_t q);
    static LDatum skyscraper(const FrobModule& M, std::uint64_t norm);
    static LDatum pushforward(const Int& D, const std::vector<Int>& s_primes = {});
    static LDatum pushforward_curve(const std::string& name, std::uint64_t q);
    static LDatum quotient_chi(const Int& D, const std::vector<Int>& s_primes = {});
    static LDatum quotient_chi_curve(const std::string& name, std::uint64_t q);
    static LDatum direct_sum(const std::vector<LDatum>& parts);
};

/// All places of K above the given rational primes.
std::vector<Place> places_above_primes(const QuadField& K, const std::vector<Int>& primes);

SpecialValue weil_special_value(const LDatum& L);
SpecialValue analytic_special_value(const LDatum& L);

struct Report {
    std::string object;
    SpecialValue weil, analytic;
    std::optional<SpecialValue> jp;
    bool match_order = false;
    ValueMatch match_value = ValueMatch::mismatch;
    bool sign_ok = false;

    bool pass() const { return match_order && match_value != ValueMatch::mismatch && sign_ok; }
};

Report verify(const LDatum& L, double tolerance = 1e-9);

/// Orders equal and values equal (exactly when both exact).
bool same_special_value(const SpecialValue& a, const SpecialValue& b, double tolerance);

nlohmann::json to_json(const SpecialValue& v);
nlohmann::json to_json(const Report& r);

/// Fixed catalog of L-data exercised by the verification suite.
std::vector<LDatum> ldatum_catalog();

std::vector<LDatum> random_skyscrapers(std::mt19937_64& rng, std::size_t count);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Pushforward invariance, open-immersion decomposition, induction invariance and multiplicativity.
std::vector<CheckResult> functoriality_battery(std::uint64_t seed, double tolerance = 1e-9);

}  // namespace weilzeta
