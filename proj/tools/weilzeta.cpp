#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weilzeta/analytic.hpp"
#include "weilzeta/det_lattice.hpp"
#include "weilzeta/lfun.hpp"

using namespace weilzeta;
using nlohmann::json;

namespace {

struct Globals {
    bool json_out = false;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
};

Int parse_int(const std::string& s) {
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw Error("not an integer: " + s);
    return v;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_int(item));
    return out;
}

QuadField field_of(const Int& D) { return D == 1 ? QuadField::rationals() : QuadField(D); }

json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Int json_int(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (!j.is_number_integer()) throw Error("expected an integer in JSON input");
    return Int(j.get<long>());
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix json_matrix(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw Error("matrix has the wrong number of rows");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error("matrix has the wrong number of columns");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_int(j[r][c]);
    }
    return m;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

ZComplex complex_from_json(const json& j) {
    try {
        ZComplex C;
        C.min_degree = j.at("min_degree").get<int>();
        C.ranks = j.at("ranks").get<std::vector<std::size_t>>();
        const auto& d = j.at("diffs");
        if (!C.ranks.empty() && d.size() + 1 != C.ranks.size()) throw Error("complex: need one differential per pair of terms");
        for (std::size_t k = 0; k < d.size(); ++k) C.diffs.push_back(json_matrix(d[k], C.ranks[k + 1], C.ranks[k]));
        C.validate();
        return C;
    } catch (const json::exception& e) {
        throw Error(std::string("complex: ") + e.what());
    }
}

FrobModule module_from_json(const json& j) {
    try {
        const auto& phi = j.at("frobenius");
        const std::size_t n = phi.size();
        const auto& rel = j.at("relations");
        const std::size_t k = rel.empty() || n == 0 ? 0 : rel[0].size();
        FrobModule M;
        M.frobenius = json_matrix(phi, n, n);
        M.relations = rel.empty() ? IntMatrix(n, 0) : json_matrix(rel, n, k);
        M.order = j.at("order").get<std::uint64_t>();
        M.validate();
        return M;
    } catch (const json::exception& e) {
        throw Error(std::string("module: ") + e.what());
    }
}

json presented_json(const PresentedComplex& C) {
    json j;
    j["min_degree"] = C.min_degree;
    j["relations"] = json::array();
    j["diffs"] = json::array();
    for (const auto& r : C.relations) j["relations"].push_back(matrix_json(r));
    for (const auto& d : C.diffs) j["diffs"].push_back(matrix_json(d));
    return j;
}

json rat_matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void print_value(const char* label, const SpecialValue& v) {
    std::cout << "  " << label << v.to_string() << "\n";
}

bool emit(const Report& r, const Globals& g, json extra = json::object()) {
    if (g.json_out) {
        auto j = to_json(r);
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump() << "\n";
    } else {
        for (auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        std::cout << r.object << "\n";
        std::cout << "  order:    weil " << r.weil.order << ", analytic " << r.analytic.order
                  << (r.match_order ? " (match)" : " (MISMATCH)") << "\n";
        print_value("weil:     ", r.weil);
        print_value("analytic: ", r.analytic);
        if (r.jp) print_value("jp:       ", *r.jp);
        std::cout << "  value:    " << to_string(r.match_value) << ", sign " << (r.sign_ok ? "ok" : "WRONG") << "\n";
        std::cout << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    return r.pass();
}

json field_json(const QuadField& K) {
    const auto fi = field_invariants(K);
    json j;
    j["field"] = K.name();
    j["class_group"] = fi.class_group.to_string();
    j["h"] = int_json(fi.h);
    j["omega"] = fi.omega;
    if (fi.unit) {
        j["fundamental_unit"] = {{"x", int_json(fi.unit->x)}, {"y", int_json(fi.unit->y)}, {"norm", fi.unit->norm}};
        j["regulator"] = fi.unit->regulator;
    }
    return j;
}

FqElem parse_coordinate(const std::string& text, const FiniteField& F) {
    FqElem sum;
    for (const auto& m : parse_polynomial(text, F)) {
        if (m.ex || m.ey || m.ez) throw Error("removed point coordinates must be constants in a");
        if (sum.size() < m.coef.size()) sum.resize(m.coef.size(), 0);
        for (std::size_t i = 0; i < m.coef.size(); ++i) sum[i] += m.coef[i];
    }
    const long p = F.characteristic();
    for (auto& c : sum) c = ((c % p) + p) % p;
    while (!sum.empty() && sum.back() == 0) sum.pop_back();
    return sum;
}

std::vector<std::array<FqElem, 3>> parse_removed(const std::string& text, CurveKind kind, const FiniteField& F) {
    std::vector<std::array<FqElem, 3>> out;
    std::stringstream ss(text);
    std::string point;
    while (std::getline(ss, point, ';')) {
        if (point.empty()) continue;
        std::vector<FqElem> c;
        std::stringstream ps(point);
        std::string coord;
        while (std::getline(ps, coord, ',')) c.push_back(parse_coordinate(coord, F));
        if (c.size() == 3)
            out.push_back({c[0], c[1], c[2]});
        else if (c.size() == 2 && kind == CurveKind::p1_minus_points)
            out.push_back({c[0], FqElem{}, c[1]});
        else if (c.size() == 2)
            out.push_back({c[0], c[1], FqElem{1}});
        else
            throw Error("removed point needs 2 or 3 coordinates: " + point);
    }
    return out;
}

json zeta_json(const ZetaRational& Z) {
    auto coeffs = [](const IntPoly& p) {
        json a = json::array();
        for (const auto& c : p) a.push_back(int_json(c));
        return a;
    };
    return {{"q", int_json(Z.q)}, {"num", coeffs(Z.num)}, {"den", coeffs(Z.den)}, {"text", Z.to_string()}};
}

int finish(bool ok) { return ok ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weilzeta: orders and special values at s = 0 by Weil-etale and analytic routes"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "JSON output, one object per line");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--tolerance", g.tolerance, "tolerance for float comparisons")->capture_default_str();

    std::string disc = "1", s_primes, conductor = "1";
    auto* field = app.add_subcommand("field", "Z over the ring of S-integers of Q or Q(sqrt D)");
    field->add_option("--disc", disc, "fundamental discriminant (1 for Q)")->required();
    field->add_option("--s-primes", s_primes, "comma-separated rational primes");

    auto* order = app.add_subcommand("order", "Z over the quadratic order of conductor f");
    order->add_option("--disc", disc, "fundamental discriminant")->required();
    order->add_option("--conductor", conductor, "conductor f")->required();

    std::uint64_t q = 0;
    std::string kind = "projective_plane", poly, remove, bounds, catalog, singular;
    auto* curve = app.add_subcommand("curve", "zeta function and special value of a curve over F_q");
    curve->add_option("--q", q, "field size")->required();
    curve->add_option("--kind", kind, "projective_plane | affine_plane | p1 | p1_minus_points");
    curve->add_option("--poly", poly, "defining polynomial in x, y, z (a = field generator)");
    curve->add_option("--remove", remove, "removed points x,y[,z];...");
    curve->add_option("--bounds", bounds, "degree bounds num,den of the zeta function");
    curve->add_option("--catalog", catalog, "catalog curve name");
    curve->add_option("--singular", singular, "glued singular curve name");

    std::string module_file;
    std::uint64_t norm = 0;
    auto* point = app.add_subcommand("point-module", "skyscraper at a closed point with residue field F_N");
    point->add_option("--file", module_file, "FrobModule JSON")->required();
    point->add_option("--norm", norm, "residue field size N")->required();

    double at = 0.0;
    auto* analytic = app.add_subcommand("analytic", "analytic side only");
    analytic->add_option("--disc", disc, "fundamental discriminant (1 for Q)")->required();
    analytic->add_option("--s-primes", s_primes, "comma-separated rational primes");
    analytic->add_option("--at", at, "evaluation point (0 for the leading term)");

    std::size_t trials = 500;
    std::string complex_file;
    auto* appendix = app.add_subcommand("check-appendix", "determinant-lattice identities, JSON lines");
    appendix->add_option("--trials", trials, "random acyclic pairs")->capture_default_str();
    appendix->add_option("--complex", complex_file, "ZComplex JSON with finite cohomology");

    std::size_t skyscrapers = 200;
    auto* suite = app.add_subcommand("verify-suite", "catalog, random skyscrapers and functoriality checks");
    suite->add_option("--trials", skyscrapers, "random skyscrapers")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*field) {
            const QuadField K = field_of(parse_int(disc));
            const auto S = places_above_primes(K, parse_int_list(s_primes));
            return finish(emit(verify(LDatum::constant_z(K, S), g.tolerance), g, {{"invariants", field_json(K)}}));
        }
        if (*order) {
            const auto X = quadratic_order(parse_int(disc), parse_int(conductor));
            return finish(emit(verify(LDatum::constant_z(X), g.tolerance), g, {{"ch0", ch0(X).to_string()}}));
        }
        if (*curve) {
            if (!singular.empty()) {
                const auto X = glued_curve(singular, q);
                return finish(emit(verify(LDatum::constant_z(X), g.tolerance), g,
                                   {{"ch0", ch0(X).to_string()}, {"zeta", zeta_json(glued_zeta(X))}}));
            }
            CatalogCurve C;
            if (!catalog.empty()) {
                C = catalog_curve(catalog, q);
            } else {
                if (bounds.empty()) throw Error("curve: --bounds num,den is required for a custom model");
                const auto b = parse_int_list(bounds);
                if (b.size() != 2 || b[0] < 0 || b[1] < 0) throw Error("curve: --bounds expects two degrees");
                C.model.kind = curve_kind_from_string(kind);
                C.model.q = q;
                const auto F = FiniteField::of_size(q);
                if (!poly.empty()) C.model.equation = parse_polynomial(poly, F);
                C.model.removed = parse_removed(remove, C.model.kind, F);
                C.model.name = "custom";
                C.model.validate();
                C.deg_num = b[0].get_ui();
                C.deg_den = b[1].get_ui();
            }
            const auto Z = curve_zeta(C);
            const auto v = zeta_special_value(Z);
            json out{{"curve", C.model.name}, {"zeta", zeta_json(Z)}, {"special_value", to_json(v)}};
            if (C.smooth_proper) out["functional_equation"] = functional_equation_holds(Z, C.model.constant_degree);
            if (!catalog.empty() && C.smooth_proper && C.genus <= 1)
                return finish(emit(verify(LDatum::constant_z_curve(catalog, q), g.tolerance), g, out));
            if (g.json_out)
                std::cout << out.dump() << "\n";
            else
                std::cout << C.model.name << " over F_" << q << "\n  Z(t) = " << Z.to_string() << "\n  leading term "
                          << v.to_string() << "\n";
            return 0;
        }
        if (*point) {
            const auto M = module_from_json(read_json_file(module_file));
            return finish(emit(verify(LDatum::skyscraper(M, norm), g.tolerance), g,
                               {{"h0", h0(M).group.to_string()}, {"h1_order", int_json(h1_order(M))}}));
        }
        if (*analytic) {
            const Int D = parse_int(disc);
            const auto primes = parse_int_list(s_primes);
            json out{{"disc", int_json(D)}, {"s_primes", json::array()}, {"at", at}};
            for (const auto& p : primes) out["s_primes"].push_back(int_json(p));
            if (at == 0.0) {
                const QuadField K = field_of(D);
                out["zeta_K"] = to_json(dedekind_zeta_star(K, places_above_primes(K, primes)));
                if (D != 1) out["L_chi"] = to_json(l_chi_special_value(QuadCharacter(D), primes));
            } else {
                if (D == 1 || !primes.empty()) throw Error("analytic: --at != 0 needs a nontrivial character and no S");
                const auto v = numeric_l_oracle(QuadCharacter(D), at);
                out["L_chi"] = {{"float", v.value}, {"err", v.error}};
            }
            if (g.json_out) {
                std::cout << out.dump() << "\n";
            } else {
                for (auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << "\n";
            }
            return 0;
        }
        if (*appendix) {
            bool ok = true;
            auto line = [&](const std::string& lemma, const json& inputs, const json& value, bool pass) {
                ok = ok && pass;
                std::cout << json{{"lemma", lemma}, {"inputs_digest", fnv1a(inputs.dump())}, {"value", value}, {"pass", pass}}
                                 .dump()
                          << "\n";
            };
            if (!complex_file.empty()) {
                const json input = read_json_file(complex_file);
                const auto C = complex_from_json(input);
                if (!complex_cohomology(C).all_finite()) throw Error("check-appendix: cohomology is not finite");
                const Rat x = euler_lattice_index(C);
                line("lattice_index", input, x.get_str(), x > 0);
                return finish(ok);
            }
            for (long m = 1; m <= 50; ++m) {
                const auto C = ZComplex::two_term(IntMatrix{{m}}, -1);
                const Rat x = euler_lattice_index(C);
                line("lattice_index", json{{"min_degree", -1}, {"ranks", {1, 1}}, {"diffs", {{{m}}}}}, x.get_str(),
                     x == make_rat(Int(1), Int(m)));
            }
            std::mt19937_64 rng(g.seed);
            for (std::size_t t = 0; t < trials; ++t) {
                const auto P = random_acyclic_pair(rng);
                json phi = json::array();
                for (const auto& m : P.phi.phi) phi.push_back(rat_matrix_json(m));
                const json inputs{{"A", presented_json(P.A)}, {"B", presented_json(P.B)},
                                  {"phi", {{"min_degree", P.phi.min_degree}, {"maps", phi}}}};
                const Rat r = acyclic_duality_ratio(P.A, P.B, P.phi);
                line("acyclic_duality", inputs, r.get_str(), r == 1);
            }
            return finish(ok);
        }
        if (*suite) {
            bool ok = true;
            std::size_t passed = 0, total = 0;
            auto run = [&](const LDatum& L) {
                const bool p = emit(verify(L, g.tolerance), g);
                ok = ok && p;
                passed += p;
                ++total;
            };
            for (const auto& L : ldatum_catalog()) run(L);
            std::mt19937_64 rng(g.seed);
            for (const auto& L : random_skyscrapers(rng, skyscrapers)) run(L);
            for (const auto& c : functoriality_battery(g.seed, g.tolerance)) {
                ok = ok && c.pass;
                passed += c.pass;
                ++total;
                if (g.json_out)
                    std::cout << json{{"check", c.name}, {"detail", c.detail}, {"pass", c.pass}}.dump() << "\n";
                else
                    std::cout << c.name << ": " << c.detail << "\n  " << (c.pass ? "PASS" : "FAIL") << "\n";
            }
            if (g.json_out)
                std::cout << json{{"summary", {{"passed", passed}, {"total", total}}}}.dump() << "\n";
            else
                std::cout << passed << "/" << total << " passed\n";
            return finish(ok);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
