// Command-line front end: compute, verify, enumerate, and emit exact results
// in text, JSON, or CSV, with an optional on-disk cache for oracle results.

#include "jackmaps/characters.hpp"
#include "jackmaps/ribbon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jackmaps;
using nlohmann::ordered_json;

namespace {

constexpr const char* kArtifactVersion = "1";

YoungDiagram parse_diagram(const std::string& s) {
    return s.empty() ? YoungDiagram{} : YoungDiagram::parse(s);
}

std::string perm_str(const std::vector<unsigned>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

// canonical text form of a powersum-basis element: one "p[pi]: coeff" per line
std::string symfunc_text(const SymFunc& f) {
    std::string s;
    for (const auto& [pi, c] : f.coeffs) s += "p[" + pi.str() + "]: " + c.str() + "\n";
    return s;
}

struct Output {
    std::string format = "text";

    void emit_value(const std::string& name, const std::string& value) const {
        if (format == "json") {
            ordered_json j{{name, value}};
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << name << "\n" << value << "\n";
        } else {
            std::cout << value << "\n";
        }
    }

    // rows of (key, value) pairs under fixed column names
    void emit_table(const std::string& key_col, const std::string& val_col,
                    const std::vector<std::pair<std::string, std::string>>& rows) const {
        if (format == "json") {
            ordered_json j = ordered_json::object();
            for (const auto& [k, v] : rows) j[k] = v;
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << key_col << "," << val_col << "\n";
            for (const auto& [k, v] : rows) std::cout << "\"" << k << "\"," << "\"" << v << "\"\n";
        } else {
            for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
        }
    }
};

std::string cache_dir_from(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("JACKMAPS_CACHE_DIR");
    return env != nullptr ? std::string(env) : std::string();
}

// Disk cache for Jack polynomial expansions, keyed by partition and artifact
// version; entries from other versions are ignored.
std::string cached_jack_text(const YoungDiagram& lambda, const std::string& dir) {
    std::string name;
    for (unsigned long p : lambda.parts()) name += std::to_string(p) + "-";
    std::filesystem::path file =
        std::filesystem::path(dir) / ("jack_" + name + "v" + kArtifactVersion + ".txt");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string text = symfunc_text(jack_J(lambda));
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(file);
    out << text;
    return text;
}

// ---- verification suites; each returns the failing check names ----

struct SuiteResult {
    std::vector<std::pair<std::string, bool>> checks;
    void add(const std::string& name, bool pass) { checks.emplace_back(name, pass); }
    bool ok() const {
        for (const auto& [n, p] : checks)
            if (!p) return false;
        return true;
    }
};

MultiPoly eq15_negated_print() {
    MultiPoly p1 = MultiPoly::variable("p1"), p2 = MultiPoly::variable("p2");
    MultiPoly q1 = MultiPoly::variable("q1"), q2 = MultiPoly::variable("q2");
    MultiPoly g = MultiPoly::variable("g");
    MultiPoly top = p1.pow(3) * q1 + p1.pow(2) * q1.pow(2) * Rational(3) + p1 * q1.pow(3) +
                    p1.pow(2) * p2 * q2 * Rational(3) + p1 * p2.pow(2) * q2 * Rational(3) + p2.pow(3) * q2 +
                    p1 * p2 * q1 * q2 * Rational(3) + p1 * p2 * q2.pow(2) * Rational(3) + p2.pow(2) * q2.pow(2) * Rational(3) +
                    p2 * q2.pow(3) + p1.pow(2) * q1 * g * Rational(3) + p1 * q1.pow(2) * g * Rational(3) +
                    p1 * p2 * q2 * g * Rational(6) + p2.pow(2) * q2 * g * Rational(3) + p2 * q2.pow(2) * g * Rational(3) +
                    p1 * q1 * g.pow(2) * Rational(2) + p2 * q2 * g.pow(2) * Rational(2);
    return top + p1 * q1 + p2 * q2;
}

void suite_eq11(SuiteResult& r) {
    CharacterSolution s3 = solve_character_family(3);
    ContentPolynomialFamily expect = ch3_explicit_family();
    bool ok = s3.family.polys.size() == expect.polys.size();
    for (size_t k = 0; ok && k < expect.polys.size(); ++k)
        ok = s3.family.polys[k] == expect.polys[k];
    r.add("eq11: solved 3-cycle family matches the explicit one", ok);
}

void suite_eq15(SuiteResult& r) {
    MultiPoly st = stanley_polynomial(solve_character_family(3), 2);
    r.add("eq15: two-rectangle Stanley polynomial matches the printed expansion",
          st == -eq15_negated_print());
    r.add("eq15: map enumeration gives its top part",
          ch_top_maps(3, 2) == -eq15_negated_print().homogeneous_part(4));
}

void suite_eq21(SuiteResult& r, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 5u); ++n) {
        bool ok = true;
        for (const auto& lam : partitions_up_to(7)) {
            if (lam.empty()) continue;
            Rational classical =
                lam.size() < n ? Rational(0) : normalized_character(YoungDiagram({n}), lam);
            if (ch_a1_one_face(n, lam) != classical) ok = false;
        }
        r.add("eq21: one-face map sum at A=1 equals the classical character, n=" +
                  std::to_string(n),
              ok);
    }
}

void suite_def12(SuiteResult& r, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 4u); ++n) {
        CharacterSolution sol = solve_character_family(n);
        bool ok = true;
        for (const auto& lam : partitions_up_to(7)) {
            if (lam.empty()) continue;
            if (jack_character(YoungDiagram({n}), lam) != evaluate_family(sol.family, lam))
                ok = false;
        }
        r.add("def12: solved family agrees with the oracle everywhere tested, n=" +
                  std::to_string(n),
              ok);
    }
}

void suite_lemma33(SuiteResult& r, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 4u); ++n) {
        auto oracle = [n](const YoungDiagram& lam) {
            return jack_character(YoungDiagram({n}), lam);
        };
        r.add("lemma33: linear constraints hold for the oracle character, n=" + std::to_string(n),
              verify_vanishing_system(oracle, n).all_pass());

        CharacterSolution sol = solve_character_family(n);
        ContentPolynomialFamily top = family_top(sol);
        auto maps = [n](const YoungDiagram& lam) { return ch_top_maps_value(n, lam); };
        r.add("lemma33: constraints and value identities hold for the map-route top, n=" +
                  std::to_string(n),
              verify_vanishing_system(maps, n, &top).all_pass());
    }
}

void suite_theorem41(SuiteResult& r, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 5u); ++n) {
        CharacterSolution sol = solve_character_family(n);
        for (unsigned ell = 1; ell <= 2; ++ell)
            r.add("theorem41: top Stanley part equals the map sum, n=" + std::to_string(n) +
                      " rects=" + std::to_string(ell),
                  stanley_polynomial(sol, ell).homogeneous_part(n + 1) == ch_top_maps(n, ell));
    }
}

void suite_theorem22(SuiteResult& r, unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 4u); ++n) {
        auto [s1, s2] = count_S1_S2(n);
        r.add("theorem22: S1=" + s1.get_str() + " S2=" + s2.get_str() + " at n=" +
                  std::to_string(n),
              s1 == s2);
    }
    if (max_n >= 3) {
        bool ok = true;
        try {
            for (unsigned n = 1; n <= 3; ++n) {
                auto pairs = build_bijection(n);
                if (pairs.size() != count_S1_S2(n).first.get_ui() / n * n) ok = false;
            }
        } catch (const AmbiguousChoiceError&) {
            ok = false;
        }
        r.add("theorem22: constructive matching is total with no ambiguous choices", ok);
    }
}

void suite_structconst(SuiteResult& r) {
    std::map<YoungDiagram, MultiPoly> g =
        structure_constants_delta(YoungDiagram({3}), YoungDiagram({3}));
    MultiPoly d = MultiPoly::variable("d");
    std::map<std::string, MultiPoly> expect = {
        {"3", d * d * Rational(6) + MultiPoly(Rational(3))},
        {"2,1", d * Rational(9)},
        {"4", d * Rational(18)},
        {"1,1,1", MultiPoly(Rational(3))},
        {"3,1", MultiPoly(Rational(9))},
        {"2,2", MultiPoly(Rational(9))},
        {"5", MultiPoly(Rational(9))},
        {"3,3", MultiPoly(Rational(1))}};
    bool ok = g.size() == expect.size();
    for (const auto& [rho, poly] : g) {
        auto it = expect.find(rho.str());
        if (it == expect.end() || it->second != poly) ok = false;
        for (const auto& [mono, c] : poly.terms())
            if (sgn(c) < 0 || !is_integer(c)) ok = false;
    }
    r.add("structconst: product of two 3-cycles matches the known expansion", ok);
}

int run_verify(const std::string& suite, unsigned max_n, const Output& out) {
    SuiteResult r;
    if (suite == "eq11" || suite == "all") suite_eq11(r);
    if (suite == "eq15" || suite == "all") suite_eq15(r);
    if (suite == "eq21" || suite == "all") suite_eq21(r, max_n);
    if (suite == "def12" || suite == "all") suite_def12(r, max_n);
    if (suite == "lemma33" || suite == "all") suite_lemma33(r, max_n);
    if (suite == "theorem41" || suite == "all") suite_theorem41(r, max_n);
    if (suite == "theorem22" || suite == "all") suite_theorem22(r, max_n);
    if (suite == "structconst" || suite == "all") suite_structconst(r);

    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [name, pass] : r.checks) rows.emplace_back(name, pass ? "PASS" : "FAIL");
    out.emit_table("check", "result", rows);
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jack character computations and map-enumeration cross-checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "text", cache_flag;
    unsigned jobs = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_flag, "cache directory (or JACKMAPS_CACHE_DIR)");
    app.add_option("--jobs", jobs, "worker pool size (affects wall time only)");

    unsigned arg_n = 1, rects = 1, max_n = 3;
    std::string mu_s, nu_s, lambda_s, pi_s, suite = "all";

    CLI::App* chtop = app.add_subcommand("ch-top", "top-degree Stanley polynomial via maps");
    chtop->add_option("--n", arg_n)->required();
    chtop->add_option("--rects", rects)->required();

    CLI::App* stanley = app.add_subcommand("stanley", "full Stanley polynomial via the solver");
    stanley->add_option("--n", arg_n)->required();
    stanley->add_option("--rects", rects)->required();

    CLI::App* cheval = app.add_subcommand("ch-eval", "character value on a diagram (solver route)");
    cheval->add_option("--n", arg_n)->required();
    cheval->add_option("--lambda", lambda_s)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "Jack-polynomial oracle");
    oracle->require_subcommand(1);
    CLI::App* o_ch = oracle->add_subcommand("ch", "character value");
    o_ch->add_option("--mu", mu_s)->required();
    o_ch->add_option("--lambda", lambda_s)->required();
    CLI::App* o_jack = oracle->add_subcommand("jack", "integral form in the powersum basis");
    o_jack->add_option("--lambda", lambda_s)->required();
    CLI::App* o_theta = oracle->add_subcommand("theta", "powersum coefficient");
    o_theta->add_option("--pi", pi_s)->required();
    o_theta->add_option("--lambda", lambda_s)->required();

    CLI::App* maps = app.add_subcommand("maps", "oriented map enumeration");
    maps->require_subcommand(1);
    CLI::App* m_enum = maps->add_subcommand("enumerate", "list transitive pairs");
    m_enum->add_option("--n", arg_n)->required();
    CLI::App* m_stats = maps->add_subcommand("stats", "vertex/face/genus census");
    m_stats->add_option("--n", arg_n)->required();

    CLI::App* bij = app.add_subcommand("bijection", "two-sided counting");
    bij->require_subcommand(1);
    CLI::App* b_count = bij->add_subcommand("count", "both sides of the counting identity");
    b_count->add_option("--n", arg_n)->required();
    CLI::App* b_build = bij->add_subcommand("build", "explicit matching");
    b_build->add_option("--n", arg_n)->required();

    CLI::App* sc = app.add_subcommand("structure-constants", "character product expansion");
    sc->add_option("--mu", mu_s)->required();
    sc->add_option("--nu", nu_s)->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"eq11", "eq15", "eq21", "def12", "lemma33", "theorem41",
                               "theorem22", "structconst", "all"}));
    verify->add_option("--max-n", max_n);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Output out{format};
    try {
        if (*chtop) {
            out.emit_value("ch_top", ch_top_maps(arg_n, rects).str());
        } else if (*stanley) {
            out.emit_value("stanley",
                           stanley_polynomial(solve_character_family(arg_n), rects).str());
        } else if (*cheval) {
            CharacterSolution sol = solve_character_family(arg_n);
            out.emit_value("ch", evaluate_family(sol.family, parse_diagram(lambda_s)).str());
        } else if (*o_ch) {
            out.emit_value("ch",
                           jack_character(parse_diagram(mu_s), parse_diagram(lambda_s)).str());
        } else if (*o_jack) {
            YoungDiagram lam = parse_diagram(lambda_s);
            std::string dir = cache_dir_from(cache_flag);
            std::string text = dir.empty() ? symfunc_text(jack_J(lam))
                                           : cached_jack_text(lam, dir);
            if (format == "text") {
                std::cout << text;
            } else {
                std::vector<std::pair<std::string, std::string>> rows;
                for (const auto& [pi, c] : jack_J(lam).coeffs)
                    rows.emplace_back(pi.str(), c.str());
                out.emit_table("powersum", "coefficient", rows);
            }
        } else if (*o_theta) {
            out.emit_value("theta", theta(parse_diagram(pi_s), parse_diagram(lambda_s)).str());
        } else if (*m_enum) {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& m : enumerate_labeled(arg_n))
                rows.emplace_back("sigma=" + perm_str(to_one_indexed(m.sigma)),
                                  "tau=" + perm_str(to_one_indexed(m.tau)));
            out.emit_table("sigma", "tau", rows);
        } else if (*m_stats) {
            std::map<std::string, unsigned long> census;
            for (const auto& m : enumerate_labeled(arg_n)) {
                MapStats s = map_stats(m);
                std::string key = "whites=" + std::to_string(s.whites) +
                                  " blacks=" + std::to_string(s.blacks) +
                                  " faces=" + std::to_string(s.faces) +
                                  " genus=" + std::to_string(s.genus);
                ++census[key];
            }
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [k, c] : census) rows.emplace_back(k, std::to_string(c));
            out.emit_table("shape", "count", rows);
        } else if (*b_count) {
            auto [s1, s2] = count_S1_S2(arg_n);
            out.emit_table("side", "count",
                           {{"S1", s1.get_str()}, {"S2", s2.get_str()}});
        } else if (*b_build) {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [a, b] : build_bijection(arg_n))
                rows.emplace_back(serialize_key(a.map) + "#" + std::to_string(a.root_rank),
                                  "sigma=" + perm_str(to_one_indexed(b.map.sigma)) +
                                      " tau=" + perm_str(to_one_indexed(b.map.tau)) + "#" +
                                      std::to_string(b.root_rank));
            out.emit_table("rotation_system", "permutation_pair", rows);
        } else if (*sc) {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [rho, c] :
                 structure_constants_delta(parse_diagram(mu_s), parse_diagram(nu_s)))
                rows.emplace_back(rho.str(), c.str());
            out.emit_table("partition", "coefficient", rows);
        } else if (*verify) {
            return run_verify(suite, max_n, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
