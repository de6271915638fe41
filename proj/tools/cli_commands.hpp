#pragma once

#include "heisenfock/heisenfock.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace heisenfock::cli {

// Stable exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline nlohmann::json multipartition_json(const MultiPartition& nu) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [i, p] : nu.assignments())
        j[std::to_string(i)] = p.parts();
    return j;
}

inline nlohmann::json normal_json(const NormalElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back({{"creation", multipartition_json(k.creation)},
                         {"annihilation", multipartition_json(k.annihilation)},
                         {"coefficient", to_string(c)}});
    return {{"text", x.to_string()}, {"terms", terms}};
}

inline nlohmann::json fock_json(const FockVector& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [nu, c] : v.terms())
        terms.push_back({{"monomial", multipartition_json(nu)}, {"coefficient", to_string(c)}});
    return {{"text", v.to_string()}, {"terms", terms}};
}

inline nlohmann::json graded_json(const GradedDims& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [deg, dim] : w.dims())
        j.push_back({deg, dim.get_str()});
    return j;
}

inline std::string dims_table(const DimsReport& rep) {
    std::vector<std::vector<std::string>> cells{{"level", "fock", "vistoli", "status"}};
    for (const auto& r : rep.rows)
        cells.push_back({std::to_string(r.level), r.fock.get_str(), r.vistoli.get_str(),
                         r.equal() ? "equal" : "DIFFER"});
    std::vector<std::size_t> width(4, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 4; ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (c)
                out << "  ";
            out << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace detail

/* Runs the command line `args` (without the program name). Output goes to
 * `out`, diagnostics to `err`; the return value is the exit code.
 */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Heisenberg algebra, Fock space and graded-dimension calculator",
                 "heisenfock"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    bool json = false;
    app.add_option("--config", config_path, "JSON config file (default: $HEISENFOCK_CONFIG)");
    app.add_flag("--json", json, "machine-readable output");

    std::string nf_expr;
    auto* nf = app.add_subcommand("normal-form", "normal-order an expression");
    nf->add_option("expr", nf_expr, "expression")->required();

    int max_degree = 4;
    std::string variant_name = "plain";
    auto* verify = app.add_subcommand("verify", "check the q/p relations on a grid");
    verify->add_option("--max-degree", max_degree, "levels 0..M for both m and n")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--variant", variant_name, "plain | transposed | mixed")
        ->check(CLI::IsMember({"plain", "transposed", "mixed"}));

    std::string act_expr, on_expr;
    auto* act = app.add_subcommand("fock-act", "act on the Fock space");
    act->add_option("expr", act_expr, "operator expression")->required();
    act->add_option("--on", on_expr, "creation expression applied to the vacuum first");

    std::optional<std::size_t> dims_d;
    int max_level = 6;
    auto* dims = app.add_subcommand("dims", "compare Fock and equivariant K-theory dimensions");
    dims->add_option("--d", dims_d, "dimension of K(X) (default: config dimension)");
    dims->add_option("--max-level", max_level, "largest level")->check(CLI::NonNegativeNumber);

    std::string space;
    int power = 2;
    bool exterior = false;
    auto* sym = app.add_subcommand("sym-euler", "graded symmetric/exterior power and s^k check");
    sym->add_option("--space", space, "label from config or inline degree:dim,...")->required();
    sym->add_option("--k", power, "power")->check(CLI::NonNegativeNumber);
    sym->add_flag("--ext", exterior, "exterior instead of symmetric power");

    int weight = 4;
    auto* tri = app.add_subcommand("triangularity", "triangularity of p(nu)q(mu) in the a-basis");
    tri->add_option("--weight", weight, "bound on |nu| + |mu|")->check(CLI::NonNegativeNumber);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        Config config;
        if (config_path.empty())
            if (const char* env = std::getenv("HEISENFOCK_CONFIG"); env && *env)
                config_path = env;
        if (!config_path.empty())
            config = load_config(config_path);
        const PairingMatrix& pairing = config.pairing;

        if (*nf) {
            NormalElement x = normal_order(parse_element(nf_expr, config), pairing);
            if (json)
                out << detail::normal_json(x).dump(2) << "\n";
            else
                out << x.to_string() << "\n";
            return exit_ok;
        }

        if (*verify) {
            RelationVariant variant = variant_name == "mixed"        ? RelationVariant::mixed
                                      : variant_name == "transposed" ? RelationVariant::transposed
                                                                     : RelationVariant::plain;
            auto rep = verify_relation_grid(max_degree, pairing, variant);
            if (json) {
                out << nlohmann::json{{"ok", rep.ok},
                                      {"variant", variant_name},
                                      {"instances", rep.instances},
                                      {"first_failure", rep.first_failure}}
                           .dump(2)
                    << "\n";
            } else if (rep.ok) {
                out << "OK, " << rep.instances << " relation instances verified\n";
            } else {
                out << "FAILED: " << rep.first_failure << "\n";
            }
            return rep.ok ? exit_ok : exit_verification_failed;
        }

        if (*act) {
            FockVector v = FockVector::vacuum();
            if (!on_expr.empty())
                v = act_element(parse_element(on_expr, config), v, pairing);
            FockVector r = act_element(parse_element(act_expr, config), v, pairing);
            if (json)
                out << detail::fock_json(r).dump(2) << "\n";
            else
                out << r.to_string() << "\n";
            return exit_ok;
        }

        if (*dims) {
            std::size_t d = dims_d.value_or(config.dimension);
            DimsReport rep = compare_dims(max_level, d);
            if (json) {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& r : rep.rows)
                    rows.push_back({{"level", r.level},
                                    {"fock", r.fock.get_str()},
                                    {"vistoli", r.vistoli.get_str()},
                                    {"equal", r.equal()}});
                out << nlohmann::json{{"d", d}, {"rows", rows}, {"all_equal", rep.all_equal()}}
                           .dump(2)
                    << "\n";
            } else {
                out << detail::dims_table(rep);
            }
            return rep.all_equal() ? exit_ok : exit_verification_failed;
        }

        if (*sym) {
            GradedDims w;
            if (auto it = config.spaces.find(space); it != config.spaces.end())
                w = it->second;
            else
                w = parse_graded_inline(space);
            GradedDims powered = exterior ? ext_power(w, power) : sym_power(w, power);
            Rational chi(euler(w));
            // chi(ext^k W) = (-1)^k s^k(-chi(W)); s^k(-chi) alone is printed for reference
            Rational s_value = s_coefficient(exterior ? Rational(-chi) : chi, power);
            Rational expected = exterior && power % 2 ? Rational(-s_value) : s_value;
            Rational got(euler(powered));
            bool ok = got == expected;
            std::string name = (exterior ? "ext^" : "S^") + std::to_string(power);
            std::string s_name = "s^" + std::to_string(power) + "(" +
                                 to_string(exterior ? Rational(-chi) : chi) + ")";
            if (json) {
                out << nlohmann::json{{"space", detail::graded_json(w)},
                                      {"euler", to_string(chi)},
                                      {"power", name},
                                      {"dims", detail::graded_json(powered)},
                                      {"euler_power", to_string(got)},
                                      {"s_coefficient", to_string(s_value)},
                                      {"expected_euler", to_string(expected)},
                                      {"ok", ok}}
                           .dump(2)
                    << "\n";
            } else {
                out << "space: " << w.to_string() << "\n"
                    << "euler: " << to_string(chi) << "\n"
                    << name << ": " << powered.to_string() << "\n"
                    << "euler(" << name << "): " << to_string(got) << "\n"
                    << s_name << ": " << to_string(s_value) << "\n";
                if (exterior)
                    out << "(-1)^" << power << " " << s_name << ": " << to_string(expected) << "\n";
                out << (ok ? "OK" : "MISMATCH") << "\n";
            }
            return ok ? exit_ok : exit_verification_failed;
        }

        if (*tri) {
            auto rep = triangularity_report(weight, pairing);
            if (json) {
                out << nlohmann::json{{"ok", rep.ok},
                                      {"pairs", rep.pairs_checked},
                                      {"first_failure", rep.first_failure}}
                           .dump(2)
                    << "\n";
            } else if (rep.ok) {
                out << "OK, triangular with nonzero diagonal, " << rep.pairs_checked
                    << " pairs checked\n";
            } else {
                out << "FAILED: " << rep.first_failure << "\n";
            }
            return rep.ok ? exit_ok : exit_verification_failed;
        }
    } catch (const ExprError& e) {
        err << "expression error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace heisenfock::cli
