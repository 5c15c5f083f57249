// gpoly: exact-rational toolkit for generalized polyhedral convex sets.
// One verb per operation; files and inline vectors are JSON; all results are
// deterministic (generators sorted, rationals canonical).

#include <gpoly/cab_demo.hpp>
#include <gpoly/cones.hpp>
#include <gpoly/json_io.hpp>
#include <gpoly/linprog.hpp>
#include <gpoly/polyhedron.hpp>
#include <gpoly/vlp.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using gpoly::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    return json::parse(in);
}

gpoly::RatVec parse_inline_vector(const std::string& text, const std::string& what) {
    return gpoly::vec_from_json(json::parse(text), what);
}

gpoly::RatVec parse_csv_rationals(const std::string& text, const std::string& what) {
    gpoly::RatVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(gpoly::rat_from_string(item));
    if (out.empty()) throw std::invalid_argument(what + ": no coefficients given");
    return out;
}

std::vector<std::size_t> parse_csv_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed row index '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

// Accepts a polyhedron file in either form and returns generators.
gpoly::GeneratorForm load_feasible_set(const std::string& path) {
    return gpoly::feasible_set_from_json(load_json_file(path), path);
}

gpoly::ConeForm load_cone(const std::string& path) {
    const json j = load_json_file(path);
    if (gpoly::looks_like_hform(j)) return gpoly::cone_representation(gpoly::hform_from_json(j));
    return gpoly::cone_from_json(j);
}

void emit(const json& result, const std::string& out_path) {
    const std::string text = result.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << text;
    }
}

std::string poly_to_string(const gpoly::RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < p.coefficients.size(); ++d) {
        if (p.coefficients[d] == 0) continue;
        if (!out.empty()) out += " + ";
        out += gpoly::rat_to_string(p.coefficients[d]);
        if (d == 1) out += "*t";
        if (d > 1) out += "*t^" + std::to_string(d);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-rational toolkit for generalized polyhedral convex sets"};
    app.require_subcommand(1);

    std::string in_path, out_path, set_path, to_form, objective_text, point_text, strict_rows_text;
    std::string omega1_text, omega2_text, a_text = "0", b_text = "1", alpha1_text = "0",
                            alpha2_text = "0";

    auto* convert = app.add_subcommand("convert", "Convert between H-form and V-form");
    convert->add_option("--in", in_path, "polyhedron file (H- or V-form)")->required();
    convert->add_option("--to", to_form, "target form: h or v")->required();
    convert->add_option("--out", out_path, "output file (default stdout)");

    auto* membership = app.add_subcommand(
        "membership", "Point membership, or strictly feasible point of listed rows");
    membership->add_option("--set", set_path, "polyhedron file")->required();
    membership->add_option("--point", point_text, "query point as a JSON array");
    membership->add_option("--strict-rows", strict_rows_text,
                           "0-based inequality rows required strict (H-form input)");
    membership->add_option("--out", out_path, "output file (default stdout)");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split an H-form into D1 + X0");
    decompose_cmd->add_option("--in", in_path, "H-form file")->required();
    decompose_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* recession = app.add_subcommand("recession", "Recession cone of a polyhedron");
    recession->add_option("--in", in_path, "polyhedron file")->required();
    recession->add_option("--out", out_path, "output file (default stdout)");

    auto* cone_rep = app.add_subcommand(
        "cone-rep", "Generators of a cone given as a homogeneous H-form (rhs all zero)");
    cone_rep->add_option("--in", in_path, "H-form cone file")->required();
    cone_rep->add_option("--out", out_path, "output file (default stdout)");

    auto* dual = app.add_subcommand("dual-cone", "Dual cone");
    dual->add_option("--in", in_path, "cone file (V-form cone or homogeneous H-form)")->required();
    dual->add_option("--out", out_path, "output file (default stdout)");

    auto* lp_solve = app.add_subcommand("lp-solve", "Minimize a linear objective");
    lp_solve->add_option("--set", set_path, "feasible set file")->required();
    lp_solve->add_option("--objective", objective_text, "objective as a JSON array")->required();
    lp_solve->add_option("--out", out_path, "output file (default stdout)");

    auto* lp_cone = app.add_subcommand("lp-cone", "Cone of objectives with attained minimum");
    lp_cone->add_option("--set", set_path, "feasible set file")->required();
    lp_cone->add_option("--out", out_path, "output file (default stdout)");

    auto* lp_sol = app.add_subcommand("lp-solution-set", "Full solution set of an LP");
    lp_sol->add_option("--set", set_path, "feasible set file")->required();
    lp_sol->add_option("--objective", objective_text, "objective as a JSON array")->required();
    lp_sol->add_option("--out", out_path, "output file (default stdout)");

    auto* vlp_exists = app.add_subcommand("vlp-exists", "Existence of weakly efficient solutions");
    vlp_exists->add_option("--in", in_path, "VLP problem file")->required();
    vlp_exists->add_option("--out", out_path, "output file (default stdout)");

    auto* vlp_weak = app.add_subcommand("vlp-weak-set", "Weakly efficient set as pattern pieces");
    vlp_weak->add_option("--in", in_path, "VLP problem file")->required();
    vlp_weak->add_option("--out", out_path, "output file (default stdout)");

    auto* vlp_oracle = app.add_subcommand("vlp-oracle", "Direct weak-efficiency test of a point");
    vlp_oracle->add_option("--in", in_path, "VLP problem file")->required();
    vlp_oracle->add_option("--point", point_text, "feasible point as a JSON array")->required();
    vlp_oracle->add_option("--out", out_path, "output file (default stdout)");

    auto* demo = app.add_subcommand(
        "demo-cab", "Generator representation in C[a,b] under two integral constraints");
    demo->add_option("--omega1", omega1_text, "weight 1 coefficients, ascending, comma-separated")
        ->required();
    demo->add_option("--omega2", omega2_text, "weight 2 coefficients, ascending, comma-separated")
        ->required();
    demo->add_option("--a", a_text, "interval start (default 0)");
    demo->add_option("--b", b_text, "interval end (default 1)");
    demo->add_option("--alpha1", alpha1_text, "first bound (default 0)");
    demo->add_option("--alpha2", alpha2_text, "second bound (default 0)");
    demo->add_option("--out", out_path, "JSON output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*convert) {
            if (to_form != "h" && to_form != "v") {
                throw std::invalid_argument("--to must be 'h' or 'v'");
            }
            const json j = load_json_file(in_path);
            if (to_form == "v") {
                gpoly::GeneratorForm g = gpoly::looks_like_hform(j)
                                             ? gpoly::h_to_v(gpoly::hform_from_json(j))
                                             : gpoly::vform_from_json(j);
                emit(gpoly::vform_to_json(g), out_path);
            } else {
                gpoly::HForm h = gpoly::looks_like_hform(j)
                                     ? gpoly::hform_from_json(j)
                                     : gpoly::v_to_h(gpoly::vform_from_json(j));
                emit(gpoly::hform_to_json(h), out_path);
            }
        } else if (*membership) {
            const json j = load_json_file(set_path);
            if (!strict_rows_text.empty()) {
                if (!gpoly::looks_like_hform(j)) {
                    throw std::invalid_argument("--strict-rows requires an H-form input");
                }
                auto witness = gpoly::strict_feasibility(gpoly::hform_from_json(j),
                                                         parse_csv_indices(strict_rows_text));
                json result;
                result["witness"] = witness ? gpoly::vec_to_json(*witness) : json(nullptr);
                emit(result, out_path);
            } else if (!point_text.empty()) {
                const gpoly::RatVec x = parse_inline_vector(point_text, "--point");
                json result;
                if (gpoly::looks_like_hform(j)) {
                    result["member"] = gpoly::contains_h(gpoly::hform_from_json(j), x);
                } else {
                    auto cert = gpoly::contains_v(gpoly::vform_from_json(j), x);
                    result["member"] = cert.has_value();
                    result["certificate"] =
                        cert ? gpoly::certificate_to_json(*cert) : json(nullptr);
                }
                emit(result, out_path);
            } else {
                throw std::invalid_argument("membership needs --point or --strict-rows");
            }
        } else if (*decompose_cmd) {
            auto dec = gpoly::decompose(gpoly::hform_from_json(load_json_file(in_path)));
            emit(gpoly::decomposition_to_json(dec), out_path);
        } else if (*recession) {
            emit(gpoly::vform_to_json(gpoly::recession_cone(load_feasible_set(in_path))), out_path);
        } else if (*cone_rep) {
            auto cone = gpoly::cone_representation(gpoly::hform_from_json(load_json_file(in_path)));
            emit(gpoly::cone_to_json(cone), out_path);
        } else if (*dual) {
            emit(gpoly::cone_to_json(gpoly::dual_cone(load_cone(in_path))), out_path);
        } else if (*lp_solve) {
            gpoly::LPProblem p(parse_inline_vector(objective_text, "--objective"),
                               load_feasible_set(set_path));
            emit(gpoly::lp_report_to_json(gpoly::solve(p)), out_path);
        } else if (*lp_cone) {
            gpoly::GeneratorForm d = load_feasible_set(set_path);
            if (d.is_empty()) throw std::domain_error("feasible set is empty");
            emit(gpoly::cone_to_json(gpoly::solvable_cone(d)), out_path);
        } else if (*lp_sol) {
            gpoly::GeneratorForm d = load_feasible_set(set_path);
            if (d.is_empty()) throw std::domain_error("feasible set is empty");
            const gpoly::RatVec objective = parse_inline_vector(objective_text, "--objective");
            json result = gpoly::index_pattern_to_json(gpoly::index_pattern(d, objective));
            result["set"] = gpoly::vform_to_json(gpoly::solution_set(d, objective));
            emit(result, out_path);
        } else if (*vlp_exists) {
            gpoly::VLPProblem p = gpoly::vlp_from_json(load_json_file(in_path));
            auto witness = gpoly::vlp_has_solution(p);
            json result;
            result["has_solution"] = witness.has_value();
            result["y_star"] = witness ? gpoly::vec_to_json(witness->first) : json(nullptr);
            result["x_star"] = witness ? gpoly::vec_to_json(witness->second) : json(nullptr);
            result["criterion_sufficient"] = gpoly::criterion_sufficient(p);
            emit(result, out_path);
        } else if (*vlp_weak) {
            gpoly::VLPProblem p = gpoly::vlp_from_json(load_json_file(in_path));
            emit(gpoly::weak_eff_set_to_json(gpoly::weakly_efficient_set(p)), out_path);
        } else if (*vlp_oracle) {
            gpoly::VLPProblem p = gpoly::vlp_from_json(load_json_file(in_path));
            const gpoly::RatVec u = parse_inline_vector(point_text, "--point");
            json result;
            result["weakly_efficient"] = gpoly::is_weakly_efficient_oracle(p, u);
            emit(result, out_path);
        } else if (*demo) {
            auto report = gpoly::run_demo(
                gpoly::RatPoly(parse_csv_rationals(omega1_text, "--omega1")),
                gpoly::RatPoly(parse_csv_rationals(omega2_text, "--omega2")),
                gpoly::rat_from_string(a_text), gpoly::rat_from_string(b_text),
                gpoly::rat_from_string(alpha1_text), gpoly::rat_from_string(alpha2_text));
            std::cout << "gram = [[" << gpoly::rat_to_string(report.gram(0, 0)) << ", "
                      << gpoly::rat_to_string(report.gram(0, 1)) << "], ["
                      << gpoly::rat_to_string(report.gram(1, 0)) << ", "
                      << gpoly::rat_to_string(report.gram(1, 1)) << "]]\n"
                      << "delta = " << gpoly::rat_to_string(report.delta) << "\n"
                      << "eta = (" << gpoly::rat_to_string(report.eta.first) << ", "
                      << gpoly::rat_to_string(report.eta.second) << ")\n"
                      << "u  = " << poly_to_string(report.u) << "\n"
                      << "v1 = " << poly_to_string(report.v1) << "\n"
                      << "v2 = " << poly_to_string(report.v2) << "\n"
                      << "identities_ok = " << (report.identities_ok ? "true" : "false") << "\n";
            emit(gpoly::demo_report_to_json(report), out_path);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
