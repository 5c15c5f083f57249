#pragma once

// JSON file formats: H-forms, V-forms, cones, decompositions, LP reports,
// VLP problems and weak-efficiency results. Rationals travel as "p/q"
// strings (plain integers are also accepted on input). Field order is
// irrelevant on input; unknown fields are rejected by name. Emitted
// documents have a fixed field order so output is byte-reproducible.

#include <gpoly/cab_demo.hpp>
#include <gpoly/cones.hpp>
#include <gpoly/linprog.hpp>
#include <gpoly/polyhedron.hpp>
#include <gpoly/vlp.hpp>

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace gpoly {

using json = nlohmann::ordered_json;

namespace io_detail {

inline void check_fields(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    if (!obj.is_object()) {
        throw std::invalid_argument(where + ": expected a JSON object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* name : allowed) {
            if (it.key() == name) {
                known = true;
                break;
            }
        }
        if (!known) throw std::invalid_argument(where + ": unknown field '" + it.key() + "'");
    }
}

}  // namespace io_detail

inline Rat rat_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw std::invalid_argument(where + ": expected a rational string");
}

inline json rat_to_json(const Rat& r) { return json(rat_to_string(r)); }

inline RatVec vec_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
    RatVec out;
    for (const auto& e : j) out.push_back(rat_from_json(e, where));
    return out;
}

inline json vec_to_json(const RatVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rat_to_json(x));
    return arr;
}

inline std::vector<RatVec> vec_list_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of vectors");
    std::vector<RatVec> out;
    for (const auto& e : j) out.push_back(vec_from_json(e, where));
    return out;
}

inline json vec_list_to_json(const std::vector<RatVec>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(vec_to_json(v));
    return arr;
}

inline RatMat mat_from_json(const json& j, std::size_t n_cols, const std::string& where) {
    auto rows = vec_list_from_json(j, where);
    for (const auto& r : rows) {
        if (r.size() != n_cols) {
            throw std::invalid_argument(where + ": row width differs from dim");
        }
    }
    return RatMat::from_rows(std::move(rows), n_cols);
}

inline json mat_to_json(const RatMat& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.n_rows(); ++i) arr.push_back(vec_to_json(m.row(i)));
    return arr;
}

inline bool looks_like_hform(const json& j) {
    return j.is_object() && (j.contains("eq") || j.contains("ineq"));
}

inline HForm hform_from_json(const json& j) {
    io_detail::check_fields(j, {"dim", "eq", "ineq"}, "H-form");
    if (!j.contains("dim")) throw std::invalid_argument("H-form: missing field 'dim'");
    const std::size_t dim = j.at("dim").get<std::size_t>();

    RatMat a(0, dim);
    RatVec y;
    if (j.contains("eq")) {
        const json& eq = j.at("eq");
        io_detail::check_fields(eq, {"A", "y"}, "H-form eq");
        if (eq.contains("A")) a = mat_from_json(eq.at("A"), dim, "H-form eq.A");
        if (eq.contains("y")) y = vec_from_json(eq.at("y"), "H-form eq.y");
    }
    RatMat c(0, dim);
    RatVec alpha;
    if (j.contains("ineq")) {
        const json& ineq = j.at("ineq");
        io_detail::check_fields(ineq, {"C", "alpha"}, "H-form ineq");
        if (ineq.contains("C")) c = mat_from_json(ineq.at("C"), dim, "H-form ineq.C");
        if (ineq.contains("alpha")) alpha = vec_from_json(ineq.at("alpha"), "H-form ineq.alpha");
    }
    return HForm(dim, std::move(a), std::move(y), std::move(c), std::move(alpha));
}

inline json hform_to_json(const HForm& h) {
    json j;
    j["dim"] = h.dim();
    j["eq"] = json{{"A", mat_to_json(h.eq_matrix())}, {"y", vec_to_json(h.eq_rhs())}};
    j["ineq"] = json{{"C", mat_to_json(h.ineq_matrix())}, {"alpha", vec_to_json(h.ineq_rhs())}};
    return j;
}

inline GeneratorForm vform_from_json(const json& j) {
    io_detail::check_fields(j, {"dim", "points", "rays", "lineality"}, "V-form");
    if (!j.contains("dim")) throw std::invalid_argument("V-form: missing field 'dim'");
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<RatVec> points, rays, lineality;
    if (j.contains("points")) points = vec_list_from_json(j.at("points"), "V-form points");
    if (j.contains("rays")) rays = vec_list_from_json(j.at("rays"), "V-form rays");
    if (j.contains("lineality")) lineality = vec_list_from_json(j.at("lineality"), "V-form lineality");
    for (const auto& p : points) {
        if (p.size() != dim) throw std::invalid_argument("V-form points: row width differs from dim");
    }
    for (const auto& r : rays) {
        if (r.size() != dim) throw std::invalid_argument("V-form rays: row width differs from dim");
    }
    for (const auto& w : lineality) {
        if (w.size() != dim) {
            throw std::invalid_argument("V-form lineality: row width differs from dim");
        }
    }
    return GeneratorForm(dim, std::move(points), std::move(rays), std::move(lineality));
}

inline json vform_to_json(const GeneratorForm& g) {
    json j;
    j["dim"] = g.dim();
    j["points"] = vec_list_to_json(g.points());
    j["rays"] = vec_list_to_json(g.rays());
    j["lineality"] = vec_list_to_json(g.lineality());
    return j;
}

// A cone file is the V-form file with the origin as its only point; the
// points field may be omitted on input.
inline ConeForm cone_from_json(const json& j) {
    io_detail::check_fields(j, {"dim", "points", "rays", "lineality"}, "cone");
    if (!j.contains("dim")) throw std::invalid_argument("cone: missing field 'dim'");
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (j.contains("points")) {
        auto points = vec_list_from_json(j.at("points"), "cone points");
        if (points.size() > 1 || (points.size() == 1 && !is_zero_vec(points[0]))) {
            throw std::invalid_argument("cone: points must be absent or just the origin");
        }
    }
    std::vector<RatVec> rays, lineality;
    if (j.contains("rays")) rays = vec_list_from_json(j.at("rays"), "cone rays");
    if (j.contains("lineality")) lineality = vec_list_from_json(j.at("lineality"), "cone lineality");
    // Reuse GeneratorForm validation (dimensions, zero rays, independence).
    GeneratorForm checked(dim, {RatVec(dim, Rat(0))}, std::move(rays), std::move(lineality));
    return ConeForm{dim, checked.rays(), checked.lineality()};
}

inline json cone_to_json(const ConeForm& c) {
    return vform_to_json(c.as_generators());
}

inline json decomposition_to_json(const Decomposition& d) {
    json j;
    j["x0"] = vec_list_to_json(d.x0_basis);
    j["x1"] = vec_list_to_json(d.x1_basis);
    j["d1"] = vform_to_json(d.d1);
    return j;
}

inline json certificate_to_json(const MembershipCertificate& c) {
    json j;
    j["lambda"] = vec_to_json(c.lambda);
    j["mu"] = vec_to_json(c.mu);
    j["lineality"] = vec_to_json(c.lineality_coeffs);
    return j;
}

inline json lp_report_to_json(const LPReport& r) {
    json j;
    j["solvable"] = r.solvable;
    j["value"] = r.optimal_value ? rat_to_json(*r.optimal_value) : json(nullptr);
    j["witness"] = r.witness ? vec_to_json(*r.witness) : json(nullptr);
    j["unbounded_direction"] =
        r.unbounded_direction ? vec_to_json(*r.unbounded_direction) : json(nullptr);
    return j;
}

inline json index_pattern_to_json(const IndexPattern& p) {
    json j;
    j["I"] = p.point_indices;
    j["J"] = p.ray_indices;
    return j;
}

/// Feasible-set files may be either form; H-forms are converted.
inline GeneratorForm feasible_set_from_json(const json& j, const std::string& where) {
    if (looks_like_hform(j)) return h_to_v(hform_from_json(j));
    if (j.is_object() && j.contains("points")) return vform_from_json(j);
    throw std::invalid_argument(where + ": expected an H-form or V-form object");
}

inline VLPProblem vlp_from_json(const json& j) {
    io_detail::check_fields(j, {"M", "D", "K"}, "VLP problem");
    for (const char* field : {"M", "D", "K"}) {
        if (!j.contains(field)) {
            throw std::invalid_argument(std::string("VLP problem: missing field '") + field + "'");
        }
    }
    GeneratorForm d = feasible_set_from_json(j.at("D"), "VLP problem D");
    RatMat m = mat_from_json(j.at("M"), d.dim(), "VLP problem M");
    HForm k = hform_from_json(j.at("K"));
    return VLPProblem(std::move(m), std::move(d), std::move(k));
}

inline json weak_eff_set_to_json(const WeakEffSet& w) {
    json j;
    j["covers_all_of_D"] = w.covers_all_of_d;
    json pieces = json::array();
    for (const auto& p : w.pieces) {
        json pj;
        pj["I"] = p.pattern.point_indices;
        pj["J"] = p.pattern.ray_indices;
        pj["x_star"] = vec_to_json(p.objective_witness);
        pj["y_star"] = vec_to_json(p.scalarizer_witness);
        pj["set"] = vform_to_json(p.piece);
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

inline json demo_report_to_json(const DemoReport& r) {
    json j;
    j["gram"] = mat_to_json(r.gram);
    j["delta"] = rat_to_json(r.delta);
    j["eta"] = json::array({rat_to_json(r.eta.first), rat_to_json(r.eta.second)});
    j["u"] = vec_to_json(r.u.coefficients);
    j["v1"] = vec_to_json(r.v1.coefficients);
    j["v2"] = vec_to_json(r.v2.coefficients);
    j["identities_ok"] = r.identities_ok;
    return j;
}

}  // namespace gpoly
