#pragma once

// Generalized linear programming over generator forms: solvability tests,
// optimal values and witnesses, the cone of solvable objectives, the
// solution-set formula, and exact strict feasibility.
//
// The LP min{<x*, x> : x in D} attains its minimum exactly when x* pairs
// nonnegatively with every recession direction; the optimum is then the
// smallest pairing over the generator points. All index sets are 1-based,
// matching the u_1..u_k / v_1..v_l numbering of generator files.

#include <gpoly/cones.hpp>
#include <gpoly/polyhedron.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace gpoly {

struct LPProblem {
    RatVec objective;
    GeneratorForm feasible_set;

    LPProblem(RatVec obj, GeneratorForm set)
        : objective(std::move(obj)), feasible_set(std::move(set)) {
        if (objective.size() != feasible_set.dim()) {
            throw std::invalid_argument("LPProblem: objective dimension mismatch");
        }
        if (feasible_set.is_empty()) {
            throw std::domain_error("LPProblem: feasible set is empty");
        }
    }
};

struct LPReport {
    bool solvable = false;
    std::optional<Rat> optimal_value;
    std::optional<RatVec> witness;
    std::optional<RatVec> unbounded_direction;
};

// Argmin point indices I and zero-pairing ray indices J, both 1-based.
struct IndexPattern {
    std::vector<std::size_t> point_indices;
    std::vector<std::size_t> ray_indices;

    bool operator==(const IndexPattern& other) const = default;
};

/// Solvability by the recession-cone test: <x*, v> >= 0 for every ray and
/// <x*, w> = 0 for every lineality direction.
inline bool eaves_check(const LPProblem& p) {
    for (const auto& v : p.feasible_set.rays()) {
        if (dot(p.objective, v) < 0) return false;
    }
    for (const auto& w : p.feasible_set.lineality()) {
        if (dot(p.objective, w) != 0) return false;
    }
    return true;
}

inline LPReport solve(const LPProblem& p) {
    LPReport report;
    for (const auto& v : p.feasible_set.rays()) {
        if (dot(p.objective, v) < 0) {
            report.unbounded_direction = v;
            return report;
        }
    }
    for (const auto& w : p.feasible_set.lineality()) {
        const Rat pw = dot(p.objective, w);
        if (pw != 0) {
            report.unbounded_direction = pw < 0 ? w : vec_neg(w);
            return report;
        }
    }
    report.solvable = true;
    const auto& points = p.feasible_set.points();
    Rat best = dot(p.objective, points[0]);
    std::size_t best_index = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Rat value = dot(p.objective, points[i]);
        if (value < best) {
            best = value;
            best_index = i;
        }
    }
    report.optimal_value = best;
    report.witness = points[best_index];
    return report;
}

/// The infimum of <x*, .> over the feasible set when it is bounded below
/// (then it is attained), or nullopt as the "minus infinity" marker.
inline std::optional<Rat> frank_wolfe_infimum(const LPProblem& p) {
    bool bounded_below = true;
    for (const auto& v : p.feasible_set.rays()) {
        if (dot(p.objective, v) < 0) bounded_below = false;
    }
    for (const auto& w : p.feasible_set.lineality()) {
        if (dot(p.objective, w) != 0) bounded_below = false;
    }
    if (!bounded_below) return std::nullopt;
    std::optional<Rat> inf;
    for (const auto& u : p.feasible_set.points()) {
        const Rat value = dot(p.objective, u);
        if (!inf || value < *inf) inf = value;
    }
    return inf;
}

/// The cone G of all objectives for which the LP over d is solvable:
/// the dual of the recession cone.
inline ConeForm solvable_cone(const GeneratorForm& d) {
    if (d.is_empty()) throw std::domain_error("solvable_cone: feasible set is empty");
    GeneratorForm rec = recession_cone(d);
    return dual_cone(ConeForm{d.dim(), rec.rays(), rec.lineality()});
}

inline IndexPattern index_pattern(const GeneratorForm& d, const RatVec& objective) {
    LPProblem p(objective, d);
    if (!eaves_check(p)) {
        throw std::domain_error("index_pattern: objective is not in the solvable cone");
    }
    Rat best = dot(objective, d.points()[0]);
    for (const auto& u : d.points()) best = std::min(best, dot(objective, u));

    IndexPattern pattern;
    for (std::size_t i = 0; i < d.points().size(); ++i) {
        if (dot(objective, d.points()[i]) == best) pattern.point_indices.push_back(i + 1);
    }
    for (std::size_t j = 0; j < d.rays().size(); ++j) {
        if (dot(objective, d.rays()[j]) == 0) pattern.ray_indices.push_back(j + 1);
    }
    return pattern;
}

/// The full solution set S(x*) = conv{u_i : i in I} + cone{v_j : j in J} + X0.
inline GeneratorForm solution_set(const GeneratorForm& d, const RatVec& objective) {
    IndexPattern pattern = index_pattern(d, objective);
    std::vector<RatVec> points, rays;
    for (auto i : pattern.point_indices) points.push_back(d.points()[i - 1]);
    for (auto j : pattern.ray_indices) rays.push_back(d.rays()[j - 1]);
    return GeneratorForm(d.dim(), std::move(points), std::move(rays), d.lineality());
}

enum class LPStatus { infeasible, unbounded, optimal };

struct MaximizeResult {
    LPStatus status = LPStatus::infeasible;
    Rat value;
    RatVec argmax;
};

/// Exact maximization of a linear functional over an H-form by generator
/// enumeration of the converted set.
inline MaximizeResult maximize_over(const HForm& h, const RatVec& objective) {
    GeneratorForm g = h_to_v(h);
    if (g.is_empty()) return {};
    for (const auto& v : g.rays()) {
        if (dot(objective, v) > 0) return {LPStatus::unbounded, Rat(0), v};
    }
    for (const auto& w : g.lineality()) {
        const Rat pw = dot(objective, w);
        if (pw != 0) return {LPStatus::unbounded, Rat(0), pw > 0 ? w : vec_neg(w)};
    }
    MaximizeResult result{LPStatus::optimal, dot(objective, g.points()[0]), g.points()[0]};
    for (const auto& u : g.points()) {
        const Rat value = dot(objective, u);
        if (value > result.value) {
            result.value = value;
            result.argmax = u;
        }
    }
    return result;
}

/// A point satisfying the H-form with the listed inequality rows strict
/// (indices 0-based), or nullopt when none exists. A gap variable t is
/// maximized subject to C_r x + t <= alpha_r on strict rows and t <= 1; the
/// cap keeps the auxiliary LP bounded without changing emptiness, and a
/// strict point exists exactly when the maximal t is positive.
inline std::optional<RatVec> strict_feasibility(const HForm& h,
                                                const std::vector<std::size_t>& strict_rows) {
    const std::size_t n = h.dim();
    std::set<std::size_t> strict(strict_rows.begin(), strict_rows.end());
    for (auto r : strict) {
        if (r >= h.ineq_matrix().n_rows()) {
            throw std::invalid_argument("strict_feasibility: strict row index out of range");
        }
    }

    RatMat eq(0, n + 1);
    RatVec eq_rhs = h.eq_rhs();
    for (std::size_t i = 0; i < h.eq_matrix().n_rows(); ++i) {
        RatVec row = h.eq_matrix().row(i);
        row.push_back(Rat(0));
        eq.append_row(std::move(row));
    }
    RatMat ineq(0, n + 1);
    RatVec ineq_rhs = h.ineq_rhs();
    for (std::size_t i = 0; i < h.ineq_matrix().n_rows(); ++i) {
        RatVec row = h.ineq_matrix().row(i);
        row.push_back(strict.count(i) ? Rat(1) : Rat(0));
        ineq.append_row(std::move(row));
    }
    {
        RatVec cap(n + 1, Rat(0));
        cap[n] = Rat(1);
        ineq.append_row(std::move(cap));
        ineq_rhs.push_back(Rat(1));
    }

    RatVec gap_objective(n + 1, Rat(0));
    gap_objective[n] = Rat(1);
    MaximizeResult best = maximize_over(
        HForm(n + 1, std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs)),
        gap_objective);
    if (best.status != LPStatus::optimal || best.value <= 0) return std::nullopt;
    return RatVec(best.argmax.begin(), best.argmax.end() - 1);
}

}  // namespace gpoly
