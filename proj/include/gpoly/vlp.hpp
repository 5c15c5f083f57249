#pragma once

// Generalized linear vector optimization: scalarization, solution existence,
// and enumeration of the weakly efficient set E^w as a finite union of
// generalized polyhedra.
//
// Scalarizers live in the dual cone K* of the ordering cone. Every search
// for a suitable y* is an exact feasibility problem over the coefficients of
// the K* generator list (lineality expanded into +/- pairs): coefficients
// lambda >= 0 with sum 1, a maximized margin t <= 1, and nonzeroness of the
// relevant vector enforced by a finite disjunction of one-coordinate strict
// tests. E^w itself is enumerated by realizability of candidate index
// patterns (I, J).

#include <gpoly/cones.hpp>
#include <gpoly/linprog.hpp>
#include <gpoly/polyhedron.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpoly {

struct VLPProblem {
    RatMat objective_map;        // M : X -> Y
    GeneratorForm feasible_set;  // D
    HForm ordering_cone;         // K as a homogeneous H-form in Y

    VLPProblem(RatMat m, GeneratorForm d, HForm k)
        : objective_map(std::move(m)), feasible_set(std::move(d)), ordering_cone(std::move(k)) {
        if (objective_map.n_cols() != feasible_set.dim()) {
            throw std::invalid_argument("VLPProblem: map width differs from feasible-set dim");
        }
        if (ordering_cone.dim() != objective_map.n_rows()) {
            throw std::invalid_argument("VLPProblem: ordering cone lives in the wrong space");
        }
        for (const auto& v : ordering_cone.eq_rhs()) {
            if (v != 0) throw std::invalid_argument("VLPProblem: ordering cone rhs must be zero");
        }
        for (const auto& v : ordering_cone.ineq_rhs()) {
            if (v != 0) throw std::invalid_argument("VLPProblem: ordering cone rhs must be zero");
        }
    }
};

struct WeakEffPiece {
    IndexPattern pattern;
    GeneratorForm piece;
    RatVec objective_witness;   // x* = M^T y*
    RatVec scalarizer_witness;  // y* in K* \ {0}
};

struct WeakEffSet {
    std::vector<WeakEffPiece> pieces;
    bool covers_all_of_d = false;  // true when some y* in K* \ {0} has M^T y* = 0
};

/// Adjoint application M^T y*, the objective of the scalarized problem.
inline RatVec adjoint(const RatMat& m, const RatVec& ystar) {
    if (ystar.size() != m.n_rows()) throw std::invalid_argument("adjoint: dimension mismatch");
    RatVec out(m.n_cols(), Rat(0));
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
        for (std::size_t j = 0; j < m.n_cols(); ++j) out[j] += m(i, j) * ystar[i];
    }
    return out;
}

namespace detail {

// K as cone generators plus its dual's generator list.
struct OrderingConeInfo {
    ConeForm cone;
    ConeForm dual;
    std::vector<RatVec> dual_generators;  // dual rays plus +/- dual lineality
};

inline OrderingConeInfo analyze_ordering_cone(const HForm& k) {
    OrderingConeInfo info;
    info.cone = cone_representation(k);
    info.dual = dual_cone(info.cone);
    for (const auto& r : info.dual.rays) info.dual_generators.push_back(r);
    for (const auto& w : info.dual.lineality) {
        info.dual_generators.push_back(w);
        info.dual_generators.push_back(vec_neg(w));
    }
    return info;
}

// int K is the locus where every nonzero inequality row is strict; it is
// nonempty only if K carries no equality constraints (no implicit or
// explicit ones).
inline bool interior_nonempty(const HForm& k) {
    for (std::size_t i = 0; i < k.eq_matrix().n_rows(); ++i) {
        if (!is_zero_vec(k.eq_matrix().row(i))) return false;
    }
    RatMat rows(0, k.dim());
    for (std::size_t i = 0; i < k.ineq_matrix().n_rows(); ++i) {
        if (!is_zero_vec(k.ineq_matrix().row(i))) rows.append_row(k.ineq_matrix().row(i));
    }
    std::vector<std::size_t> all(rows.n_rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    RatVec rhs(rows.n_rows(), Rat(0));
    return strict_feasibility(HForm(k.dim(), std::move(rows), std::move(rhs)), all).has_value();
}

// Feasibility search over scalarizer coefficients: lambda >= 0, sum 1,
// the given equality rows, and margin rows a*lambda >= t with t maximized
// up to the cap 1. Succeeds when the best t is strictly positive.
struct CoefficientSearch {
    std::size_t n_gens = 0;
    std::vector<RatVec> eq_rows;      // a*lambda = 0
    std::vector<RatVec> ge_rows;      // a*lambda >= 0
    std::vector<RatVec> margin_rows;  // a*lambda >= t

    std::optional<RatVec> solve() const {
        const std::size_t nvars = n_gens + 1;  // lambda, t
        RatMat eq(0, nvars);
        RatVec eq_rhs;
        {
            RatVec row(nvars, Rat(0));
            for (std::size_t i = 0; i < n_gens; ++i) row[i] = Rat(1);
            eq.append_row(std::move(row));
            eq_rhs.push_back(Rat(1));
        }
        for (const auto& a : eq_rows) {
            RatVec row = a;
            row.push_back(Rat(0));
            eq.append_row(std::move(row));
            eq_rhs.push_back(Rat(0));
        }
        RatMat ineq(0, nvars);
        RatVec ineq_rhs;
        for (std::size_t i = 0; i < n_gens; ++i) {
            RatVec row(nvars, Rat(0));
            row[i] = Rat(-1);
            ineq.append_row(std::move(row));
            ineq_rhs.push_back(Rat(0));
        }
        for (const auto& a : ge_rows) {
            RatVec row = vec_neg(a);
            row.push_back(Rat(0));
            ineq.append_row(std::move(row));
            ineq_rhs.push_back(Rat(0));
        }
        for (const auto& a : margin_rows) {
            RatVec row = vec_neg(a);
            row.push_back(Rat(1));
            ineq.append_row(std::move(row));
            ineq_rhs.push_back(Rat(0));
        }
        {
            RatVec cap(nvars, Rat(0));
            cap[n_gens] = Rat(1);
            ineq.append_row(std::move(cap));
            ineq_rhs.push_back(Rat(1));
        }
        RatVec gap(nvars, Rat(0));
        gap[n_gens] = Rat(1);
        MaximizeResult best = maximize_over(
            HForm(nvars, std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs)),
            gap);
        if (best.status != LPStatus::optimal || best.value <= 0) return std::nullopt;
        return RatVec(best.argmax.begin(), best.argmax.end() - 1);
    }
};

inline RatVec combine(const std::vector<RatVec>& gens, const RatVec& lambda, std::size_t dim) {
    RatVec out(dim, Rat(0));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t s = 0; s < dim; ++s) out[s] += lambda[i] * gens[i][s];
    }
    return out;
}

}  // namespace detail

/// The scalarized problem min{<y*, Mx> : x in D} for y* in K*.
inline LPProblem scalarize(const VLPProblem& p, const RatVec& ystar) {
    auto info = detail::analyze_ordering_cone(p.ordering_cone);
    if (!pairs_nonnegative(info.cone, ystar)) {
        throw std::domain_error("scalarize: y* is not in the dual cone K*");
    }
    return LPProblem(adjoint(p.objective_map, ystar), p.feasible_set);
}

/// Existence test for (VLP): a witness pair (y* in K*\{0}, x* = M^T y* in G)
/// when one exists. The search maximizes a one-coordinate margin of y* over
/// each coordinate direction and sign in turn.
inline std::optional<std::pair<RatVec, RatVec>> vlp_has_solution(const VLPProblem& p) {
    if (p.feasible_set.is_empty()) throw std::domain_error("vlp_has_solution: empty feasible set");
    auto info = detail::analyze_ordering_cone(p.ordering_cone);
    const auto& gens = info.dual_generators;
    if (gens.empty()) return std::nullopt;  // K* = {0}
    const std::size_t ydim = p.ordering_cone.dim();

    std::vector<RatVec> xgens;
    for (const auto& g : gens) xgens.push_back(adjoint(p.objective_map, g));

    detail::CoefficientSearch search;
    search.n_gens = gens.size();
    for (const auto& v : p.feasible_set.rays()) {
        RatVec a(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) a[i] = dot(xgens[i], v);
        search.ge_rows.push_back(std::move(a));
    }
    for (const auto& w : p.feasible_set.lineality()) {
        RatVec a(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) a[i] = dot(xgens[i], w);
        search.eq_rows.push_back(std::move(a));
    }

    for (std::size_t s = 0; s < ydim; ++s) {
        for (int sign : {+1, -1}) {
            detail::CoefficientSearch attempt = search;
            RatVec margin(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) margin[i] = Rat(sign) * gens[i][s];
            attempt.margin_rows.push_back(std::move(margin));
            if (auto lambda = attempt.solve()) {
                RatVec ystar = detail::combine(gens, *lambda, ydim);
                return std::make_pair(ystar, adjoint(p.objective_map, ystar));
            }
        }
    }
    return std::nullopt;
}

/// The sufficient criterion: some y* in K* with M^T y* in G and M^T y* != 0.
/// Implies (VLP) has a solution; the converse is not asserted.
inline bool criterion_sufficient(const VLPProblem& p) {
    if (p.feasible_set.is_empty()) {
        throw std::domain_error("criterion_sufficient: empty feasible set");
    }
    auto info = detail::analyze_ordering_cone(p.ordering_cone);
    const auto& gens = info.dual_generators;
    if (gens.empty()) return false;
    const std::size_t xdim = p.feasible_set.dim();

    std::vector<RatVec> xgens;
    for (const auto& g : gens) xgens.push_back(adjoint(p.objective_map, g));

    detail::CoefficientSearch search;
    search.n_gens = gens.size();
    for (const auto& v : p.feasible_set.rays()) {
        RatVec a(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) a[i] = dot(xgens[i], v);
        search.ge_rows.push_back(std::move(a));
    }
    for (const auto& w : p.feasible_set.lineality()) {
        RatVec a(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) a[i] = dot(xgens[i], w);
        search.eq_rows.push_back(std::move(a));
    }

    for (std::size_t s = 0; s < xdim; ++s) {
        for (int sign : {+1, -1}) {
            detail::CoefficientSearch attempt = search;
            RatVec margin(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) margin[i] = Rat(sign) * xgens[i][s];
            attempt.margin_rows.push_back(std::move(margin));
            if (attempt.solve()) return true;
        }
    }
    return false;
}

/// Enumerates E^w as solution sets of realizable index patterns. Each
/// candidate (I, J) is accepted exactly when some y* in K*\{0} produces an
/// objective x* = M^T y* whose argmin points are indexed by I and whose
/// zero-pairing rays are indexed by J with strictly positive margins. The
/// x* = 0 contribution (S(0) = D) is reported through covers_all_of_d.
inline WeakEffSet weakly_efficient_set(const VLPProblem& p) {
    if (p.feasible_set.is_empty()) {
        throw std::domain_error("weakly_efficient_set: empty feasible set");
    }
    if (!detail::interior_nonempty(p.ordering_cone)) {
        throw std::domain_error("weakly_efficient_set: int K empty");
    }
    auto info = detail::analyze_ordering_cone(p.ordering_cone);
    const auto& gens = info.dual_generators;
    WeakEffSet result;
    if (gens.empty()) return result;

    const std::size_t ydim = p.ordering_cone.dim();
    const std::size_t k = p.feasible_set.points().size();
    const std::size_t l = p.feasible_set.rays().size();

    std::vector<RatVec> xgens;
    for (const auto& g : gens) xgens.push_back(adjoint(p.objective_map, g));

    // Pairing tables over the generator coefficients.
    auto pair_row = [&](const RatVec& vec) {
        RatVec a(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) a[i] = dot(xgens[i], vec);
        return a;
    };
    std::vector<RatVec> point_rows, ray_rows, lin_rows;
    for (const auto& u : p.feasible_set.points()) point_rows.push_back(pair_row(u));
    for (const auto& v : p.feasible_set.rays()) ray_rows.push_back(pair_row(v));
    for (const auto& w : p.feasible_set.lineality()) lin_rows.push_back(pair_row(w));

    auto with_nonzero_y = [&](const detail::CoefficientSearch& base) -> std::optional<RatVec> {
        for (std::size_t s = 0; s < ydim; ++s) {
            for (int sign : {+1, -1}) {
                detail::CoefficientSearch attempt = base;
                RatVec margin(gens.size());
                for (std::size_t i = 0; i < gens.size(); ++i) margin[i] = Rat(sign) * gens[i][s];
                attempt.margin_rows.push_back(std::move(margin));
                if (auto lambda = attempt.solve()) return lambda;
            }
        }
        return std::nullopt;
    };

    // covers_all_of_d: y* in K*\{0} with M^T y* = 0.
    {
        detail::CoefficientSearch base;
        base.n_gens = gens.size();
        const std::size_t xdim = p.feasible_set.dim();
        for (std::size_t s = 0; s < xdim; ++s) {
            RatVec a(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) a[i] = xgens[i][s];
            base.eq_rows.push_back(std::move(a));
        }
        result.covers_all_of_d = with_nonzero_y(base).has_value();
    }

    for (std::size_t point_mask = 1; point_mask < (std::size_t(1) << k); ++point_mask) {
        for (std::size_t ray_mask = 0; ray_mask < (std::size_t(1) << l); ++ray_mask) {
            detail::CoefficientSearch base;
            base.n_gens = gens.size();
            for (const auto& a : lin_rows) base.eq_rows.push_back(a);

            std::size_t anchor = 0;
            while (!(point_mask & (std::size_t(1) << anchor))) ++anchor;
            for (std::size_t i = 0; i < k; ++i) {
                if (i == anchor) continue;
                RatVec a = vec_sub(point_rows[i], point_rows[anchor]);
                if (point_mask & (std::size_t(1) << i)) {
                    base.eq_rows.push_back(std::move(a));
                } else {
                    base.margin_rows.push_back(std::move(a));
                }
            }
            for (std::size_t j = 0; j < l; ++j) {
                if (ray_mask & (std::size_t(1) << j)) {
                    base.eq_rows.push_back(ray_rows[j]);
                } else {
                    base.margin_rows.push_back(ray_rows[j]);
                }
            }

            auto lambda = with_nonzero_y(base);
            if (!lambda) continue;
            RatVec ystar = detail::combine(gens, *lambda, ydim);
            RatVec xstar = adjoint(p.objective_map, ystar);

            IndexPattern pattern = index_pattern(p.feasible_set, xstar);
            IndexPattern expected;
            for (std::size_t i = 0; i < k; ++i) {
                if (point_mask & (std::size_t(1) << i)) expected.point_indices.push_back(i + 1);
            }
            for (std::size_t j = 0; j < l; ++j) {
                if (ray_mask & (std::size_t(1) << j)) expected.ray_indices.push_back(j + 1);
            }
            if (!(pattern == expected)) {
                throw std::logic_error("weakly_efficient_set: witness realizes a different pattern");
            }
            result.pieces.push_back(WeakEffPiece{std::move(pattern),
                                                 solution_set(p.feasible_set, xstar),
                                                 std::move(xstar), std::move(ystar)});
        }
    }

    std::sort(result.pieces.begin(), result.pieces.end(),
              [](const WeakEffPiece& a, const WeakEffPiece& b) {
                  if (a.pattern.point_indices != b.pattern.point_indices) {
                      return a.pattern.point_indices < b.pattern.point_indices;
                  }
                  return a.pattern.ray_indices < b.pattern.ray_indices;
              });
    return result;
}

/// Scalarization-free weak-efficiency test: u in D is weakly efficient when
/// no x in D makes Mu - Mx interior to K. Builds that system and asks for a
/// strictly feasible point.
inline bool is_weakly_efficient_oracle(const VLPProblem& p, const RatVec& u) {
    if (u.size() != p.feasible_set.dim()) {
        throw std::invalid_argument("is_weakly_efficient_oracle: dimension mismatch");
    }
    if (!contains_v(p.feasible_set, u)) {
        throw std::domain_error("is_weakly_efficient_oracle: point is not in D");
    }
    if (!detail::interior_nonempty(p.ordering_cone)) {
        throw std::domain_error("is_weakly_efficient_oracle: int K empty");
    }

    const std::size_t n = p.feasible_set.dim();
    HForm d_h = v_to_h(p.feasible_set);
    RatVec mu = p.objective_map.apply(u);

    RatMat ineq = d_h.ineq_matrix();
    RatVec ineq_rhs = d_h.ineq_rhs();
    std::vector<std::size_t> strict;
    const auto& kc = p.ordering_cone.ineq_matrix();
    for (std::size_t r = 0; r < kc.n_rows(); ++r) {
        if (is_zero_vec(kc.row(r))) continue;
        RatVec row(n, Rat(0));
        for (std::size_t i = 0; i < kc.n_cols(); ++i) {
            for (std::size_t j = 0; j < n; ++j) row[j] -= kc(r, i) * p.objective_map(i, j);
        }
        strict.push_back(ineq.n_rows());
        ineq.append_row(std::move(row));
        ineq_rhs.push_back(-dot(kc.row(r), mu));
    }

    HForm dominated(n, d_h.eq_matrix(), d_h.eq_rhs(), std::move(ineq), std::move(ineq_rhs));
    return !strict_feasibility(dominated, strict).has_value();
}

}  // namespace gpoly
