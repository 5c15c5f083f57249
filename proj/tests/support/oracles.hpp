#pragma once

// Independent brute-force oracles used to freeze expected values. These
// deliberately avoid the double-description path: vertices come from
// enumerating square subsystems, and strict feasibility from a bounded
// rational grid.

#include <gpoly/linalg.hpp>
#include <gpoly/polyhedron.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace testsupport {

using gpoly::HForm;
using gpoly::Rat;
using gpoly::RatMat;
using gpoly::RatVec;

// All vertices of an H-form: feasible unique solutions of dim-sized row
// subsets of the stacked system (equalities always active). Sound for
// pointed feasible sets.
inline std::vector<RatVec> brute_force_vertices(const HForm& h) {
    const std::size_t n = h.dim();
    std::vector<RatVec> rows;
    RatVec rhs;
    for (std::size_t i = 0; i < h.eq_matrix().n_rows(); ++i) {
        rows.push_back(h.eq_matrix().row(i));
        rhs.push_back(h.eq_rhs()[i]);
    }
    const std::size_t first_ineq = rows.size();
    for (std::size_t i = 0; i < h.ineq_matrix().n_rows(); ++i) {
        rows.push_back(h.ineq_matrix().row(i));
        rhs.push_back(h.ineq_rhs()[i]);
    }

    std::vector<RatVec> vertices;
    std::vector<std::size_t> pick;
    auto try_subset = [&](const std::vector<std::size_t>& subset) {
        RatMat m(0, n);
        RatVec b;
        for (auto i : subset) {
            m.append_row(rows[i]);
            b.push_back(rhs[i]);
        }
        auto [r, pivots] = gpoly::rref(m);
        if (pivots.size() != n) return;  // not a unique intersection point
        auto x = gpoly::solve_linear(m, b);
        if (!x || !gpoly::contains_h(h, *x)) return;
        if (std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) {
            vertices.push_back(*x);
        }
    };
    // All subsets of size n that include every equality row.
    std::vector<std::size_t> ineq_indices;
    for (std::size_t i = first_ineq; i < rows.size(); ++i) ineq_indices.push_back(i);
    const std::size_t need = n >= first_ineq ? n - first_ineq : 0;
    if (first_ineq > n) return {};
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == need) {
            std::vector<std::size_t> subset;
            for (std::size_t i = 0; i < first_ineq; ++i) subset.push_back(i);
            subset.insert(subset.end(), chosen.begin(), chosen.end());
            try_subset(subset);
            return;
        }
        for (std::size_t i = start; i < ineq_indices.size(); ++i) {
            chosen.push_back(ineq_indices[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(vertices.begin(), vertices.end(), gpoly::detail::lex_less);
    return vertices;
}

// Denominator-bounded grid search for a point of h satisfying the listed
// inequality rows strictly. Dimensions 1 and 2 only.
inline std::optional<RatVec> grid_strict_point(const HForm& h,
                                               const std::vector<std::size_t>& strict_rows,
                                               int max_den = 4, int max_num = 12) {
    auto satisfied = [&](const RatVec& x) {
        if (!gpoly::contains_h(h, x)) return false;
        for (auto r : strict_rows) {
            if (gpoly::dot(h.ineq_matrix().row(r), x) >= h.ineq_rhs()[r]) return false;
        }
        return true;
    };
    for (int den = 1; den <= max_den; ++den) {
        if (h.dim() == 1) {
            for (int p = -max_num * den; p <= max_num * den; ++p) {
                RatVec x{Rat(p, den)};
                if (satisfied(x)) return x;
            }
        } else {
            for (int p = -max_num * den; p <= max_num * den; ++p) {
                for (int q = -max_num * den; q <= max_num * den; ++q) {
                    RatVec x{Rat(p, den), Rat(q, den)};
                    if (satisfied(x)) return x;
                }
            }
        }
    }
    return std::nullopt;
}

// Two generator forms describe the same set when each one's generators are
// members of the other (points directly, rays and +/- lineality through the
// recession cone).
inline bool same_set(const gpoly::GeneratorForm& a, const gpoly::GeneratorForm& b) {
    auto one_way = [](const gpoly::GeneratorForm& from, const gpoly::GeneratorForm& to) {
        for (const auto& p : from.points()) {
            if (!gpoly::contains_v(to, p)) return false;
        }
        const gpoly::GeneratorForm to_rec = gpoly::recession_cone(to);
        for (const auto& r : from.rays()) {
            if (!gpoly::contains_v(to_rec, r)) return false;
        }
        for (const auto& w : from.lineality()) {
            if (!gpoly::contains_v(to_rec, w)) return false;
            if (!gpoly::contains_v(to_rec, gpoly::vec_neg(w))) return false;
        }
        return true;
    };
    return one_way(a, b) && one_way(b, a);
}

}  // namespace testsupport
