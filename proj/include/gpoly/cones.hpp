#pragma once

// Structural decomposition D = D1 + X0 and polyhedral cone representations,
// including dual cones. The complement X1 is always the coordinate
// complement picked from rref pivots, so results are deterministic.

#include <gpoly/polyhedron.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpoly {

// cone{rays} + span{lineality}; always contains the origin.
struct ConeForm {
    std::size_t dim = 0;
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;

    GeneratorForm as_generators() const {
        return GeneratorForm(dim, {RatVec(dim, Rat(0))}, rays, lineality);
    }
};

// D = D1 + X0 with D1 a polyhedron in the complement X1, stored in
// X1-coordinates (one coordinate per x1 basis vector).
struct Decomposition {
    std::vector<RatVec> x0_basis;
    std::vector<RatVec> x1_basis;
    GeneratorForm d1;
};

/// Splits a feasible H-form along its lineality space: X0 = ker[A; C],
/// X1 = the coordinate complement, D1 = the same constraints restricted to
/// X1 and converted to generators. Lifting d1 back and adding span(X0)
/// reproduces the set.
inline Decomposition decompose(const HForm& h) {
    const std::size_t n = h.dim();
    auto x0 = nullspace_basis(vstack(h.eq_matrix(), h.ineq_matrix()));
    auto comp_cols = complement_columns(x0, n);

    // comp_cols can only be empty when every constraint row is zero; then
    // X1 = {0} and D1 is the origin, stored in a padded 1-dimensional space
    // because generator forms carry a positive dimension.
    const bool padded = comp_cols.empty();
    GeneratorForm d1 = GeneratorForm(1, {RatVec{Rat(0)}}, {}, {});
    if (padded) {
        for (const auto& v : h.eq_rhs()) {
            if (v != 0) throw std::domain_error("decompose: infeasible H-form");
        }
        for (const auto& v : h.ineq_rhs()) {
            if (v < 0) throw std::domain_error("decompose: infeasible H-form");
        }
    } else {
        HForm restricted(comp_cols.size(), select_columns(h.eq_matrix(), comp_cols), h.eq_rhs(),
                         select_columns(h.ineq_matrix(), comp_cols), h.ineq_rhs());
        d1 = h_to_v(restricted);
    }
    if (d1.is_empty()) throw std::domain_error("decompose: infeasible H-form");
    if (!d1.lineality().empty()) {
        throw std::logic_error("decompose: restricted polyhedron is not pointed");
    }

    std::vector<RatVec> x0_canonical;
    for (auto v : x0) {
        detail::make_primitive(v);
        detail::orient_first_nonzero_positive(v);
        x0_canonical.push_back(std::move(v));
    }
    std::sort(x0_canonical.begin(), x0_canonical.end(), detail::lex_less);

    std::vector<RatVec> x1;
    for (auto c : comp_cols) x1.push_back(unit_vec<Rat>(n, c));
    return Decomposition{std::move(x0_canonical), std::move(x1), std::move(d1)};
}

/// Lifts a decomposition back to the ambient space (used by tests and the
/// reassembly invariant): points/rays of d1 through x1_basis, lineality x0.
inline GeneratorForm reassemble(const Decomposition& dec, std::size_t ambient_dim) {
    auto lift = [&](const RatVec& z) {
        RatVec x(ambient_dim, Rat(0));
        for (std::size_t j = 0; j < dec.x1_basis.size(); ++j) {
            for (std::size_t s = 0; s < ambient_dim; ++s) x[s] += z[j] * dec.x1_basis[j][s];
        }
        return x;
    };
    std::vector<RatVec> points, rays;
    if (dec.x1_basis.empty()) {
        points.push_back(RatVec(ambient_dim, Rat(0)));
    } else {
        for (const auto& p : dec.d1.points()) points.push_back(lift(p));
        for (const auto& r : dec.d1.rays()) rays.push_back(lift(r));
    }
    return GeneratorForm(ambient_dim, std::move(points), std::move(rays), dec.x0_basis);
}

/// Representation of a generalized polyhedral convex cone given by a
/// homogeneous H-form (rhs all zero): generator points fold into the ray
/// list, so the result is cone{rays} + span{lineality}.
inline ConeForm cone_representation(const HForm& h) {
    for (const auto& v : h.eq_rhs()) {
        if (v != 0) throw std::domain_error("cone_representation: nonzero rhs, not a cone");
    }
    for (const auto& v : h.ineq_rhs()) {
        if (v != 0) throw std::domain_error("cone_representation: nonzero rhs, not a cone");
    }
    GeneratorForm g = h_to_v(h);  // contains 0, never empty
    std::vector<RatVec> rays = g.rays();
    for (auto u : g.points()) {
        if (is_zero_vec(u)) continue;
        detail::make_primitive(u);
        rays.push_back(std::move(u));
    }
    detail::sort_and_dedupe(rays);
    return ConeForm{h.dim(), std::move(rays), g.lineality()};
}

/// Dual cone {x* : <x*, v> >= 0 for all v in c}, computed by converting its
/// halfspace description with the same double-description engine. The dual
/// space is identified with the primal coordinates through the dot product.
inline ConeForm dual_cone(const ConeForm& c) {
    std::vector<RatVec> ineq_rows;
    for (const auto& r : c.rays) ineq_rows.push_back(vec_neg(r));  // -r*x <= 0
    ConeGenerators gens = double_description(ineq_rows, c.lineality, c.dim);
    return ConeForm{c.dim, std::move(gens.rays), std::move(gens.lineality)};
}

/// Pairing test for membership in the dual of `c` (finite reduction over
/// generators): <y, r> >= 0 on rays and <y, w> = 0 on the lineality basis.
inline bool pairs_nonnegative(const ConeForm& c, const RatVec& y) {
    if (y.size() != c.dim) throw std::invalid_argument("pairs_nonnegative: dimension mismatch");
    for (const auto& r : c.rays) {
        if (dot(y, r) < 0) return false;
    }
    for (const auto& w : c.lineality) {
        if (dot(y, w) != 0) return false;
    }
    return true;
}

}  // namespace gpoly
