#pragma once

// The two descriptions of a generalized polyhedral convex set in Q^n and the
// exact conversions between them.
//
// An HForm is { x : A*x = y, C*x <= alpha }. A GeneratorForm is
//
//     conv{points} + cone{rays} + span{lineality},
//
// empty exactly when `points` is empty. Conversion H -> V first splits off
// the lineality space X0 = ker[A; C], restricts the system to the coordinate
// complement X1 (where it is pointed), runs double description on the
// homogenization there, and lifts the result back. Conversion V -> H goes
// through the polar of the homogenization cone.

#include <gpoly/double_description.hpp>
#include <gpoly/linalg.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gpoly {

class HForm {
public:
    HForm(std::size_t dim, RatMat eq_matrix, RatVec eq_rhs, RatMat ineq_matrix, RatVec ineq_rhs)
        : dim_(dim),
          eq_matrix_(std::move(eq_matrix)),
          eq_rhs_(std::move(eq_rhs)),
          ineq_matrix_(std::move(ineq_matrix)),
          ineq_rhs_(std::move(ineq_rhs)) {
        if (dim_ == 0) throw std::invalid_argument("HForm: dimension must be positive");
        if (eq_matrix_.n_cols() != dim_ || ineq_matrix_.n_cols() != dim_) {
            throw std::invalid_argument("HForm: constraint width differs from dim");
        }
        if (eq_rhs_.size() != eq_matrix_.n_rows()) {
            throw std::invalid_argument("HForm: eq rhs length differs from eq row count");
        }
        if (ineq_rhs_.size() != ineq_matrix_.n_rows()) {
            throw std::invalid_argument("HForm: ineq rhs length differs from ineq row count");
        }
    }

    // Inequalities only ("L = X" case).
    HForm(std::size_t dim, RatMat ineq_matrix, RatVec ineq_rhs)
        : HForm(dim, RatMat(0, dim), RatVec{}, std::move(ineq_matrix), std::move(ineq_rhs)) {}

    std::size_t dim() const { return dim_; }
    const RatMat& eq_matrix() const { return eq_matrix_; }
    const RatVec& eq_rhs() const { return eq_rhs_; }
    const RatMat& ineq_matrix() const { return ineq_matrix_; }
    const RatVec& ineq_rhs() const { return ineq_rhs_; }

private:
    std::size_t dim_;
    RatMat eq_matrix_;
    RatVec eq_rhs_;
    RatMat ineq_matrix_;
    RatVec ineq_rhs_;
};

class GeneratorForm {
public:
    GeneratorForm(std::size_t dim, std::vector<RatVec> points, std::vector<RatVec> rays,
                  std::vector<RatVec> lineality)
        : dim_(dim),
          points_(std::move(points)),
          rays_(std::move(rays)),
          lineality_(std::move(lineality)) {
        if (dim_ == 0) throw std::invalid_argument("GeneratorForm: dimension must be positive");
        auto check_dims = [&](const std::vector<RatVec>& vs, const char* what) {
            for (const auto& v : vs) {
                if (v.size() != dim_) {
                    throw std::invalid_argument(std::string("GeneratorForm: ") + what +
                                                " of wrong dimension");
                }
            }
        };
        check_dims(points_, "point");
        check_dims(rays_, "ray");
        check_dims(lineality_, "lineality vector");
        for (const auto& r : rays_) {
            if (is_zero_vec(r)) throw std::invalid_argument("GeneratorForm: zero ray");
        }
        if (!lineality_.empty()) {
            auto [r, pivots] = rref(RatMat::from_rows(lineality_, dim_));
            if (pivots.size() != lineality_.size()) {
                throw std::invalid_argument("GeneratorForm: lineality basis is dependent");
            }
        }
    }

    static GeneratorForm empty_set(std::size_t dim) { return GeneratorForm(dim, {}, {}, {}); }

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return points_.empty(); }
    const std::vector<RatVec>& points() const { return points_; }
    const std::vector<RatVec>& rays() const { return rays_; }
    const std::vector<RatVec>& lineality() const { return lineality_; }

private:
    std::size_t dim_;
    std::vector<RatVec> points_;
    std::vector<RatVec> rays_;
    std::vector<RatVec> lineality_;
};

// Witness that a point lies in a GeneratorForm: the point equals
// sum lambda_i u_i + sum mu_j v_j + sum c_k w_k with lambda >= 0 summing to
// one and mu >= 0.
struct MembershipCertificate {
    RatVec lambda;
    RatVec mu;
    RatVec lineality_coeffs;
};

inline bool contains_h(const HForm& h, const RatVec& x) {
    if (x.size() != h.dim()) throw std::invalid_argument("contains_h: dimension mismatch");
    const RatVec ex = h.eq_matrix().apply(x);
    for (std::size_t i = 0; i < ex.size(); ++i) {
        if (ex[i] != h.eq_rhs()[i]) return false;
    }
    const RatVec ix = h.ineq_matrix().apply(x);
    for (std::size_t i = 0; i < ix.size(); ++i) {
        if (ix[i] > h.ineq_rhs()[i]) return false;
    }
    return true;
}

/// Basis of the lineality space ker[A; C] of an H-form.
inline std::vector<RatVec> lineality_space(const HForm& h) {
    return nullspace_basis(vstack(h.eq_matrix(), h.ineq_matrix()));
}

/// Exact H -> V conversion. The output has empty `points` exactly when the
/// input is infeasible; otherwise it has the same membership as `h`.
inline GeneratorForm h_to_v(const HForm& h) {
    const std::size_t n = h.dim();

    auto x0 = nullspace_basis(vstack(h.eq_matrix(), h.ineq_matrix()));
    auto comp_cols = complement_columns(x0, n);
    const std::size_t d = comp_cols.size();

    // Restrict to the coordinate complement X1; there the stacked system has
    // trivial kernel.
    RatMat eq_r = select_columns(h.eq_matrix(), comp_cols);
    RatMat ineq_r = select_columns(h.ineq_matrix(), comp_cols);

    auto particular = solve_linear(eq_r, h.eq_rhs());
    if (!particular) return GeneratorForm::empty_set(n);
    const RatVec z0 = *particular;
    const auto kernel = nullspace_basis(eq_r);
    const std::size_t q = kernel.size();

    // Substitute z = z0 + kernel*w; homogenize {w : C'' w <= beta} at s = 1.
    std::vector<RatVec> cone_rows;
    for (std::size_t i = 0; i < ineq_r.n_rows(); ++i) {
        RatVec row(q + 1, Rat(0));
        for (std::size_t j = 0; j < q; ++j) row[j] = dot(ineq_r.row(i), kernel[j]);
        row[q] = dot(ineq_r.row(i), z0) - h.ineq_rhs()[i];  // -beta_i
        cone_rows.push_back(std::move(row));
    }
    {
        RatVec s_row(q + 1, Rat(0));
        s_row[q] = Rat(-1);  // s >= 0
        cone_rows.push_back(std::move(s_row));
    }

    ConeGenerators cg = double_description(cone_rows, {}, q + 1);
    if (!cg.lineality.empty()) {
        throw std::logic_error("h_to_v: homogenization cone is not pointed");
    }

    auto lift = [&](const RatVec& z) {
        RatVec x(n, Rat(0));
        for (std::size_t j = 0; j < d; ++j) x[comp_cols[j]] = z[j];
        return x;
    };
    auto expand = [&](const RatVec& w) {
        RatVec z(d, Rat(0));
        for (std::size_t j = 0; j < q; ++j) {
            for (std::size_t c = 0; c < d; ++c) z[c] += w[j] * kernel[j][c];
        }
        return z;
    };

    std::vector<RatVec> points;
    std::vector<RatVec> rays;
    for (const auto& r : cg.rays) {
        const Rat s = r[q];
        RatVec head(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(q));
        if (s > 0) {
            for (auto& e : head) e /= s;
            points.push_back(lift(vec_add(z0, expand(head))));
        } else {
            RatVec ray = lift(expand(head));
            detail::make_primitive(ray);
            rays.push_back(std::move(ray));
        }
    }
    if (points.empty()) return GeneratorForm::empty_set(n);

    detail::sort_and_dedupe(points);
    detail::sort_and_dedupe(rays);
    std::vector<RatVec> lineality;
    for (auto v : x0) {
        detail::make_primitive(v);
        detail::orient_first_nonzero_positive(v);
        lineality.push_back(std::move(v));
    }
    std::sort(lineality.begin(), lineality.end(), detail::lex_less);
    return GeneratorForm(n, std::move(points), std::move(rays), std::move(lineality));
}

/// Exact V -> H conversion via the polar of the homogenization cone.
/// Rejects the empty set (it has no generator representation to convert).
inline HForm v_to_h(const GeneratorForm& g) {
    if (g.is_empty()) throw std::domain_error("v_to_h: empty set has no H-form");
    const std::size_t n = g.dim();

    // Polar of cone{(u_i,1)} + cone{(v_j,0)} + span{(w_k,0)} in Q^{n+1}.
    std::vector<RatVec> ineq_rows;
    for (const auto& u : g.points()) {
        RatVec row = u;
        row.push_back(Rat(1));
        ineq_rows.push_back(std::move(row));
    }
    for (const auto& v : g.rays()) {
        RatVec row = v;
        row.push_back(Rat(0));
        ineq_rows.push_back(std::move(row));
    }
    std::vector<RatVec> eq_rows;
    for (const auto& w : g.lineality()) {
        RatVec row = w;
        row.push_back(Rat(0));
        eq_rows.push_back(std::move(row));
    }

    ConeGenerators polar = double_description(ineq_rows, eq_rows, n + 1);

    // Polar rays (c, gamma) give valid inequalities c*x <= -gamma; its
    // lineality gives the implicit equalities.
    std::vector<RatVec> ineq_with_rhs;
    for (const auto& r : polar.rays) {
        RatVec c(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        if (is_zero_vec(c)) continue;  // 0*x <= const, trivially true here
        RatVec row = std::move(c);
        row.push_back(-r[n]);
        ineq_with_rhs.push_back(std::move(row));
    }
    detail::sort_and_dedupe(ineq_with_rhs);

    std::vector<std::vector<Rat>> eq_with_rhs;
    for (const auto& l : polar.lineality) {
        RatVec a(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
        if (is_zero_vec(a)) continue;
        RatVec row = std::move(a);
        row.push_back(-l[n]);
        eq_with_rhs.push_back(std::move(row));
    }
    eq_with_rhs = detail::canonical_spanning_basis(eq_with_rhs, n + 1);

    RatMat eq_m(0, n), ineq_m(0, n);
    RatVec eq_rhs, ineq_rhs;
    for (auto& row : eq_with_rhs) {
        eq_rhs.push_back(row.back());
        row.pop_back();
        eq_m.append_row(std::move(row));
    }
    for (auto& row : ineq_with_rhs) {
        ineq_rhs.push_back(row.back());
        row.pop_back();
        ineq_m.append_row(std::move(row));
    }
    return HForm(n, std::move(eq_m), std::move(eq_rhs), std::move(ineq_m), std::move(ineq_rhs));
}

/// One exact point of an H-form, or nullopt when it is infeasible.
inline std::optional<RatVec> feasible_point(const HForm& h) {
    GeneratorForm g = h_to_v(h);
    if (g.is_empty()) return std::nullopt;
    return g.points().front();
}

/// Certificate that x lies in the set described by g, or nullopt. The
/// coefficient search is an exact LP feasibility problem.
inline std::optional<MembershipCertificate> contains_v(const GeneratorForm& g, const RatVec& x) {
    if (x.size() != g.dim()) throw std::invalid_argument("contains_v: dimension mismatch");
    if (g.is_empty()) return std::nullopt;
    const std::size_t k = g.points().size();
    const std::size_t l = g.rays().size();
    const std::size_t m = g.lineality().size();

    // A generator point is its own certificate.
    for (std::size_t i = 0; i < k; ++i) {
        if (g.points()[i] == x) {
            MembershipCertificate cert{RatVec(k, Rat(0)), RatVec(l, Rat(0)), RatVec(m, Rat(0))};
            cert.lambda[i] = Rat(1);
            return cert;
        }
    }

    // Coefficient-space system over (lambda, mu, c).
    const std::size_t nvars = k + l + m;
    RatMat eq(0, nvars);
    RatVec eq_rhs;
    for (std::size_t s = 0; s < g.dim(); ++s) {
        RatVec row(nvars, Rat(0));
        for (std::size_t i = 0; i < k; ++i) row[i] = g.points()[i][s];
        for (std::size_t j = 0; j < l; ++j) row[k + j] = g.rays()[j][s];
        for (std::size_t w = 0; w < m; ++w) row[k + l + w] = g.lineality()[w][s];
        eq.append_row(std::move(row));
        eq_rhs.push_back(x[s]);
    }
    {
        RatVec row(nvars, Rat(0));
        for (std::size_t i = 0; i < k; ++i) row[i] = Rat(1);
        eq.append_row(std::move(row));
        eq_rhs.push_back(Rat(1));
    }
    RatMat ineq(0, nvars);
    RatVec ineq_rhs;
    for (std::size_t i = 0; i < k + l; ++i) {
        RatVec row(nvars, Rat(0));
        row[i] = Rat(-1);
        ineq.append_row(std::move(row));
        ineq_rhs.push_back(Rat(0));
    }

    auto sol = feasible_point(
        HForm(nvars, std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs)));
    if (!sol) return std::nullopt;
    MembershipCertificate cert{RatVec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k)),
                               RatVec(sol->begin() + static_cast<std::ptrdiff_t>(k),
                                      sol->begin() + static_cast<std::ptrdiff_t>(k + l)),
                               RatVec(sol->begin() + static_cast<std::ptrdiff_t>(k + l), sol->end())};
    return cert;
}

/// Recession cone 0+D of a nonempty generator form: the directions one can
/// travel along forever, cone{rays} + span{lineality}, rooted at the origin.
inline GeneratorForm recession_cone(const GeneratorForm& g) {
    if (g.is_empty()) throw std::domain_error("recession_cone: empty set");
    return GeneratorForm(g.dim(), {RatVec(g.dim(), Rat(0))}, g.rays(), g.lineality());
}

}  // namespace gpoly
