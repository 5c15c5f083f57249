#pragma once

// Seeded random instances for property and acceptance tests. Entries are
// small rationals (numerators and denominators bounded by 9) so double
// description stays fast and everything remains exact.

#include <gpoly/cones.hpp>
#include <gpoly/polyhedron.hpp>
#include <gpoly/vlp.hpp>

#include <random>
#include <vector>

namespace testsupport {

using gpoly::GeneratorForm;
using gpoly::HForm;
using gpoly::Rat;
using gpoly::RatMat;
using gpoly::RatVec;

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }

    Rat rat(int max_num = 9, int max_den = 9) {
        return Rat(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rat nonneg_rat(int max_num = 9, int max_den = 9) {
        return Rat(uniform(0, max_num), uniform(1, max_den));
    }

    RatVec vec(std::size_t dim, int max_num = 9, int max_den = 9) {
        RatVec v(dim);
        for (auto& x : v) x = rat(max_num, max_den);
        return v;
    }

    RatVec nonzero_vec(std::size_t dim, int max_num = 9, int max_den = 9) {
        for (;;) {
            RatVec v = vec(dim, max_num, max_den);
            if (!gpoly::is_zero_vec(v)) return v;
        }
    }
};

inline HForm random_hform(Rng& rng, std::size_t max_dim = 4, std::size_t max_ineq = 6,
                          std::size_t max_eq = 2) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_dim)));
    const std::size_t n_eq = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_eq)));
    const std::size_t n_ineq = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_ineq)));

    RatMat a(0, dim);
    RatVec y;
    for (std::size_t i = 0; i < n_eq; ++i) {
        a.append_row(rng.vec(dim));
        y.push_back(rng.rat());
    }
    RatMat c(0, dim);
    RatVec alpha;
    for (std::size_t i = 0; i < n_ineq; ++i) {
        c.append_row(rng.vec(dim));
        alpha.push_back(rng.rat());
    }
    return HForm(dim, std::move(a), std::move(y), std::move(c), std::move(alpha));
}

inline GeneratorForm random_genform(Rng& rng, std::size_t dim, std::size_t max_points = 4,
                                    std::size_t max_rays = 2, std::size_t max_lineality = 1) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_points)));
    const std::size_t l = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(max_rays)));
    std::vector<RatVec> points, rays, lineality;
    for (std::size_t i = 0; i < k; ++i) points.push_back(rng.vec(dim));
    for (std::size_t j = 0; j < l; ++j) rays.push_back(rng.nonzero_vec(dim));
    if (max_lineality > 0 && rng.uniform(0, 2) == 0) {
        lineality.push_back(rng.nonzero_vec(dim));
    }
    return GeneratorForm(dim, std::move(points), std::move(rays), std::move(lineality));
}

// Exact random member: random convex/conic/linear combination of generators.
inline RatVec random_point_of(Rng& rng, const GeneratorForm& g) {
    RatVec total(g.dim(), Rat(0));
    RatVec lambdas;
    Rat sum(0);
    for (std::size_t i = 0; i < g.points().size(); ++i) {
        lambdas.push_back(rng.nonneg_rat(4, 4));
        sum += lambdas.back();
    }
    if (sum == 0) {
        lambdas[0] = Rat(1);
        sum = Rat(1);
    }
    for (std::size_t i = 0; i < g.points().size(); ++i) {
        const Rat w = lambdas[i] / sum;
        for (std::size_t s = 0; s < g.dim(); ++s) total[s] += w * g.points()[i][s];
    }
    for (const auto& r : g.rays()) {
        const Rat mu = rng.nonneg_rat(4, 4);
        for (std::size_t s = 0; s < g.dim(); ++s) total[s] += mu * r[s];
    }
    for (const auto& w : g.lineality()) {
        const Rat c = rng.rat(4, 4);
        for (std::size_t s = 0; s < g.dim(); ++s) total[s] += c * w[s];
    }
    return total;
}

// Homogeneous cone H-form with a full-dimensional interior (resampled until
// the strict system is feasible), or the nonnegative orthant.
inline HForm random_interior_cone(Rng& rng, std::size_t dim) {
    if (rng.uniform(0, 1) == 0) {
        RatMat c(0, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            RatVec row(dim, Rat(0));
            row[i] = Rat(-1);
            c.append_row(std::move(row));
        }
        return HForm(dim, std::move(c), RatVec(dim, Rat(0)));
    }
    for (;;) {
        const std::size_t n_rows = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(dim) + 1));
        RatMat c(0, dim);
        for (std::size_t i = 0; i < n_rows; ++i) c.append_row(rng.nonzero_vec(dim, 3, 2));
        std::vector<std::size_t> all(n_rows);
        for (std::size_t i = 0; i < n_rows; ++i) all[i] = i;
        HForm k(dim, c, RatVec(n_rows, Rat(0)));
        if (gpoly::strict_feasibility(k, all)) return k;
    }
}

inline gpoly::VLPProblem random_vlp(Rng& rng, std::size_t max_dim = 3, std::size_t max_points = 4,
                                    std::size_t max_rays = 2) {
    const std::size_t xdim = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_dim)));
    const std::size_t ydim = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_dim)));
    GeneratorForm d = random_genform(rng, xdim, max_points, max_rays, 1);
    RatMat m(0, xdim);
    for (std::size_t i = 0; i < ydim; ++i) m.append_row(rng.vec(xdim, 3, 2));
    return gpoly::VLPProblem(std::move(m), std::move(d), random_interior_cone(rng, ydim));
}

}  // namespace testsupport
