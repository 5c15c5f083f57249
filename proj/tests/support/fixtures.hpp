#pragma once

// Small shared builders for the worked examples used across the test suite.

#include <gpoly/polyhedron.hpp>

#include <initializer_list>

namespace testsupport {

using gpoly::GeneratorForm;
using gpoly::HForm;
using gpoly::Rat;
using gpoly::RatMat;
using gpoly::RatVec;

inline RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

inline RatMat rm(std::initializer_list<std::initializer_list<int>> rows, std::size_t n_cols) {
    std::vector<RatVec> rs;
    for (const auto& r : rows) rs.push_back(rv(r));
    return RatMat::from_rows(std::move(rs), n_cols);
}

// {0 <= x1 <= 1, 0 <= x2 <= 1}
inline HForm unit_square() {
    return HForm(2, rm({{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, 2), rv({0, 1, 0, 1}));
}

// Square vertices listed in "file order" (0,0),(1,0),(0,1),(1,1).
inline GeneratorForm square_file_order() {
    return GeneratorForm(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})}, {}, {});
}

// Nonnegative orthant of the plane as generators: point 0, rays e1, e2.
inline GeneratorForm orthant2() {
    return GeneratorForm(2, {rv({0, 0})}, {rv({1, 0}), rv({0, 1})}, {});
}

// The same orthant as {-x1 <= 0, -x2 <= 0}.
inline HForm orthant2_h() {
    return HForm(2, rm({{-1, 0}, {0, -1}}, 2), rv({0, 0}));
}

}  // namespace testsupport
