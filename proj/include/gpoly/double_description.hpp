#pragma once

// Incremental double description for polyhedral cones in exact rational
// arithmetic. Given homogeneous constraint rows, produces the extreme rays
// and a lineality basis of
//
//     K = { w : b*w <= 0 for every inequality row b,
//               e*w  = 0 for every equality row e }.
//
// The running pair (R, L) always satisfies cone(R) + span(L) = current cone,
// L is a basis of the current cone's lineality space, every vector in L is
// tight on all processed rows, and R holds exactly the extreme rays modulo
// span(L). Rows that meet span(L) are handled by a lineality cut; the rest
// use the classic partition/combine step with the combinatorial adjacency
// test on tight sets.

#include <gpoly/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace gpoly {

struct ConeGenerators {
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;
};

namespace detail {

// Set of constraint indices a ray satisfies with equality.
class TightSet {
public:
    explicit TightSet(std::size_t n_bits) : words_((n_bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    static TightSet intersection(const TightSet& a, const TightSet& b) {
        TightSet out = a;
        for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] &= b.words_[w];
        return out;
    }

    static bool is_subset(const TightSet& a, const TightSet& b) {
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            if ((a.words_[w] & ~b.words_[w]) != 0) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

// Rescales by a positive rational so entries become coprime integers.
// Direction (sign) is preserved.
inline void make_primitive(RatVec& v) {
    Int common_den(1);
    for (const auto& x : v) common_den = lcm(common_den, denominator(x));
    Int common_num(0);
    for (const auto& x : v) common_num = gcd(common_num, numerator(x) * (common_den / denominator(x)));
    if (common_num == 0) return;  // zero vector
    const Rat factor(common_den, common_num);
    for (auto& x : v) x *= factor;
}

inline void orient_first_nonzero_positive(RatVec& v) {
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : v) y = -y;
            }
            return;
        }
    }
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_and_dedupe(std::vector<RatVec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Deterministic basis of span(vs): primitive rref rows, first nonzero
// entry positive.
inline std::vector<RatVec> canonical_spanning_basis(const std::vector<RatVec>& vs,
                                                    std::size_t dim) {
    if (vs.empty()) return {};
    auto [r, pivots] = rref(Mat<Rat>::from_rows(vs, dim));
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RatVec row = r.row(i);
        make_primitive(row);
        orient_first_nonzero_positive(row);
        basis.push_back(std::move(row));
    }
    return basis;
}

struct DDRay {
    RatVec v;
    TightSet tight;
};

}  // namespace detail

inline ConeGenerators double_description(const std::vector<RatVec>& ineq_rows,
                                         const std::vector<RatVec>& eq_rows,
                                         std::size_t dim) {
    using detail::DDRay;
    using detail::TightSet;

    // Equality rows first: each one either cuts a lineality dimension or
    // filters rays, and clearing lineality early keeps ray counts down.
    std::vector<std::pair<RatVec, bool>> rows;  // (row, is_equality)
    rows.reserve(eq_rows.size() + ineq_rows.size());
    for (auto r : eq_rows) {
        detail::make_primitive(r);
        rows.emplace_back(std::move(r), true);
    }
    for (auto r : ineq_rows) {
        detail::make_primitive(r);
        rows.emplace_back(std::move(r), false);
    }
    const std::size_t n_rows = rows.size();

    std::vector<RatVec> lineality;
    for (std::size_t j = 0; j < dim; ++j) lineality.push_back(unit_vec<Rat>(dim, j));
    std::vector<DDRay> rays;

    for (std::size_t t = 0; t < n_rows; ++t) {
        const RatVec& b = rows[t].first;
        const bool is_eq = rows[t].second;

        // Lineality cut: eliminate one basis vector not orthogonal to b.
        std::size_t cut = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            if (dot(b, lineality[i]) != 0) {
                cut = i;
                break;
            }
        }
        if (cut < lineality.size()) {
            RatVec pivot = lineality[cut];
            Rat pivot_val = dot(b, pivot);
            if (pivot_val > 0) {
                pivot = vec_neg(pivot);
                pivot_val = -pivot_val;
            }
            auto project = [&](const RatVec& w) {
                RatVec out = vec_sub(w, vec_scale(dot(b, w) / pivot_val, pivot));
                detail::make_primitive(out);
                return out;
            };
            std::vector<RatVec> new_lineality;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i != cut) new_lineality.push_back(project(lineality[i]));
            }
            std::vector<DDRay> kept;
            for (auto& r : rays) {
                RatVec w = project(r.v);
                if (is_zero_vec(w)) continue;  // ray was a multiple of the pivot
                r.v = std::move(w);
                r.tight.set(t);
                kept.push_back(std::move(r));
            }
            rays = std::move(kept);
            lineality = std::move(new_lineality);
            if (!is_eq) {
                // The removed direction survives as a ray on the strict side.
                DDRay extra{std::move(pivot), TightSet(n_rows)};
                for (std::size_t s = 0; s < t; ++s) extra.tight.set(s);
                rays.push_back(std::move(extra));
            }
            continue;
        }

        // Classic step: partition by sign of b against each ray.
        std::vector<Rat> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(b, rays[i].v);
            if (value[i] > 0) {
                pos.push_back(i);
            } else if (value[i] < 0) {
                neg.push_back(i);
            }
        }
        if (pos.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (value[i] == 0) rays[i].tight.set(t);
            }
            if (!is_eq || neg.empty()) continue;
        }

        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] == 0) {
                rays[i].tight.set(t);
                next.push_back(rays[i]);
            } else if (value[i] < 0 && !is_eq) {
                next.push_back(rays[i]);
            }
        }
        for (auto ip : pos) {
            for (auto in : neg) {
                TightSet common = TightSet::intersection(rays[ip].tight, rays[in].tight);
                bool adjacent = true;
                for (std::size_t other = 0; other < rays.size(); ++other) {
                    if (other == ip || other == in) continue;
                    if (TightSet::is_subset(common, rays[other].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                RatVec combo =
                    vec_sub(vec_scale(value[ip], rays[in].v), vec_scale(value[in], rays[ip].v));
                detail::make_primitive(combo);
                common.set(t);
                next.push_back(DDRay{std::move(combo), std::move(common)});
            }
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    detail::sort_and_dedupe(out.rays);
    out.lineality = detail::canonical_spanning_basis(lineality, dim);
    std::sort(out.lineality.begin(), out.lineality.end(), detail::lex_less);
    return out;
}

}  // namespace gpoly
