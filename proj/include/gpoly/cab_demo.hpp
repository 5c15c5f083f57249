#pragma once

// A generator representation computed inside the function space C[a,b], cut
// by two integral constraint functionals with polynomial weights. Working
// with rational-coefficient polynomials keeps every integral an exact
// rational, so all pairing identities can be checked with equality. The
// infinite-dimensional lineality component X0 is never materialized:
// membership handles it through the residual's two pairing values.

#include <gpoly/linalg.hpp>
#include <gpoly/rational.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpoly {

// Polynomial with rational coefficients, ascending degree, trailing zeros
// trimmed. The zero polynomial has no coefficients.
struct RatPoly {
    RatVec coefficients;

    RatPoly() = default;
    explicit RatPoly(RatVec coeffs) : coefficients(std::move(coeffs)) { trim(); }

    void trim() {
        while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    }

    bool is_zero() const { return coefficients.empty(); }

    bool operator==(const RatPoly& other) const = default;
};

inline RatPoly poly_add(const RatPoly& p, const RatPoly& q) {
    RatVec out(std::max(p.coefficients.size(), q.coefficients.size()), Rat(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) out[i] += p.coefficients[i];
    for (std::size_t i = 0; i < q.coefficients.size(); ++i) out[i] += q.coefficients[i];
    return RatPoly(std::move(out));
}

inline RatPoly poly_scale(const Rat& c, const RatPoly& p) {
    RatVec out = p.coefficients;
    for (auto& x : out) x *= c;
    return RatPoly(std::move(out));
}

inline RatPoly poly_sub(const RatPoly& p, const RatPoly& q) {
    return poly_add(p, poly_scale(Rat(-1), q));
}

inline RatPoly poly_mul(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return RatPoly{};
    RatVec out(p.coefficients.size() + q.coefficients.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < q.coefficients.size(); ++j) {
            out[i + j] += p.coefficients[i] * q.coefficients[j];
        }
    }
    return RatPoly(std::move(out));
}

/// Exact integral of p(t)*q(t) over [a, b] via monomial antiderivatives.
inline Rat integrate_product(const RatPoly& p, const RatPoly& q, const Rat& a, const Rat& b) {
    if (a >= b) throw std::invalid_argument("integrate_product: requires a < b");
    const RatPoly prod = poly_mul(p, q);
    Rat total(0);
    Rat apow(1), bpow(1);
    for (std::size_t d = 0; d < prod.coefficients.size(); ++d) {
        apow *= a;
        bpow *= b;  // now a^{d+1}, b^{d+1}
        total += prod.coefficients[d] * (bpow - apow) / Rat(d + 1);
    }
    return total;
}

struct DemoReport {
    RatMat gram;  // gamma_{i,j}, 2x2
    Rat delta;    // gamma_11*gamma_22 - gamma_12^2
    std::pair<Rat, Rat> eta;
    RatPoly u, v1, v2;
    bool identities_ok = false;

    // Inputs carried along so membership queries are self-contained.
    RatPoly omega1, omega2;
    Rat a, b;
    std::pair<Rat, Rat> alpha;
};

/// Builds the representation D = {u + mu1 v1 + mu2 v2 : mu >= 0} + X0 for
/// D = {x : <x*_1, x> <= alpha1, <x*_2, x> <= alpha2} with
/// <x*_i, x> = integral of omega_i * x, and verifies the six pairing
/// identities exactly. Requires independent weights (delta > 0).
inline DemoReport run_demo(const RatPoly& omega1, const RatPoly& omega2, const Rat& a,
                           const Rat& b, const Rat& alpha1, const Rat& alpha2) {
    if (a >= b) throw std::invalid_argument("run_demo: requires a < b");
    if (omega1.is_zero() || omega2.is_zero()) {
        throw std::invalid_argument("run_demo: weight functions must be nonzero");
    }

    DemoReport report;
    report.omega1 = omega1;
    report.omega2 = omega2;
    report.a = a;
    report.b = b;
    report.alpha = {alpha1, alpha2};

    RatMat gram(2, 2);
    gram(0, 0) = integrate_product(omega1, omega1, a, b);
    gram(0, 1) = integrate_product(omega1, omega2, a, b);
    gram(1, 0) = gram(0, 1);
    gram(1, 1) = integrate_product(omega2, omega2, a, b);
    report.gram = gram;
    report.delta = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(0, 1);
    if (report.delta == 0) {
        throw std::domain_error("run_demo: weights are linearly dependent (delta = 0)");
    }

    auto eta = solve_linear(gram, RatVec{alpha1, alpha2});
    report.eta = {(*eta)[0], (*eta)[1]};

    report.u = poly_add(poly_scale(report.eta.first, omega1), poly_scale(report.eta.second, omega2));
    report.v1 = poly_sub(poly_scale(gram(0, 1), omega1), poly_scale(gram(0, 0), omega2));
    report.v2 = poly_add(poly_scale(-gram(1, 1), omega1), poly_scale(gram(0, 1), omega2));

    auto pair1 = [&](const RatPoly& x) { return integrate_product(omega1, x, a, b); };
    auto pair2 = [&](const RatPoly& x) { return integrate_product(omega2, x, a, b); };
    report.identities_ok = pair1(report.u) == alpha1 && pair2(report.u) == alpha2 &&
                           pair1(report.v1) == 0 && pair1(report.v2) == -report.delta &&
                           pair2(report.v1) == -report.delta && pair2(report.v2) == 0;
    return report;
}

/// Membership of a polynomial x in D: returns (mu1, mu2) when the two
/// constraint gaps are nonnegative. The residual x - (u + mu1 v1 + mu2 v2)
/// then pairs to zero with both functionals, i.e. it is the X0 component.
inline std::optional<std::pair<Rat, Rat>> demo_membership(const DemoReport& report,
                                                          const RatPoly& x, const Rat& a,
                                                          const Rat& b, const Rat& alpha1,
                                                          const Rat& alpha2) {
    if (!report.identities_ok) {
        throw std::invalid_argument("demo_membership: report identities not verified");
    }
    const Rat mu1 = (alpha2 - integrate_product(report.omega2, x, a, b)) / report.delta;
    const Rat mu2 = (alpha1 - integrate_product(report.omega1, x, a, b)) / report.delta;
    if (mu1 < 0 || mu2 < 0) return std::nullopt;
    return std::make_pair(mu1, mu2);
}

}  // namespace gpoly
