#pragma once

#include <span>
#include <vector>

namespace bshep {

/// Largest Bernoulli index served by the coefficient tables.
inline constexpr int kMaxBernoulliIndex = 30;

/// Dense univariate polynomial, coeffs[k] multiplies t^k.
struct PolyCoeffs {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double t) const;
    PolyCoeffs derivative() const;
};

/// B_0 .. B_{n_max}, with B_k = B_k(0).
std::vector<double> bernoulli_numbers(int n_max);

/// Coefficients of the Bernoulli polynomial B_n(t).
PolyCoeffs bernoulli_poly(int n);

/// S_n(t) = B_n(t) - B_n(0). S_0 is identically zero.
double s_poly_eval(int n, double t);

/// Coefficients of S_n(t); coeffs[0] is always 0.
const std::vector<double>& s_poly_coeffs(int n);

/// Two-point generalized Taylor polynomial of degree m on [a, b],
/// built from f^{(k)}(a) and f^{(k)}(b), k = 0..m-1, and evaluated at x
/// (any real x; the polynomial extends beyond [a, b]).
double univariate_gt_eval(std::span<const double> end_derivs_a,
                          std::span<const double> end_derivs_b,
                          double a, double b, int m, double x);

} // namespace bshep
