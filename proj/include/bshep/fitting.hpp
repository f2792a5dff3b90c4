#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bshep/jets.hpp"
#include "bshep/shepard.hpp"

namespace bshep {

/// Non-constant coefficients of a local polynomial
///   f(V_i) + sum_{1 <= r+s <= degree} c_rs (x - x_i)^r (y - y_i)^s,
/// ordered by total degree, then by increasing s:
/// (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3).
struct WlsCoefficients {
    int degree = 2;
    std::size_t center = 0;
    std::vector<double> coeffs;

    static constexpr std::size_t count_for(int degree)
    {
        return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2 - 1);
    }
    double operator()(int r, int s) const { return coeffs[Jet::index(r, s) - 1]; }
};

/// Per-node least-squares radius: same rule as compute_radii, but n_q must
/// be smaller than the node count.
std::vector<double> compute_rq_radii(const NodeSet& nodes, int n_q);

/// Weighted normal equations A c = b for the fit at node i, before scaling.
struct NormalSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    std::size_t neighbors = 0;
};

NormalSystem assemble_normal_system(std::size_t i, const NodeSet& nodes, std::span<const double> values,
                                    int degree, std::span<const double> rq);

/// Least-squares fit at node i over the neighbors strictly inside its R_q
/// disk, with weights ((R_q - d)_+ / (R_q d))^2 and the constant term pinned
/// to f(V_i). Solved through column-equilibrated normal equations, or a
/// column-pivoted QR when their condition estimate exceeds 1e12.
/// Throws FitError on too few neighbors or rank deficiency.
WlsCoefficients wls_fit(std::size_t i, const NodeSet& nodes, std::span<const double> values, int degree,
                        std::span<const double> rq);

/// Jet at the fit center: d00 = f_value, d10 = c10, d01 = c01, d20 = 2 c20,
/// d11 = c11, d02 = 2 c02 (and, for order 3 from a cubic fit, d30 = 6 c30,
/// d21 = 2 c21, d12 = 2 c12, d03 = 6 c03).
Jet coefficients_to_jet(const WlsCoefficients& c, double f_value, Point center, int order = 2);

} // namespace bshep
