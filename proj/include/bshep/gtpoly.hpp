#pragma once

#include <array>
#include <vector>

#include "bshep/geometry.hpp"
#include "bshep/jets.hpp"

namespace bshep {

/// Data for the generalized Taylor polynomial of degree m on a triangle,
/// referred to vertex v1: jets of order >= m - 1 centered at the three vertices.
struct GtData {
    Triangle triangle;
    std::array<Jet, 3> jets;
    int degree = 1;
};

/// Three-point Bernoulli expansion on a triangle with respect to its first
/// vertex. All vertex-data differences are folded into coefficients at
/// construction, so evaluation only touches the barycentric coordinates.
///
/// The products (l2+l3)^{i-1} S_i(l2/(l2+l3)) S_j(l2+l3) are evaluated as
/// H_i(l2, s) * (S_j(s)/s) with s = l2+l3 and H_i(l2, s) = s^i S_i(l2/s),
/// both polynomials, so the expression has no singularity on s = 0.
class GtPolynomial {
public:
    GtPolynomial(const Triangle& triangle, const std::array<Jet, 3>& jets, int degree);
    explicit GtPolynomial(const GtData& d) : GtPolynomial(d.triangle, d.jets, d.degree) {}

    double operator()(Point p) const;

    int degree() const { return degree_; }
    const Triangle& triangle() const { return triangle_; }

private:
    double coeff(int i, int j) const { return side_terms_[static_cast<std::size_t>((i - 1) * degree_ + (j - 1))]; }

    Triangle triangle_;
    BarycentricMap bary_;
    int degree_;
    double f1_;
    std::vector<double> edge13_terms_; // j = 1..m, already divided by j!
    std::vector<double> side_terms_;   // (i, j), j <= m - i + 1, divided by i! j!
};

double gt_eval(const GtData& d, Point p);

/// gt_eval minus the order-m Taylor polynomial at v1 (full_jet_v1 must have
/// order >= m and be centered at v1).
double gt_minus_taylor(const GtData& d, const Jet& full_jet_v1, Point p);

/// Symmetric closed form of the degree-2 polynomial: the Lagrange plane plus
/// three pairwise l_a l_b corrections along the sides.
double quadratic_element_eval(const GtData& d, Point p);

} // namespace bshep
