#include "bshep/gtpoly.hpp"

#include <string>

#include "bshep/bernoulli.hpp"
#include "bshep/errors.hpp"

namespace bshep {

namespace {

constexpr int kMaxDegree = 8;

void validate(const Triangle& t, const std::array<Jet, 3>& jets, int degree)
{
    if (degree < 1 || degree > kMaxDegree) {
        throw ArgumentError("generalized Taylor degree " + std::to_string(degree) + " outside [1, " +
                            std::to_string(kMaxDegree) + "]");
    }
    if (is_degenerate(t)) throw GeometryError("generalized Taylor polynomial on a degenerate triangle");
    const std::array<Point, 3> v{t.v1, t.v2, t.v3};
    for (int k = 0; k < 3; ++k) {
        if (jets[k].order() < degree - 1) {
            throw ArgumentError("degree " + std::to_string(degree) + " needs vertex jets of order " +
                                std::to_string(degree - 1) + ", got " + std::to_string(jets[k].order()));
        }
        if (!(jets[k].center() == v[k])) throw ArgumentError("vertex jet not centered at its vertex");
    }
}

double factorial(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

GtPolynomial::GtPolynomial(const Triangle& triangle, const std::array<Jet, 3>& jets, int degree)
    : triangle_(triangle), bary_((validate(triangle, jets, degree), triangle)), degree_(degree)
{
    const Point v1 = triangle.v1, v2 = triangle.v2, v3 = triangle.v3;
    const Jet& j1 = jets[0];
    const Jet& j2 = jets[1];
    const Jet& j3 = jets[2];
    const int m = degree;
    f1_ = j1.value();

    // D_1^{(0, j-1)} = D_31^{j-1}
    const Point d21 = v2 - v1, d31 = v3 - v1;
    edge13_terms_.resize(m);
    for (int j = 1; j <= m; ++j) {
        const double diff = directional_derivative(j3, d21, d31, 0, j - 1) -
                            directional_derivative(j1, d21, d31, 0, j - 1);
        edge13_terms_[j - 1] = diff / factorial(j);
    }

    // D_2^beta = D_12^{b1} D_32^{b2},  D_3^beta = D_13^{b1} D_23^{b2}
    const Point d12 = v1 - v2, d32 = v3 - v2;
    const Point d13 = v1 - v3, d23 = v2 - v3;
    side_terms_.assign(static_cast<std::size_t>(m * m), 0.0);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m - i + 1; ++j) {
            const double via_v2 = directional_derivative(j2, d12, d32, j - 1, i - 1) -
                                  directional_derivative(j1, d12, d32, j - 1, i - 1);
            const double via_v3 = directional_derivative(j3, d13, d23, j - 1, i - 1) -
                                  directional_derivative(j1, d13, d23, j - 1, i - 1);
            const double sign_ij = (i + j) % 2 ? -1.0 : 1.0;
            const double sign_j = j % 2 ? -1.0 : 1.0;
            side_terms_[static_cast<std::size_t>((i - 1) * m + (j - 1))] =
                (sign_ij * via_v2 + sign_j * via_v3) / (factorial(i) * factorial(j));
        }
    }
}

double GtPolynomial::operator()(Point p) const
{
    const auto [l1, l2, l3] = bary_(p);
    (void)l1;
    const double s = l2 + l3;
    const int m = degree_;

    // s_hat[j] = S_j(s) / s,  h[i] = s^i S_i(l2 / s)
    std::array<double, kMaxDegree + 1> s_hat{}, h{};
    for (int n = 1; n <= m; ++n) {
        const auto& c = s_poly_coeffs(n);
        double acc = 0.0;
        for (int k = n; k >= 1; --k) acc = acc * s + c[k];
        s_hat[n] = acc;

        double hv = 0.0, l2pow = 1.0;
        std::array<double, kMaxDegree + 1> spow{};
        spow[0] = 1.0;
        for (int k = 1; k <= n; ++k) spow[k] = spow[k - 1] * s;
        for (int k = 1; k <= n; ++k) {
            l2pow *= l2;
            hv += c[k] * l2pow * spow[n - k];
        }
        h[n] = hv;
    }

    double result = f1_;
    for (int j = 1; j <= m; ++j) result += edge13_terms_[j - 1] * s * s_hat[j];
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m - i + 1; ++j) result += coeff(i, j) * h[i] * s_hat[j];
    }
    return result;
}

double gt_eval(const GtData& d, Point p)
{
    return GtPolynomial(d)(p);
}

double gt_minus_taylor(const GtData& d, const Jet& full_jet_v1, Point p)
{
    if (full_jet_v1.order() < d.degree) {
        throw ArgumentError("gt_minus_taylor: Taylor jet must have order >= degree");
    }
    if (!(full_jet_v1.center() == d.triangle.v1)) {
        throw ArgumentError("gt_minus_taylor: Taylor jet must be centered at v1");
    }
    return gt_eval(d, p) - taylor_eval(full_jet_v1.truncated(d.degree), p);
}

double quadratic_element_eval(const GtData& d, Point p)
{
    if (d.degree != 2) throw ArgumentError("quadratic_element_eval: requires degree 2 data");
    validate(d.triangle, d.jets, 2);
    const auto& [v1, v2, v3] = d.triangle;
    const auto& [j1, j2, j3] = d.jets;
    const auto [l1, l2, l3] = barycentric(p, d.triangle);
    auto slope = [](const Jet& j, Point dir) { return directional_derivative(j, dir, dir, 1, 0); };

    double result = l1 * j1.value() + l2 * j2.value() + l3 * j3.value();
    result += 0.5 * l1 * l2 * (slope(j2, v1 - v2) - slope(j1, v1 - v2));
    result += 0.5 * l1 * l3 * (slope(j1, v3 - v1) - slope(j3, v3 - v1));
    result += 0.5 * l2 * l3 * (slope(j3, v2 - v3) - slope(j2, v2 - v3));
    return result;
}

} // namespace bshep
