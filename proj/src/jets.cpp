#include "bshep/jets.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bshep/errors.hpp"

namespace bshep {

namespace {

void check_order(int order)
{
    if (order < 0 || order > kMaxJetOrder) {
        throw ArgumentError("jet order " + std::to_string(order) + " outside [0, " +
                            std::to_string(kMaxJetOrder) + "]");
    }
}

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double factorial(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

Jet::Jet(Point center, int order) : center_(center), order_(order)
{
    check_order(order);
    partials_.assign(size_for(order), 0.0);
}

Jet::Jet(Point center, int order, std::vector<double> partials)
    : center_(center), order_(order), partials_(std::move(partials))
{
    check_order(order);
    if (partials_.size() != size_for(order)) {
        throw ArgumentError("jet of order " + std::to_string(order) + " needs " +
                            std::to_string(size_for(order)) + " partials, got " +
                            std::to_string(partials_.size()));
    }
    for (double d : partials_) {
        if (!std::isfinite(d)) throw ArgumentError("jet partials must be finite");
    }
}

double& Jet::at(int a, int b)
{
    if (a < 0 || b < 0 || a + b > order_) throw ArgumentError("jet index outside the table");
    return partials_[index(a, b)];
}

Jet Jet::truncated(int order) const
{
    if (order > order_) throw ArgumentError("cannot raise jet order by truncation");
    check_order(order);
    return Jet(center_, order, {partials_.begin(), partials_.begin() + size_for(order)});
}

double directional_derivative(const Jet& j, Point u, Point v, int p, int q)
{
    if (p < 0 || q < 0 || p + q > j.order()) {
        throw ArgumentError("directional_derivative: p + q = " + std::to_string(p + q) +
                            " exceeds jet order " + std::to_string(j.order()));
    }
    // (u.grad)^p (v.grad)^q = sum_{i,k} C(p,i) C(q,k) ux^{p-i} uy^i vx^{q-k} vy^k d_x^{p+q-i-k} d_y^{i+k}
    double total = 0.0;
    for (int i = 0; i <= p; ++i) {
        const double cu = binomial(p, i) * std::pow(u.x, p - i) * std::pow(u.y, i);
        for (int k = 0; k <= q; ++k) {
            const double cv = binomial(q, k) * std::pow(v.x, q - k) * std::pow(v.y, k);
            total += cu * cv * j(p + q - i - k, i + k);
        }
    }
    return total;
}

double taylor_eval(const Jet& j, Point p)
{
    const double dx = p.x - j.center().x;
    const double dy = p.y - j.center().y;
    double total = 0.0;
    for (int k = 0; k <= j.order(); ++k) {
        for (int b = 0; b <= k; ++b) {
            const int a = k - b;
            total += j(a, b) / (factorial(a) * factorial(b)) * std::pow(dx, a) * std::pow(dy, b);
        }
    }
    return total;
}

Jet jet_from_callable(const PartialsFn& f, Point center, int order)
{
    Jet jet(center, order);
    for (int k = 0; k <= order; ++k) {
        for (int b = 0; b <= k; ++b) jet.at(k - b, b) = f(center, k - b, b);
    }
    return jet;
}

Jet jet_from_finite_differences(const std::function<double(Point)>& f, Point center, int order)
{
    Jet jet(center, order);
    const double scale = 1.0 + norm(center);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int k = 0; k <= order; ++k) {
        const double h = k == 0 ? 0.0 : scale * std::pow(eps, 1.0 / (k + 2));
        for (int b = 0; b <= k; ++b) {
            const int a = k - b;
            // Tensor product of central difference stencils of orders a and b.
            double acc = 0.0;
            for (int s = 0; s <= a; ++s) {
                const double wx = (s % 2 ? -1.0 : 1.0) * binomial(a, s);
                const double ox = (0.5 * a - s) * h;
                for (int t = 0; t <= b; ++t) {
                    const double wy = (t % 2 ? -1.0 : 1.0) * binomial(b, t);
                    const double oy = (0.5 * b - t) * h;
                    acc += wx * wy * f({center.x + ox, center.y + oy});
                }
            }
            jet.at(a, b) = k == 0 ? acc : acc / std::pow(h, k);
        }
    }
    return jet;
}

} // namespace bshep
