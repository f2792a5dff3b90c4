#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bshep/geometry.hpp"

namespace bshep {

inline constexpr int kMaxJetOrder = 8;

/// Partial derivatives of a function at a point, d(a, b) = d^{a+b} f / dx^a dy^b,
/// for all 0 <= a + b <= order, stored by total degree.
class Jet {
public:
    Jet() = default;
    Jet(Point center, int order);
    Jet(Point center, int order, std::vector<double> partials);

    static constexpr std::size_t size_for(int order)
    {
        return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
    }
    static constexpr std::size_t index(int a, int b)
    {
        const int k = a + b;
        return static_cast<std::size_t>(k * (k + 1) / 2 + b);
    }

    Point center() const { return center_; }
    int order() const { return order_; }
    double value() const { return partials_[0]; }

    double operator()(int a, int b) const { return partials_[index(a, b)]; }
    double& at(int a, int b);
    std::span<const double> partials() const { return partials_; }

    /// Same data truncated to a lower order.
    Jet truncated(int order) const;

private:
    Point center_;
    int order_ = 0;
    std::vector<double> partials_{0.0};
};

/// D_u^p D_v^q f at the jet's center, with D_w = w . grad.
double directional_derivative(const Jet& j, Point u, Point v, int p, int q);

/// Taylor polynomial of the jet's full order, evaluated at p.
double taylor_eval(const Jet& j, Point p);

/// Callback returning d^{a+b} f / dx^a dy^b at a point.
using PartialsFn = std::function<double(Point, int, int)>;

Jet jet_from_callable(const PartialsFn& f, Point center, int order);

/// Central-difference estimate of every partial up to `order`; the step for
/// derivatives of total order k is (1 + |center|) * eps^{1/(k+2)}.
Jet jet_from_finite_differences(const std::function<double(Point)>& f, Point center, int order);

} // namespace bshep
