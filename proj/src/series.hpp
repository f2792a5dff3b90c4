#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "bshep/jets.hpp"

namespace bshep::detail {

/// Bivariate Taylor series truncated at total degree `order`:
/// c(a, b) multiplies dx^a dy^b around a fixed expansion point.
class Series {
public:
    static constexpr std::size_t kCapacity = Jet::size_for(kMaxJetOrder);

    explicit Series(int order, double value = 0.0) : order_(order) { c_[0] = value; }

    static Series variable_x(int order, double x0)
    {
        Series s(order, x0);
        if (order >= 1) s.c_[Jet::index(1, 0)] = 1.0;
        return s;
    }
    static Series variable_y(int order, double y0)
    {
        Series s(order, y0);
        if (order >= 1) s.c_[Jet::index(0, 1)] = 1.0;
        return s;
    }

    int order() const { return order_; }
    double value() const { return c_[0]; }
    double coeff(int a, int b) const { return c_[Jet::index(a, b)]; }
    std::size_t size() const { return Jet::size_for(order_); }

    Series& operator+=(const Series& o)
    {
        for (std::size_t k = 0; k < size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        for (std::size_t k = 0; k < size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Series& operator*=(double s)
    {
        for (std::size_t k = 0; k < size(); ++k) c_[k] *= s;
        return *this;
    }
    Series& operator+=(double s)
    {
        c_[0] += s;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator+(Series a, double s) { return a += s; }
    friend Series operator+(double s, Series a) { return a += s; }
    friend Series operator-(Series a, double s) { return a += -s; }
    friend Series operator-(double s, Series a) { return (a *= -1.0) += s; }
    friend Series operator*(Series a, double s) { return a *= s; }
    friend Series operator*(double s, Series a) { return a *= s; }
    friend Series operator-(Series a) { return a *= -1.0; }

    friend Series operator*(const Series& a, const Series& b)
    {
        Series r(a.order_);
        const int q = a.order_;
        for (int ka = 0; ka <= q; ++ka) {
            for (int ba = 0; ba <= ka; ++ba) {
                const double ca = a.c_[Jet::index(ka - ba, ba)];
                if (ca == 0.0) continue;
                for (int kb = 0; kb + ka <= q; ++kb) {
                    for (int bb = 0; bb <= kb; ++bb) {
                        r.c_[Jet::index(ka - ba + kb - bb, ba + bb)] += ca * b.c_[Jet::index(kb - bb, bb)];
                    }
                }
            }
        }
        return r;
    }

    /// g(u) from the derivatives g^{(k)}(u0), k = 0..order.
    template <class Derivs>
    static Series compose(const Series& u, const Derivs& g)
    {
        Series delta = u;
        delta.c_[0] = 0.0;
        // Horner in delta: sum_k g_k / k! delta^k
        double fact = 1.0;
        for (int k = 2; k <= u.order_; ++k) fact *= k;
        Series r(u.order_, g[u.order_] / fact);
        for (int k = u.order_ - 1; k >= 0; --k) {
            fact /= (k + 1);
            r = r * delta;
            r.c_[0] += g[k] / fact;
        }
        return r;
    }

    /// Partial d^{a+b}/dx^a dy^b = a! b! c(a, b).
    Jet to_jet(Point center) const
    {
        Jet jet(center, order_);
        for (int k = 0; k <= order_; ++k) {
            for (int b = 0; b <= k; ++b) {
                const int a = k - b;
                double fa = 1.0;
                for (int i = 2; i <= a; ++i) fa *= i;
                double fb = 1.0;
                for (int i = 2; i <= b; ++i) fb *= i;
                jet.at(a, b) = fa * fb * c_[Jet::index(a, b)];
            }
        }
        return jet;
    }

private:
    int order_;
    std::array<double, kCapacity> c_{};
};

using Derivs = std::array<double, kMaxJetOrder + 1>;

inline Series exp(const Series& u)
{
    Derivs g;
    g.fill(std::exp(u.value()));
    return Series::compose(u, g);
}

inline Series sin(const Series& u)
{
    const double s = std::sin(u.value()), c = std::cos(u.value());
    const std::array<double, 4> cycle{s, c, -s, -c};
    Derivs g;
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = cycle[k % 4];
    return Series::compose(u, g);
}

inline Series cos(const Series& u)
{
    const double s = std::sin(u.value()), c = std::cos(u.value());
    const std::array<double, 4> cycle{c, -s, -c, s};
    Derivs g;
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = cycle[k % 4];
    return Series::compose(u, g);
}

/// u^p for real p, u > 0 (or u = 0 with only the value requested).
inline Series pow(const Series& u, double p)
{
    Derivs g;
    double coef = 1.0;
    for (int k = 0; k <= kMaxJetOrder; ++k) {
        g[k] = k <= u.order() ? coef * std::pow(u.value(), p - k) : 0.0;
        coef *= (p - k);
    }
    return Series::compose(u, g);
}

inline Series sqrt(const Series& u)
{
    if (u.order() == 0) return Series(0, std::sqrt(u.value()));
    return pow(u, 0.5);
}

inline Series reciprocal(const Series& u)
{
    return pow(u, -1.0);
}

inline Series operator/(const Series& a, const Series& b)
{
    return a * reciprocal(b);
}

inline Series tanh(const Series& u)
{
    // 1 - 2 / (1 + e^{2u}); for large |u| use the odd symmetry.
    if (u.value() > 0.0) return 1.0 - 2.0 * reciprocal(1.0 + exp(-2.0 * u)) * exp(-2.0 * u);
    return 1.0 - 2.0 * reciprocal(1.0 + exp(2.0 * u));
}

} // namespace bshep::detail
