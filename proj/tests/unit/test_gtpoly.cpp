#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bshep/errors.hpp"
#include "bshep/gtpoly.hpp"
#include "../support/util.hpp"

using namespace bshep;

namespace {

double falling(int n, int k)
{
    double r = 1.0;
    for (int t = 0; t < k; ++t) r *= n - t;
    return r;
}

PartialsFn monomial(int p, int q)
{
    return [p, q](Point v, int a, int b) {
        if (a > p || b > q) return 0.0;
        return falling(p, a) * std::pow(v.x, p - a) * falling(q, b) * std::pow(v.y, q - b);
    };
}

GtData make(const Triangle& t, const PartialsFn& f, int m, int order = -1)
{
    const int o = order < 0 ? m - 1 : order;
    return {t, {jet_from_callable(f, t.v1, o), jet_from_callable(f, t.v2, o), jet_from_callable(f, t.v3, o)}, m};
}

Triangle rotated(const Triangle& t, int k)
{
    if (k == 1) return {t.v2, t.v3, t.v1};
    if (k == 2) return {t.v3, t.v1, t.v2};
    return t;
}

// sin(x + 2y)
double sin_partial(Point p, int a, int b)
{
    const int k = a + b;
    const double s = std::sin(p.x + 2 * p.y + k * std::numbers::pi / 2);
    return std::pow(2.0, b) * s;
}

const Triangle reference{{0.2, 1.0 / 7}, {9.0 / 7, 2.0 / 9}, {1.0 / 3, 1.1}};

} // namespace

TEST_CASE("examples")
{
    const Triangle unit{{0, 0}, {1, 0}, {0, 1}};
    const PartialsFn f = [](Point p, int a, int b) {
        if (a + b == 0) return p.x * p.x + p.x * p.y;
        if (a == 1 && b == 0) return 2 * p.x + p.y;
        if (a == 0 && b == 1) return p.x;
        return a == 2 ? 2.0 : (a == 1 ? 1.0 : 0.0);
    };
    CHECK(gt_eval(make(unit, f, 2), {0.3, 0.3}) == doctest::Approx(0.18).epsilon(1e-14));
    CHECK(quadratic_element_eval(make(unit, monomial(2, 0), 2), {0.5, 0}) == doctest::Approx(0.25));

    // symbolic evaluation of the expansion for sin(x + 2y)
    CHECK(gt_eval(make(reference, sin_partial, 2), {0.3, 0.4}) == doctest::Approx(0.86735633061560358).epsilon(1e-13));
    CHECK(gt_eval(make(reference, sin_partial, 3), {0.3, 0.4}) == doctest::Approx(0.86495087031386408).epsilon(1e-13));
    CHECK(gt_eval(make(reference, sin_partial, 3), {-0.5, 1.5}) == doctest::Approx(0.5931174564775451).epsilon(1e-13));
}

TEST_CASE("argument checks")
{
    const Triangle unit{{0, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(gt_eval(make({{0, 0}, {1, 1}, {2, 2}}, monomial(1, 0), 2), {0.1, 0.1}), GeometryError);
    CHECK_THROWS_AS(gt_eval(make(unit, monomial(1, 0), 3, 1), {0.1, 0.1}), ArgumentError);
    GtData moved = make(unit, monomial(1, 0), 2);
    moved.jets[1] = jet_from_callable(monomial(1, 0), {0.5, 0.5}, 1);
    CHECK_THROWS_AS(gt_eval(moved, {0.1, 0.1}), ArgumentError);
    CHECK_THROWS_AS(gt_minus_taylor(make(unit, monomial(1, 0), 3), jet_from_callable(monomial(1, 0), unit.v1, 2), {0, 0}),
                    ArgumentError);
}

TEST_CASE("degree of exactness")
{
    testing_util::Rng rng(10);
    for (int m = 1; m <= 3; ++m) {
        for (int trial = 0; trial < 20; ++trial) {
            const Triangle t = testing_util::random_triangle(rng);
            for (int deg = 0; deg <= m; ++deg) {
                for (int b = 0; b <= deg; ++b) {
                    const int a = deg - b;
                    const GtPolynomial p(make(t, monomial(a, b), m));
                    for (int k = 0; k < 100; ++k) {
                        const Point x = rng.point(-1, 2);
                        const double want = std::pow(x.x, a) * std::pow(x.y, b);
                        CHECK(std::abs(p(x) - want) <= 1e-9 * (1 + std::abs(want)));
                    }
                }
            }
        }
    }
}

TEST_CASE("vertex interpolation")
{
    testing_util::Rng rng(11);
    for (int m = 1; m <= 5; ++m) {
        const Triangle t = testing_util::random_triangle(rng);
        const GtPolynomial p(make(t, sin_partial, m));
        for (Point v : {t.v1, t.v2, t.v3}) {
            const double f = sin_partial(v, 0, 0);
            CHECK(std::abs(p(v) - f) < 1e-12 * (1 + std::abs(f)));
        }
    }
}

TEST_CASE("degree one is the Lagrange interpolant for every referring vertex")
{
    testing_util::Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Triangle t = testing_util::random_triangle(rng);
        const double f[3] = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        for (int r = 0; r < 3; ++r) {
            const Triangle u = rotated(t, r);
            const double g[3] = {f[r], f[(r + 1) % 3], f[(r + 2) % 3]};
            const GtPolynomial p(u, {Jet(u.v1, 0, {g[0]}), Jet(u.v2, 0, {g[1]}), Jet(u.v3, 0, {g[2]})}, 1);
            for (int k = 0; k < 20; ++k) {
                const Point x = rng.point(-1, 2);
                const auto l = barycentric(x, t);
                const double want = l.l1 * f[0] + l.l2 * f[1] + l.l3 * f[2];
                CHECK(std::abs(p(x) - want) < 1e-12 * (1 + std::abs(want)) * 10);
            }
        }
    }
}

TEST_CASE("referring vertex: irrelevant for degree two, relevant for degree three")
{
    testing_util::Rng rng(13);
    bool differs = false;
    for (int trial = 0; trial < 10; ++trial) {
        const Triangle t = testing_util::random_triangle(rng);
        const GtData d2 = make(t, sin_partial, 2);
        for (int k = 0; k < 20; ++k) {
            const Point x = rng.point(-1, 2);
            const double p0 = gt_eval(d2, x);
            CHECK(quadratic_element_eval(d2, x) == doctest::Approx(p0).epsilon(1e-11).scale(1.0));
            for (int r = 1; r < 3; ++r) {
                CHECK(gt_eval(make(rotated(t, r), sin_partial, 2), x) == doctest::Approx(p0).epsilon(1e-11).scale(1.0));
            }
            const double q0 = gt_eval(make(t, sin_partial, 3), x);
            const double q1 = gt_eval(make(rotated(t, 1), sin_partial, 3), x);
            differs = differs || std::abs(q0 - q1) > 1e-6;
        }
    }
    CHECK(differs);
}

TEST_CASE("gt minus taylor")
{
    const Triangle t{{0.1, 0.2}, {0.6, 0.3}, {0.2, 0.7}};
    const GtData d = make(t, monomial(2, 1), 3);
    const Jet full = jet_from_callable(monomial(2, 1), t.v1, 3);
    CHECK(std::abs(gt_minus_taylor(d, full, {0.9, -0.4})) < 1e-13);
    const GtData s = make(t, sin_partial, 3);
    CHECK(std::abs(gt_minus_taylor(s, jet_from_callable(sin_partial, t.v1, 3), t.v1)) < 1e-14);

    // shrinking triangles at a fixed point: O(h)
    const Point v1{0.3, 0.2}, p{0.8, 0.5};
    const Jet tj = jet_from_callable(sin_partial, v1, 3);
    std::vector<double> hs{0.2, 0.1, 0.05, 0.025}, diffs;
    for (double h : hs) {
        const Triangle u{v1, v1 + Point{h, 0}, v1 + Point{0, h}};
        diffs.push_back(std::abs(gt_minus_taylor(make(u, sin_partial, 3), tj, p)));
    }
    CHECK(testing_util::loglog_slope(hs, diffs) >= 0.8);
}

TEST_CASE("derivative matching at the referring vertex")
{
    const Point v1{0.3, 0.2};
    for (int m = 2; m <= 3; ++m) {
        std::vector<double> rs{0.2, 0.1, 0.05, 0.025}, errs;
        for (double r : rs) {
            const Triangle t{v1, v1 + Point{r, 0.2 * r}, v1 + Point{-0.3 * r, r}};
            const GtPolynomial p(make(t, sin_partial, m));
            const double h = 1e-5;
            const double gx = (p(v1 + Point{h, 0}) - p(v1 - Point{h, 0})) / (2 * h);
            const double gy = (p(v1 + Point{0, h}) - p(v1 - Point{0, h})) / (2 * h);
            errs.push_back(std::hypot(gx - sin_partial(v1, 1, 0), gy - sin_partial(v1, 0, 1)));
        }
        CHECK(testing_util::loglog_slope(rs, errs) >= m - 0.2);
    }
}

TEST_CASE("evaluation on the line through v1 parallel to v2 v3")
{
    // l2 + l3 = 0 away from v1: the expansion stays finite and exact
    const Triangle t{{0, 0}, {1, 0}, {0, 1}};
    const GtPolynomial p(make(t, monomial(2, 1), 3));
    for (double s : {-1.0, -0.25, 0.5, 2.0}) {
        const Point x{s, -s};
        CHECK(p(x) == doctest::Approx(x.x * x.x * x.y).epsilon(1e-12).scale(1.0));
    }
}
