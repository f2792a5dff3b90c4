#include <doctest.h>

#include <cmath>
#include <vector>

#include "bshep/bernoulli.hpp"
#include "bshep/errors.hpp"
#include "../support/util.hpp"

using namespace bshep;

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli_numbers(0) == std::vector<double>{1.0});
    const auto b = bernoulli_numbers(12);
    CHECK(b[1] == doctest::Approx(-0.5));
    CHECK(b[2] == doctest::Approx(1.0 / 6.0));
    CHECK(b[4] == doctest::Approx(-1.0 / 30.0));
    CHECK(b[12] == doctest::Approx(-691.0 / 2730.0));
    for (int k = 3; k <= 11; k += 2) CHECK(b[static_cast<std::size_t>(k)] == 0.0);
    CHECK(bernoulli_numbers(30)[30] == doctest::Approx(8615841276005.0 / 14322.0));
    CHECK_THROWS_AS(bernoulli_numbers(-1), ArgumentError);
    CHECK_THROWS_AS(bernoulli_numbers(kMaxBernoulliIndex + 1), ArgumentError);
}

TEST_CASE("bernoulli polynomials")
{
    CHECK(bernoulli_poly(0).coeffs == std::vector<double>{1.0});
    CHECK(bernoulli_poly(1).coeffs == std::vector<double>{-0.5, 1.0});
    const auto b2 = bernoulli_poly(2).coeffs;
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == doctest::Approx(1.0 / 6.0));
    CHECK(b2[1] == -1.0);
    CHECK(b2[2] == 1.0);
    CHECK_THROWS_AS(bernoulli_poly(31), ArgumentError);
}

TEST_CASE("S polynomials")
{
    CHECK(s_poly_eval(5, 0.0) == 0.0);
    CHECK(s_poly_eval(1, 0.3) == doctest::Approx(0.3));
    CHECK(std::abs(s_poly_eval(2, 1.0)) < 1e-15);
    CHECK(s_poly_eval(0, 0.7) == 0.0);
    for (int n = 0; n <= 8; ++n) CHECK(s_poly_coeffs(n)[0] == 0.0);
}

TEST_CASE("derivative identity B_n' = n B_{n-1}")
{
    testing_util::Rng rng(1);
    for (int n = 1; n <= 12; ++n) {
        const auto d = bernoulli_poly(n).derivative();
        const auto prev = bernoulli_poly(n - 1);
        for (int k = 0; k < 100; ++k) {
            const double t = rng.uniform();
            CHECK(std::abs(d(t) - n * prev(t)) < 1e-10);
        }
    }
}

TEST_CASE("zero mean on [0, 1]")
{
    // 8-point Gauss-Legendre is exact through degree 15
    const double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
    const double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    for (int n = 1; n <= 12; ++n) {
        const auto b = bernoulli_poly(n);
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) sum += 0.5 * w[k] * (b(0.5 + 0.5 * x[k]) + b(0.5 - 0.5 * x[k]));
        CHECK(std::abs(sum) < 1e-12);
    }
}

TEST_CASE("univariate generalized Taylor polynomial")
{
    const std::vector<double> fa{2.0}, fb{4.0};
    CHECK(univariate_gt_eval(fa, fb, 0.0, 1.0, 1, 0.5) == doctest::Approx(3.0));

    // f = t^3 on [0, 1]
    const std::vector<double> ca{0.0, 0.0, 0.0}, cb{1.0, 3.0, 6.0};
    CHECK(univariate_gt_eval(ca, cb, 0.0, 1.0, 3, 0.4) == doctest::Approx(0.064).epsilon(1e-14));

    CHECK_THROWS_AS(univariate_gt_eval(fa, fb, 1.0, 1.0, 1, 0.5), ArgumentError);
    CHECK_THROWS_AS(univariate_gt_eval(ca, fb, 0.0, 1.0, 3, 0.5), ArgumentError);
}

TEST_CASE("univariate exactness and endpoint interpolation")
{
    testing_util::Rng rng(2);
    for (int m = 1; m <= 5; ++m) {
        for (int trial = 0; trial < 20; ++trial) {
            double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
            if (a > b) std::swap(a, b);
            if (b - a < 0.05) continue;
            std::vector<double> c(static_cast<std::size_t>(m + 1));
            for (auto& v : c) v = rng.uniform(-1, 1);
            // derivatives of sum c_k t^k
            auto deriv = [&](double t, int order) {
                double s = 0.0;
                for (int k = order; k <= m; ++k) {
                    double f = 1.0;
                    for (int j = 0; j < order; ++j) f *= k - j;
                    s += c[static_cast<std::size_t>(k)] * f * std::pow(t, k - order);
                }
                return s;
            };
            std::vector<double> da, db;
            for (int k = 0; k < m; ++k) {
                da.push_back(deriv(a, k));
                db.push_back(deriv(b, k));
            }
            for (int k = 0; k < 10; ++k) {
                const double x = rng.uniform(a, b);
                const double want = deriv(x, 0);
                CHECK(std::abs(univariate_gt_eval(da, db, a, b, m, x) - want) <= 1e-9 * (1.0 + std::abs(want)));
            }
            CHECK(std::abs(univariate_gt_eval(da, db, a, b, m, a) - da[0]) < 1e-12 * (1.0 + std::abs(da[0])));
            CHECK(std::abs(univariate_gt_eval(da, db, a, b, m, b) - db[0]) < 1e-12 * (1.0 + std::abs(db[0])));
        }
    }
}
