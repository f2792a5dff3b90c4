#include "bshep/bernoulli.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bshep/errors.hpp"

namespace bshep {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_index(int n, const char* what)
{
    if (n < 0 || n > kMaxBernoulliIndex) {
        throw ArgumentError(std::string(what) + ": index " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxBernoulliIndex) + "]");
    }
}

struct Tables {
    std::vector<double> numbers;
    std::vector<PolyCoeffs> polys;
    std::vector<std::vector<double>> s_coeffs;
};

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, where the numbers follow from
// sum_{k=0}^{n} C(n+1,k) B_k = 0 (equivalent to the zero-mean condition).
Tables build_tables()
{
    constexpr int n_max = kMaxBernoulliIndex;
    std::vector<Rational> b(n_max + 1);
    b[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        Rational binom = 1; // C(n+1, k)
        for (int k = 0; k < n; ++k) {
            acc += binom * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -acc / (n + 1);
    }

    Tables t;
    t.numbers.reserve(n_max + 1);
    for (const auto& r : b) t.numbers.push_back(static_cast<double>(r));

    for (int n = 0; n <= n_max; ++n) {
        PolyCoeffs p;
        p.coeffs.assign(n + 1, 0.0);
        Rational binom = 1; // C(n, k)
        for (int k = 0; k <= n; ++k) {
            p.coeffs[n - k] = static_cast<double>(binom * b[k]);
            binom = binom * (n - k) / (k + 1);
        }
        t.polys.push_back(p);
        auto s = p.coeffs;
        s[0] = 0.0;
        t.s_coeffs.push_back(std::move(s));
    }
    t.s_coeffs[0] = {0.0};
    return t;
}

const Tables& tables()
{
    static const Tables t = build_tables();
    return t;
}

} // namespace

double PolyCoeffs::operator()(double t) const
{
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

PolyCoeffs PolyCoeffs::derivative() const
{
    PolyCoeffs d;
    if (coeffs.size() <= 1) {
        d.coeffs = {0.0};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs[k - 1] = static_cast<double>(k) * coeffs[k];
    return d;
}

std::vector<double> bernoulli_numbers(int n_max)
{
    check_index(n_max, "bernoulli_numbers");
    const auto& all = tables().numbers;
    return {all.begin(), all.begin() + n_max + 1};
}

PolyCoeffs bernoulli_poly(int n)
{
    check_index(n, "bernoulli_poly");
    return tables().polys[n];
}

const std::vector<double>& s_poly_coeffs(int n)
{
    check_index(n, "s_poly_coeffs");
    return tables().s_coeffs[n];
}

double s_poly_eval(int n, double t)
{
    const auto& c = s_poly_coeffs(n);
    double acc = 0.0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) acc = (acc + c[k]) * t;
    return acc;
}

double univariate_gt_eval(std::span<const double> end_derivs_a,
                          std::span<const double> end_derivs_b,
                          double a, double b, int m, double x)
{
    if (!(a < b)) throw ArgumentError("univariate_gt_eval: requires a < b");
    if (m < 1 || m > kMaxBernoulliIndex) throw ArgumentError("univariate_gt_eval: degree out of range");
    if (end_derivs_a.size() != static_cast<std::size_t>(m) ||
        end_derivs_b.size() != static_cast<std::size_t>(m)) {
        throw ArgumentError("univariate_gt_eval: expected " + std::to_string(m) + " derivatives per end");
    }
    const double h = b - a;
    const double t = (x - a) / h;
    double result = end_derivs_a[0];
    double hpow = 1.0;      // h^{k-1}
    double factorial = 1.0; // k!
    for (int k = 1; k <= m; ++k) {
        factorial *= k;
        result += s_poly_eval(k, t) / factorial * hpow * (end_derivs_b[k - 1] - end_derivs_a[k - 1]);
        hpow *= h;
    }
    return result;
}

} // namespace bshep
