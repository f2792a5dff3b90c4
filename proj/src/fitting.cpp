#include "bshep/fitting.hpp"

#include <cmath>
#include <string>

#include "bshep/errors.hpp"

namespace bshep {

namespace {

constexpr double kMaxCondition = 1e12;

void check_degree(int degree)
{
    if (degree != 2 && degree != 3) throw ArgumentError("least-squares degree must be 2 or 3");
}

Eigen::VectorXd monomials(Point d, int degree)
{
    Eigen::VectorXd phi(WlsCoefficients::count_for(degree));
    Eigen::Index k = 0;
    for (int total = 1; total <= degree; ++total) {
        for (int s = 0; s <= total; ++s) phi[k++] = std::pow(d.x, total - s) * std::pow(d.y, s);
    }
    return phi;
}

double factorial(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

std::vector<double> compute_rq_radii(const NodeSet& nodes, int n_q)
{
    if (n_q < 1 || static_cast<std::size_t>(n_q) >= nodes.size()) {
        throw ArgumentError("least-squares neighbor count " + std::to_string(n_q) +
                            " must lie in [1, N-1] for N = " + std::to_string(nodes.size()));
    }
    return compute_radii(nodes, n_q);
}

NormalSystem assemble_normal_system(std::size_t i, const NodeSet& nodes, std::span<const double> values,
                                    int degree, std::span<const double> rq)
{
    check_degree(degree);
    if (values.size() != nodes.size() || rq.size() != nodes.size()) {
        throw ArgumentError("least-squares fit needs one value and one radius per node");
    }
    const auto n = static_cast<Eigen::Index>(WlsCoefficients::count_for(degree));
    NormalSystem sys{Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n), 0};
    const Point center = nodes[i];
    const double radius = rq[i];
    for (std::size_t k : nodes.within(center, radius)) {
        if (k == i) continue;
        const double d = distance(nodes[k], center);
        const double w = std::pow((radius - d) / (radius * d), 2);
        const Eigen::VectorXd phi = monomials(nodes[k] - center, degree);
        sys.matrix.noalias() += w * phi * phi.transpose();
        sys.rhs.noalias() += w * (values[k] - values[i]) * phi;
        ++sys.neighbors;
    }
    return sys;
}

WlsCoefficients wls_fit(std::size_t i, const NodeSet& nodes, std::span<const double> values, int degree,
                        std::span<const double> rq)
{
    const NormalSystem sys = assemble_normal_system(i, nodes, values, degree, rq);
    const auto n = sys.matrix.rows();
    if (sys.neighbors < static_cast<std::size_t>(n)) {
        throw FitError(i, "degree-" + std::to_string(degree) + " fit needs " + std::to_string(n) +
                              " neighbors, found " + std::to_string(sys.neighbors));
    }

    Eigen::VectorXd scale = sys.matrix.diagonal().cwiseSqrt().cwiseInverse();
    if (!scale.allFinite()) throw FitError(i, "neighbors do not determine every coefficient");
    const Eigen::MatrixXd scaled = scale.asDiagonal() * sys.matrix * scale.asDiagonal();
    const Eigen::VectorXd scaled_rhs = scale.asDiagonal() * sys.rhs;

    Eigen::VectorXd y;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(scaled);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive() && ldlt.rcond() * kMaxCondition > 1.0) {
        y = ldlt.solve(scaled_rhs);
    } else {
        // Rebuild the weighted design matrix and solve it directly.
        const Point center = nodes[i];
        const double radius = rq[i];
        std::vector<std::size_t> nbrs;
        for (std::size_t k : nodes.within(center, radius)) {
            if (k != i) nbrs.push_back(k);
        }
        Eigen::MatrixXd design(static_cast<Eigen::Index>(nbrs.size()), n);
        Eigen::VectorXd target(static_cast<Eigen::Index>(nbrs.size()));
        for (std::size_t r = 0; r < nbrs.size(); ++r) {
            const std::size_t k = nbrs[r];
            const double d = distance(nodes[k], center);
            const double sw = (radius - d) / (radius * d);
            design.row(static_cast<Eigen::Index>(r)) =
                sw * monomials(nodes[k] - center, degree).cwiseProduct(scale).transpose();
            target[static_cast<Eigen::Index>(r)] = sw * (values[k] - values[i]);
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
        qr.setThreshold(1.0 / kMaxCondition);
        if (qr.rank() < n) throw FitError(i, "least-squares system is rank deficient");
        y = qr.solve(target);
    }

    const Eigen::VectorXd c = scale.cwiseProduct(y);
    if (!c.allFinite()) throw FitError(i, "least-squares solution is not finite");
    return {degree, i, std::vector<double>(c.data(), c.data() + c.size())};
}

Jet coefficients_to_jet(const WlsCoefficients& c, double f_value, Point center, int order)
{
    if (order < 0 || order > c.degree) {
        throw ArgumentError("a degree-" + std::to_string(c.degree) + " fit cannot supply a jet of order " +
                            std::to_string(order));
    }
    Jet jet(center, order);
    jet.at(0, 0) = f_value;
    for (int total = 1; total <= order; ++total) {
        for (int s = 0; s <= total; ++s) {
            const int r = total - s;
            jet.at(r, s) = factorial(r) * factorial(s) * c(r, s);
        }
    }
    return jet;
}

} // namespace bshep
