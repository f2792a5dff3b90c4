#include "bshep/interp.hpp"

#include <algorithm>
#include <cmath>

#include "bshep/errors.hpp"
#include "bshep/fitting.hpp"

namespace bshep {

void Config::validate() const
{
    if (m < 1 || m > kMaxOperatorDegree) {
        throw ArgumentError("operator degree m must lie in [1, " + std::to_string(kMaxOperatorDegree) + "]");
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ArgumentError("mu must be positive");
    if (n_w < 1) throw ArgumentError("n_w must be >= 1");
    if (jet_source != JetSource::analytic) {
        const int degree = jet_source == JetSource::wls_quadratic ? 2 : 3;
        if (required_jet_order() > degree) {
            throw ArgumentError(to_string(mode) + " mode with m = " + std::to_string(m) + " needs order-" +
                                std::to_string(required_jet_order()) + " jets; " + to_string(jet_source) +
                                " supplies at most order " + std::to_string(degree));
        }
        if (static_cast<std::size_t>(n_q) < WlsCoefficients::count_for(degree)) {
            throw ArgumentError("n_q = " + std::to_string(n_q) + " is below the " +
                                std::to_string(WlsCoefficients::count_for(degree)) +
                                " coefficients of the fit");
        }
    }
}

std::string to_string(Mode mode)
{
    return mode == Mode::bernoulli ? "bernoulli" : "taylor";
}

std::string to_string(JetSource source)
{
    switch (source) {
    case JetSource::analytic: return "analytic";
    case JetSource::wls_quadratic: return "wls-quadratic";
    case JetSource::wls_cubic: return "wls-cubic";
    }
    return "?";
}

std::string to_string(Fallback fallback)
{
    return fallback == Fallback::error ? "error" : "nearest";
}

Mode parse_mode(const std::string& s)
{
    if (s == "bernoulli") return Mode::bernoulli;
    if (s == "taylor") return Mode::taylor;
    throw ArgumentError("unknown mode '" + s + "' (bernoulli | taylor)");
}

JetSource parse_jet_source(const std::string& s)
{
    if (s == "analytic") return JetSource::analytic;
    if (s == "wls-quadratic") return JetSource::wls_quadratic;
    if (s == "wls-cubic") return JetSource::wls_cubic;
    throw ArgumentError("unknown jet source '" + s + "' (analytic | wls-quadratic | wls-cubic)");
}

Fallback parse_fallback(const std::string& s)
{
    if (s == "error") return Fallback::error;
    if (s == "nearest") return Fallback::nearest;
    throw ArgumentError("unknown fallback '" + s + "' (error | nearest)");
}

Interpolant Interpolant::assemble(NodeSet nodes, std::vector<Jet> jets, const Config& config)
{
    if (nodes.size() < 3) throw ArgumentError("interpolant needs at least 3 nodes");
    Interpolant itp;
    itp.config_ = config;
    itp.support_ = LocalSupport(nodes, config.mu, compute_radii(nodes, config.n_w));
    const int order = config.required_jet_order();
    itp.jets_.reserve(jets.size());
    for (auto& j : jets) itp.jets_.push_back(j.order() == order ? std::move(j) : j.truncated(order));

    if (config.mode == Mode::bernoulli) {
        itp.assignments_ = assign_all(nodes, itp.support_);
        itp.polys_.reserve(nodes.size());
        for (const auto& a : itp.assignments_) {
            itp.polys_.emplace_back(a.triangle(nodes),
                                    std::array<Jet, 3>{itp.jets_[a.node], itp.jets_[a.others.first],
                                                       itp.jets_[a.others.second]},
                                    config.m);
        }
    }
    itp.nodes_ = std::move(nodes);
    return itp;
}

Interpolant Interpolant::build(NodeSet nodes, std::vector<Jet> jets, const Config& config)
{
    config.validate();
    if (config.jet_source != JetSource::analytic) {
        throw ArgumentError("jets supplied but the configured source is " + to_string(config.jet_source));
    }
    if (jets.size() != nodes.size()) throw ArgumentError("one jet per node required");
    for (std::size_t i = 0; i < jets.size(); ++i) {
        if (!(jets[i].center() == nodes[i])) throw ArgumentError("jet " + std::to_string(i) + " not centered at its node");
        if (jets[i].order() < config.required_jet_order()) {
            throw ArgumentError("jet " + std::to_string(i) + " has order " + std::to_string(jets[i].order()) +
                                ", need " + std::to_string(config.required_jet_order()));
        }
        const auto used = jets[i].partials().first(Jet::size_for(config.required_jet_order()));
        if (!std::all_of(used.begin(), used.end(), [](double v) { return std::isfinite(v); })) {
            throw ArgumentError("jet " + std::to_string(i) + " has non-finite entries");
        }
    }
    return assemble(std::move(nodes), std::move(jets), config);
}

Interpolant Interpolant::build(NodeSet nodes, const PartialsFn& partials, const Config& config)
{
    config.validate();
    std::vector<Jet> jets;
    jets.reserve(nodes.size());
    for (const auto& p : nodes.points()) jets.push_back(jet_from_callable(partials, p, config.required_jet_order()));
    return build(std::move(nodes), std::move(jets), config);
}

Interpolant Interpolant::build(NodeSet nodes, std::span<const double> values, const Config& config)
{
    config.validate();
    if (values.size() != nodes.size()) throw ArgumentError("one value per node required");
    if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
        throw ArgumentError("node values must be finite");
    }
    if (config.jet_source == JetSource::analytic) {
        if (config.required_jet_order() > 0) {
            throw ArgumentError("analytic jet source needs derivative data, not just values");
        }
        std::vector<Jet> jets;
        for (std::size_t i = 0; i < nodes.size(); ++i) jets.emplace_back(nodes[i], 0, std::vector<double>{values[i]});
        return assemble(std::move(nodes), std::move(jets), config);
    }
    const int degree = config.jet_source == JetSource::wls_quadratic ? 2 : 3;
    const auto rq = compute_rq_radii(nodes, config.n_q);
    std::vector<Jet> jets;
    jets.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto fit = wls_fit(i, nodes, values, degree, rq);
        jets.push_back(coefficients_to_jet(fit, values[i], nodes[i], config.required_jet_order()));
    }
    return assemble(std::move(nodes), std::move(jets), config);
}

double Interpolant::local(std::size_t i, Point p) const
{
    return config_.mode == Mode::bernoulli ? polys_[i](p) : taylor_eval(jets_[i], p);
}

double Interpolant::eval(Point p) const
{
    return eval(p, config_.fallback);
}

double Interpolant::eval(Point p, Fallback fallback) const
{
    thread_local std::vector<BasisEntry> weights;
    if (!basis_into(p, nodes_, support_, weights)) {
        if (fallback == Fallback::error) throw CoverageError(p);
        return local(nodes_.nearest(p, 1).front().index, p);
    }
    double total = 0.0;
    for (const auto& [i, w] : weights) total += w * local(i, p);
    return total;
}

void GridSpec::validate() const
{
    if (nx < 2 || ny < 2) throw ArgumentError("evaluation grid needs nx, ny >= 2");
    if (!(x1 > x0) || !(y1 > y0) || !std::isfinite(x1 - x0) || !std::isfinite(y1 - y0)) {
        throw ArgumentError("evaluation grid needs finite ranges with x0 < x1 and y0 < y1");
    }
}

GridValues eval_grid(const Interpolant& itp, const GridSpec& grid)
{
    grid.validate();
    GridValues out{grid, std::vector<double>(grid.nx * grid.ny)};
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) out.values[iy * grid.nx + ix] = itp.eval(grid.at(ix, iy));
    }
    return out;
}

ErrorSummary max_error(const Interpolant& itp, const std::function<double(Point)>& truth, const GridSpec& grid)
{
    grid.validate();
    ErrorSummary s;
    s.arg = grid.at(0, 0);
    double sum_sq = 0.0;
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            const Point p = grid.at(ix, iy);
            const double e = std::abs(itp.eval(p) - truth(p));
            sum_sq += e * e;
            if (e > s.max_abs) {
                s.max_abs = e;
                s.arg = p;
            }
        }
    }
    s.rms = std::sqrt(sum_sq / static_cast<double>(grid.nx * grid.ny));
    return s;
}

} // namespace bshep
