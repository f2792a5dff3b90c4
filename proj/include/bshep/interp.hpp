#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bshep/assoc.hpp"
#include "bshep/gtpoly.hpp"
#include "bshep/jets.hpp"
#include "bshep/shepard.hpp"

namespace bshep {

/// Local polynomial blended by the Shepard basis.
enum class Mode {
    bernoulli, ///< generalized Taylor polynomial on the node's triangle
    taylor,    ///< Taylor polynomial at the node
};

/// Where nodal derivative data comes from.
enum class JetSource {
    analytic,      ///< supplied by the caller
    wls_quadratic, ///< weighted least-squares quadratic fit of the values
    wls_cubic,     ///< weighted least-squares cubic fit of the values
};

/// What eval() does at a point no support disk reaches.
enum class Fallback { error, nearest };

inline constexpr int kMaxOperatorDegree = 5;

struct Config {
    int m = 3;
    double mu = 2.0;
    int n_w = 9;
    int n_q = 13;
    Mode mode = Mode::bernoulli;
    JetSource jet_source = JetSource::analytic;
    Fallback fallback = Fallback::error;

    /// Jet order consumed by the local polynomials: m - 1 or m.
    int required_jet_order() const { return mode == Mode::bernoulli ? m - 1 : m; }
    /// Throws ArgumentError on inconsistent settings.
    void validate() const;
};

std::string to_string(Mode mode);
std::string to_string(JetSource source);
std::string to_string(Fallback fallback);
Mode parse_mode(const std::string& s);
JetSource parse_jet_source(const std::string& s);
Fallback parse_fallback(const std::string& s);

/// Shepard blend of per-node local polynomials over compactly supported
/// weights. Immutable once built; evaluation is reentrant.
class Interpolant {
public:
    /// Analytic jets, one per node, centered at the node (order >= required).
    static Interpolant build(NodeSet nodes, std::vector<Jet> jets, const Config& config);
    /// Jets from an analytic partials callback.
    static Interpolant build(NodeSet nodes, const PartialsFn& partials, const Config& config);
    /// Values only; jets come from the configured least-squares fit.
    static Interpolant build(NodeSet nodes, std::span<const double> values, const Config& config);

    double operator()(Point p) const { return eval(p); }
    double eval(Point p) const;
    /// Same as eval() with an explicit uncovered-point policy.
    double eval(Point p, Fallback fallback) const;

    /// Value of node i's local polynomial at p.
    double local(std::size_t i, Point p) const;

    const Config& config() const { return config_; }
    const NodeSet& nodes() const { return nodes_; }
    const LocalSupport& support() const { return support_; }
    std::span<const Jet> jets() const { return jets_; }
    /// Empty in taylor mode.
    std::span<const TriangleAssignment> assignments() const { return assignments_; }

private:
    Interpolant() = default;
    static Interpolant assemble(NodeSet nodes, std::vector<Jet> jets, const Config& config);

    Config config_;
    NodeSet nodes_;
    LocalSupport support_;
    std::vector<Jet> jets_;
    std::vector<TriangleAssignment> assignments_;
    std::vector<GtPolynomial> polys_;
};

inline double eval(const Interpolant& itp, Point p) { return itp.eval(p); }

/// Rectangular evaluation lattice with nx x ny points including the corners.
struct GridSpec {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
    std::size_t nx = 100, ny = 100;

    void validate() const;
    Point at(std::size_t ix, std::size_t iy) const
    {
        return {x0 + (x1 - x0) * static_cast<double>(ix) / static_cast<double>(nx - 1),
                y0 + (y1 - y0) * static_cast<double>(iy) / static_cast<double>(ny - 1)};
    }
};

/// Row-major table, values[iy * nx + ix].
struct GridValues {
    GridSpec spec;
    std::vector<double> values;

    double operator()(std::size_t ix, std::size_t iy) const { return values[iy * spec.nx + ix]; }
};

GridValues eval_grid(const Interpolant& itp, const GridSpec& grid);

struct ErrorSummary {
    double max_abs = 0.0;
    Point arg;
    double rms = 0.0;
};

ErrorSummary max_error(const Interpolant& itp, const std::function<double(Point)>& truth, const GridSpec& grid);

} // namespace bshep
