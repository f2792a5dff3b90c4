#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bshep/bench/benchmark.hpp"
#include "bshep/interp.hpp"

namespace bshep::bench {

/// Contents of a node file: `x,y[,f[,fx,fy,fxx,fxy,fyy]]` with a header row.
struct NodeData {
    std::vector<Point> points;
    std::optional<std::vector<double>> values;
    std::optional<std::vector<Jet>> jets; // order 2, centered at the points
};

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

void write_nodes_csv(std::ostream& os, const NodeData& data);
NodeData read_nodes_csv(std::istream& is);
void write_nodes_csv(const std::string& path, const NodeData& data);
NodeData read_nodes_csv(const std::string& path);

void write_report_csv(std::ostream& os, const std::vector<ErrorReport>& rows);
void write_report_csv(const std::string& path, const std::vector<ErrorReport>& rows);

/// Plot-ready rows `function,n,operator,max_abs` (successful rows only).
void write_plot_csv(std::ostream& os, const std::vector<ErrorReport>& rows);

/// `x,y,value` per grid point in row-major order.
void write_grid_csv(std::ostream& os, const GridValues& grid);

/// JSON model bundle: configuration, nodes and nodal jets, plus the derived
/// radii and triangle assignments for inspection.
void save_model(const std::string& path, const Interpolant& itp);
/// Rebuilds the interpolant and checks it against the recorded radii and
/// assignments.
Interpolant load_model(const std::string& path);

} // namespace bshep::bench
