#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bshep/geometry.hpp"

namespace bshep {

/// Uniform cell grid over a bounding box; items are stored per cell in
/// compressed rows.
class CellGrid {
public:
    CellGrid() = default;
    CellGrid(Point lo, Point hi, double cell_size);

    bool contains(Point p) const;
    std::size_t cell_of(Point p) const;
    /// Inclusive cell index ranges touched by the axis-aligned box [lo, hi].
    void cell_range(Point lo, Point hi, std::size_t& i0, std::size_t& i1, std::size_t& j0,
                    std::size_t& j1) const;

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::span<const std::size_t> items(std::size_t i, std::size_t j) const
    {
        const std::size_t c = j * nx_ + i;
        return {items_.data() + start_[c], start_[c + 1] - start_[c]};
    }

    /// Fill from (cell, item) pairs.
    void assign(const std::vector<std::pair<std::size_t, std::size_t>>& cell_items);

private:
    Point lo_, hi_;
    double cell_ = 1.0;
    std::size_t nx_ = 0, ny_ = 0;
    std::vector<std::size_t> start_, items_;
};

struct Neighbor {
    std::size_t index;
    double distance;
};

/// Distinct planar nodes with a cell index for disk and nearest queries.
class NodeSet {
public:
    NodeSet() = default;
    /// Throws ArgumentError on non-finite or repeated points.
    explicit NodeSet(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }

    Point lower() const { return lo_; }
    Point upper() const { return hi_; }
    double cell_size() const { return cell_; }

    /// Nodes with |V_k - p| < radius, in index order.
    std::vector<std::size_t> within(Point p, double radius) const;
    /// The k nearest nodes to p sorted by (distance, index), skipping `exclude`.
    std::vector<Neighbor> nearest(Point p, std::size_t k, std::optional<std::size_t> exclude = {}) const;

private:
    std::vector<Neighbor> within_closed(Point p, double radius, std::optional<std::size_t> exclude) const;

    std::vector<Point> points_;
    Point lo_, hi_;
    double cell_ = 1.0;
    CellGrid grid_;
};

/// Radius of influence per node: the distance to the (n+1)-th nearest other
/// node, so the open disk holds n neighbors; 1.1 x the farthest distance
/// when n >= N - 1.
std::vector<double> compute_radii(const NodeSet& nodes, int n);

/// Compactly supported Shepard weights: exponent mu and per-node radii,
/// plus a cell index mapping each cell to the disks that overlap it.
class LocalSupport {
public:
    LocalSupport() = default;
    LocalSupport(const NodeSet& nodes, double mu, std::vector<double> radii);

    double mu() const { return mu_; }
    std::span<const double> radii() const { return radii_; }
    double radius(std::size_t i) const { return radii_[i]; }

    /// Superset of the nodes whose disks contain p.
    std::span<const std::size_t> candidates(Point p) const;

private:
    double mu_ = 2.0;
    std::vector<double> radii_;
    CellGrid disks_;
};

struct BasisEntry {
    std::size_t index;
    double weight;
};

/// ((1/|p - V_i|) - (1/R_i))_+^mu, computed as ((R - d)/(R d))_+^mu.
double raw_weight(Point p, std::size_t i, const NodeSet& nodes, const LocalSupport& s);

/// Normalized weights over the nodes whose disks contain p; the cardinal
/// singleton {k: 1} when p coincides with V_k. Throws CoverageError when no
/// disk contains p.
std::vector<BasisEntry> basis(Point p, const NodeSet& nodes, const LocalSupport& s);

/// Same as basis() but reuses `out`; returns false instead of throwing when
/// p is uncovered.
bool basis_into(Point p, const NodeSet& nodes, const LocalSupport& s, std::vector<BasisEntry>& out);

/// Global inverse-distance weighted mean with exponent mu.
double classic_shepard_eval(Point p, const NodeSet& nodes, std::span<const double> values, double mu);

} // namespace bshep
