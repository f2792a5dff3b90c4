#include "bshep/shepard.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bshep/errors.hpp"

namespace bshep {

namespace {

constexpr double kCardinalTolerance = 1e-14;

bool by_distance_then_index(const Neighbor& a, const Neighbor& b)
{
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
}

} // namespace

// ---------------------------------------------------------------------------
// CellGrid

CellGrid::CellGrid(Point lo, Point hi, double cell_size) : lo_(lo), hi_(hi), cell_(cell_size)
{
    auto count = [&](double extent) {
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(extent / cell_)));
    };
    nx_ = count(hi.x - lo.x);
    ny_ = count(hi.y - lo.y);
    start_.assign(nx_ * ny_ + 1, 0);
}

bool CellGrid::contains(Point p) const
{
    return p.x >= lo_.x && p.x <= hi_.x && p.y >= lo_.y && p.y <= hi_.y;
}

std::size_t CellGrid::cell_of(Point p) const
{
    std::size_t i0, i1, j0, j1;
    cell_range(p, p, i0, i1, j0, j1);
    return j0 * nx_ + i0;
}

void CellGrid::cell_range(Point lo, Point hi, std::size_t& i0, std::size_t& i1, std::size_t& j0,
                          std::size_t& j1) const
{
    auto clamp_index = [&](double v, double origin, std::size_t n) {
        const double c = std::floor((v - origin) / cell_);
        if (!(c > 0.0)) return std::size_t{0};
        return std::min(n - 1, static_cast<std::size_t>(c));
    };
    i0 = clamp_index(lo.x, lo_.x, nx_);
    i1 = clamp_index(hi.x, lo_.x, nx_);
    j0 = clamp_index(lo.y, lo_.y, ny_);
    j1 = clamp_index(hi.y, lo_.y, ny_);
}

void CellGrid::assign(const std::vector<std::pair<std::size_t, std::size_t>>& cell_items)
{
    std::fill(start_.begin(), start_.end(), 0);
    for (const auto& [cell, item] : cell_items) ++start_[cell + 1];
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    items_.assign(cell_items.size(), 0);
    auto fill = start_;
    // Input is in item order per cell, so each cell's list stays sorted.
    for (const auto& [cell, item] : cell_items) items_[fill[cell]++] = item;
}

// ---------------------------------------------------------------------------
// NodeSet

NodeSet::NodeSet(std::vector<Point> points) : points_(std::move(points))
{
    if (points_.empty()) throw ArgumentError("node set is empty");
    for (const auto& p : points_) {
        if (!is_finite(p)) throw ArgumentError("node coordinates must be finite");
    }
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points_[a].x < points_[b].x || (points_[a].x == points_[b].x && points_[a].y < points_[b].y);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points_[order[k]] == points_[order[k - 1]]) {
            throw ArgumentError("nodes " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]) +
                                " coincide");
        }
    }

    lo_ = hi_ = points_.front();
    for (const auto& p : points_) {
        lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
        hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    const double diag = distance(lo_, hi_);
    cell_ = diag > 0.0 ? diag / std::sqrt(static_cast<double>(points_.size())) : 1.0;
    grid_ = CellGrid(lo_, hi_, cell_);
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    entries.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) entries.emplace_back(grid_.cell_of(points_[i]), i);
    grid_.assign(entries);
}

std::vector<Neighbor> NodeSet::within_closed(Point p, double radius, std::optional<std::size_t> exclude) const
{
    std::vector<Neighbor> out;
    std::size_t i0, i1, j0, j1;
    grid_.cell_range({p.x - radius, p.y - radius}, {p.x + radius, p.y + radius}, i0, i1, j0, j1);
    for (std::size_t j = j0; j <= j1; ++j) {
        for (std::size_t i = i0; i <= i1; ++i) {
            for (std::size_t k : grid_.items(i, j)) {
                if (exclude && *exclude == k) continue;
                const double d = distance(points_[k], p);
                if (d <= radius) out.push_back({k, d});
            }
        }
    }
    return out;
}

std::vector<std::size_t> NodeSet::within(Point p, double radius) const
{
    std::vector<std::size_t> out;
    for (const auto& n : within_closed(p, radius, {})) {
        if (n.distance < radius) out.push_back(n.index);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Neighbor> NodeSet::nearest(Point p, std::size_t k, std::optional<std::size_t> exclude) const
{
    const std::size_t available = points_.size() - (exclude && *exclude < points_.size() ? 1 : 0);
    k = std::min(k, available);
    if (k == 0) return {};
    // Every node lies within this distance of p.
    const double reach = std::max({distance(p, lo_), distance(p, hi_), distance(p, {lo_.x, hi_.y}),
                                   distance(p, {hi_.x, lo_.y})});
    double radius = cell_;
    std::vector<Neighbor> found;
    while (true) {
        found = within_closed(p, radius, exclude);
        if (found.size() >= k || radius > reach) break;
        radius *= 2.0;
    }
    std::sort(found.begin(), found.end(), by_distance_then_index);
    found.resize(k);
    return found;
}

std::vector<double> compute_radii(const NodeSet& nodes, int n)
{
    const std::size_t count = nodes.size();
    if (count < 2) throw ArgumentError("compute_radii: need at least 2 nodes");
    if (n < 1) throw ArgumentError("compute_radii: neighbor count must be >= 1");
    std::vector<double> radii(count);
    const auto wanted = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < count; ++i) {
        if (wanted >= count - 1) {
            double farthest = 0.0;
            for (std::size_t k = 0; k < count; ++k) farthest = std::max(farthest, distance(nodes[i], nodes[k]));
            radii[i] = 1.1 * farthest;
        } else {
            radii[i] = nodes.nearest(nodes[i], wanted + 1, i).back().distance;
        }
    }
    return radii;
}

// ---------------------------------------------------------------------------
// LocalSupport

LocalSupport::LocalSupport(const NodeSet& nodes, double mu, std::vector<double> radii)
    : mu_(mu), radii_(std::move(radii))
{
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ArgumentError("Shepard exponent mu must be positive");
    if (radii_.size() != nodes.size()) throw ArgumentError("one radius per node required");
    Point lo = nodes[0], hi = nodes[0];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double r = radii_[i];
        if (!(r > 0.0) || !std::isfinite(r)) throw ArgumentError("radii of influence must be positive");
        lo = {std::min(lo.x, nodes[i].x - r), std::min(lo.y, nodes[i].y - r)};
        hi = {std::max(hi.x, nodes[i].x + r), std::max(hi.y, nodes[i].y + r)};
    }
    // Cells no smaller than the node grid's, nor than the typical disk.
    std::vector<double> sorted(radii_);
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double cell = std::max(nodes.cell_size(), sorted[sorted.size() / 2]);
    disks_ = CellGrid(lo, hi, cell);

    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Point c = nodes[k];
        const double r = radii_[k];
        std::size_t i0, i1, j0, j1;
        disks_.cell_range({c.x - r, c.y - r}, {c.x + r, c.y + r}, i0, i1, j0, j1);
        for (std::size_t j = j0; j <= j1; ++j) {
            for (std::size_t i = i0; i <= i1; ++i) entries.emplace_back(j * disks_.nx() + i, k);
        }
    }
    disks_.assign(entries);
}

std::span<const std::size_t> LocalSupport::candidates(Point p) const
{
    if (!disks_.contains(p)) return {};
    const std::size_t c = disks_.cell_of(p);
    return disks_.items(c % disks_.nx(), c / disks_.nx());
}

double raw_weight(Point p, std::size_t i, const NodeSet& nodes, const LocalSupport& s)
{
    const double d = distance(p, nodes[i]);
    const double r = s.radius(i);
    if (d >= r) return 0.0;
    return std::pow((r - d) / (r * d), s.mu());
}

bool basis_into(Point p, const NodeSet& nodes, const LocalSupport& s, std::vector<BasisEntry>& out)
{
    out.clear();
    double total = 0.0;
    for (std::size_t k : s.candidates(p)) {
        const double d = distance(p, nodes[k]);
        const double r = s.radius(k);
        if (d >= r) continue;
        if (d < kCardinalTolerance * r) {
            out.assign(1, {k, 1.0});
            return true;
        }
        const double w = std::pow((r - d) / (r * d), s.mu());
        out.push_back({k, w});
        total += w;
    }
    if (out.empty()) return false;
    for (auto& e : out) e.weight /= total;
    return true;
}

std::vector<BasisEntry> basis(Point p, const NodeSet& nodes, const LocalSupport& s)
{
    std::vector<BasisEntry> out;
    if (!basis_into(p, nodes, s, out)) throw CoverageError(p);
    return out;
}

double classic_shepard_eval(Point p, const NodeSet& nodes, std::span<const double> values, double mu)
{
    if (values.size() != nodes.size()) throw ArgumentError("classic_shepard_eval: one value per node required");
    if (!(mu > 0.0)) throw ArgumentError("classic_shepard_eval: mu must be positive");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double d = distance(p, nodes[i]);
        if (d == 0.0) return values[i];
        const double w = std::pow(d, -mu);
        num += w * (values[i] - *lo);
        den += w;
    }
    // A convex combination; clamp away the last-ulp rounding.
    return std::clamp(*lo + num / den, *lo, *hi);
}

} // namespace bshep
