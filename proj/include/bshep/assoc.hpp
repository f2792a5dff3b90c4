#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bshep/shepard.hpp"

namespace bshep {

/// Triangle attached to a node: the node itself plus two companions.
struct TriangleAssignment {
    std::size_t node = 0;
    std::pair<std::size_t, std::size_t> others; // first < second
    double r = 0.0;       // longest side
    double s = 0.0;       // 1 / |signed area|
    double quality = 0.0; // r^3 s
    double search_radius = 0.0;
    bool enlarged = false; // search radius exceeded the radius of influence

    Triangle triangle(const NodeSet& nodes) const
    {
        return {nodes[node], nodes[others.first], nodes[others.second]};
    }
};

/// Relative quality window inside which candidates count as tied; the
/// earlier pair in the enumeration wins.
inline constexpr double kQualityTieTolerance = 1e-12;

/// Best triangle with a vertex at node i and the other two among the nodes
/// strictly inside the disk of the given radius. Neighbors are enumerated by
/// (distance, index); pairs (a, b) with a before b. Throws AssociationError.
TriangleAssignment select_triangle(std::size_t i, const NodeSet& nodes, double radius);

/// select_triangle with the node's radius of influence.
TriangleAssignment select_triangle(std::size_t i, const NodeSet& nodes, const LocalSupport& s);

/// One assignment per node. A node whose disk holds no usable pair is
/// retried with the search radius doubled, up to five times.
std::vector<TriangleAssignment> assign_all(const NodeSet& nodes, const LocalSupport& s);

} // namespace bshep
