#include "bshep/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bshep/errors.hpp"

namespace bshep {

TriangleAssignment select_triangle(std::size_t i, const NodeSet& nodes, double radius)
{
    const Point vi = nodes[i];
    std::vector<Neighbor> ring;
    for (std::size_t k : nodes.within(vi, radius)) {
        if (k != i) ring.push_back({k, distance(vi, nodes[k])});
    }
    if (ring.size() < 2) throw AssociationError(i, "fewer than two neighbors inside the search disk");
    std::sort(ring.begin(), ring.end(), [](const Neighbor& a, const Neighbor& b) {
        return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
    });

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_a = 0, best_b = 0;
    for (std::size_t a = 0; a + 1 < ring.size(); ++a) {
        for (std::size_t b = a + 1; b < ring.size(); ++b) {
            const double q = quality({vi, nodes[ring[a].index], nodes[ring[b].index]});
            if (q < best * (1.0 - kQualityTieTolerance)) {
                best = q;
                best_a = ring[a].index;
                best_b = ring[b].index;
            }
        }
    }
    if (!std::isfinite(best)) throw AssociationError(i, "all candidate triangles are degenerate");

    TriangleAssignment t;
    t.node = i;
    t.others = std::minmax(best_a, best_b);
    const Triangle tri = t.triangle(nodes);
    t.r = longest_side(tri);
    t.s = 1.0 / std::abs(signed_area(tri));
    t.quality = best;
    t.search_radius = radius;
    return t;
}

TriangleAssignment select_triangle(std::size_t i, const NodeSet& nodes, const LocalSupport& s)
{
    return select_triangle(i, nodes, s.radius(i));
}

std::vector<TriangleAssignment> assign_all(const NodeSet& nodes, const LocalSupport& s)
{
    if (nodes.size() < 3) throw ArgumentError("triangle association needs at least 3 nodes");
    constexpr int kMaxDoublings = 5;
    std::vector<TriangleAssignment> out;
    out.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double radius = s.radius(i);
        for (int attempt = 0;; ++attempt) {
            try {
                auto t = select_triangle(i, nodes, radius);
                t.enlarged = attempt > 0;
                out.push_back(t);
                break;
            } catch (const AssociationError&) {
                if (attempt == kMaxDoublings) throw;
                radius *= 2.0;
            }
        }
    }
    return out;
}

} // namespace bshep
