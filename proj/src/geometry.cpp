#include "bshep/geometry.hpp"

#include <algorithm>
#include <limits>

#include "bshep/errors.hpp"

namespace bshep {

double signed_area(const Triangle& t)
{
    return (t.v2.x - t.v1.x) * (t.v3.y - t.v1.y) - (t.v3.x - t.v1.x) * (t.v2.y - t.v1.y);
}

double longest_side(const Triangle& t)
{
    return std::max({distance(t.v1, t.v2), distance(t.v1, t.v3), distance(t.v2, t.v3)});
}

bool is_degenerate(const Triangle& t)
{
    const double r = longest_side(t);
    return std::abs(signed_area(t)) <= kDegeneracyTolerance * r * r;
}

Barycentric barycentric(Point p, const Triangle& t)
{
    if (is_degenerate(t)) throw GeometryError("barycentric: degenerate triangle");
    const double a = signed_area(t);
    const double l1 = signed_area({p, t.v2, t.v3}) / a;
    const double l2 = signed_area({t.v1, p, t.v3}) / a;
    const double l3 = signed_area({t.v1, t.v2, p}) / a;
    return {l1, l2, l3};
}

double quality(const Triangle& t)
{
    if (is_degenerate(t)) return std::numeric_limits<double>::infinity();
    const double r = longest_side(t);
    return r * r * r / std::abs(signed_area(t));
}

BarycentricMap::BarycentricMap(const Triangle& t) : origin_(t.v1)
{
    if (is_degenerate(t)) throw GeometryError("barycentric: degenerate triangle");
    const double a = signed_area(t);
    const Point e2 = t.v2 - t.v1;
    const Point e3 = t.v3 - t.v1;
    // p - v1 = l2 * e2 + l3 * e3, solved by Cramer's rule
    g2_ = {e3.y / a, -e3.x / a};
    g3_ = {-e2.y / a, e2.x / a};
}

} // namespace bshep
