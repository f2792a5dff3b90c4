#pragma once

#include <array>
#include <cmath>

namespace bshep {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

inline double norm(Point v) { return std::hypot(v.x, v.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Triangle {
    Point v1, v2, v3;
};

/// Relative tolerance on |det| / r^2 below which a triangle is degenerate.
inline constexpr double kDegeneracyTolerance = 1e-12;

/// Determinant of [[1,1,1],[x1,x2,x3],[y1,y2,y3]]: twice the geometric
/// signed area, positive for counter-clockwise vertices.
double signed_area(const Triangle& t);

double longest_side(const Triangle& t);

bool is_degenerate(const Triangle& t);

struct Barycentric {
    double l1, l2, l3;
};

/// Throws GeometryError on degenerate triangles.
Barycentric barycentric(Point p, const Triangle& t);

/// Shape-and-size functional r^3 * S with S = 1/|signed_area|; +inf for
/// degenerate triangles. r^2 * S depends on shape only.
double quality(const Triangle& t);

/// Barycentric coordinates as affine functions of the point, for repeated
/// evaluation against the same triangle.
class BarycentricMap {
public:
    explicit BarycentricMap(const Triangle& t);

    Barycentric operator()(Point p) const
    {
        const Point d = p - origin_;
        const double l2 = g2_[0] * d.x + g2_[1] * d.y;
        const double l3 = g3_[0] * d.x + g3_[1] * d.y;
        return {1.0 - l2 - l3, l2, l3};
    }

private:
    Point origin_;
    std::array<double, 2> g2_, g3_;
};

} // namespace bshep
