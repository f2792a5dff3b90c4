#include "bshep/bench/nodes.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <utility>

#include "bshep/errors.hpp"

namespace bshep::bench {

namespace {

// mt19937_64 output is fully specified, unlike the standard distributions,
// so the mapping to doubles is done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

template <class Draw>
std::vector<Point> distinct(std::size_t n, Draw draw)
{
    std::vector<Point> pts;
    std::set<std::pair<double, double>> seen;
    while (pts.size() < n) {
        const Point p = draw();
        if (seen.emplace(p.x, p.y).second) pts.push_back(p);
    }
    return pts;
}

} // namespace

std::string to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::uniform_random: return "uniform-random";
    case NodeKind::grid: return "grid";
    case NodeKind::clustered: return "clustered";
    }
    return "?";
}

NodeKind parse_node_kind(const std::string& s)
{
    if (s == "uniform-random" || s == "uniform") return NodeKind::uniform_random;
    if (s == "grid") return NodeKind::grid;
    if (s == "clustered") return NodeKind::clustered;
    throw ArgumentError("unknown node kind '" + s + "' (uniform-random | grid | clustered)");
}

NodeSet generate_nodes(NodeKind kind, std::size_t n, std::uint64_t seed)
{
    if (n < 3) throw ArgumentError("node generation needs n >= 3");
    Rng rng(seed);
    switch (kind) {
    case NodeKind::uniform_random:
        return NodeSet(distinct(n, [&] {
            const double x = rng.uniform();
            return Point{x, rng.uniform()};
        }));
    case NodeKind::grid: {
        const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        std::vector<Point> pts;
        pts.reserve(n);
        for (std::size_t j = 0; j < side && pts.size() < n; ++j) {
            for (std::size_t i = 0; i < side && pts.size() < n; ++i) {
                pts.push_back({static_cast<double>(i) / static_cast<double>(side - 1),
                               static_cast<double>(j) / static_cast<double>(side - 1)});
            }
        }
        return NodeSet(std::move(pts));
    }
    case NodeKind::clustered: {
        constexpr int kBlobs = 5;
        constexpr double kSpread = 0.1;
        std::array<Point, kBlobs> centers;
        for (auto& c : centers) {
            const double x = 0.15 + 0.7 * rng.uniform();
            c = {x, 0.15 + 0.7 * rng.uniform()};
        }
        return NodeSet(distinct(n, [&] {
            while (true) {
                const auto blob = std::min<std::size_t>(kBlobs - 1, static_cast<std::size_t>(rng.uniform() * kBlobs));
                const double x = centers[blob].x + kSpread * rng.normal();
                const Point p{x, centers[blob].y + kSpread * rng.normal()};
                if (p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0) return p;
            }
        }));
    }
    }
    throw ArgumentError("unknown node kind");
}

} // namespace bshep::bench
