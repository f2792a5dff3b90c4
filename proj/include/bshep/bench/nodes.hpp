#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "bshep/shepard.hpp"

namespace bshep::bench {

enum class NodeKind { uniform_random, grid, clustered };

std::string to_string(NodeKind kind);
NodeKind parse_node_kind(const std::string& s);

/// Deterministic node sets in [0,1]^2.
///  - uniform_random: i.i.d. uniform points, repeats redrawn;
///  - grid: ceil(sqrt(n)) x ceil(sqrt(n)) lattice including the corners,
///    row by row from y = 0, truncated to n points;
///  - clustered: five Gaussian blobs, points outside the square redrawn.
NodeSet generate_nodes(NodeKind kind, std::size_t n, std::uint64_t seed);

} // namespace bshep::bench
