#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bshep/bench/nodes.hpp"
#include "bshep/interp.hpp"

namespace bshep::bench {

/// Operators compared by the benchmark.
///  sb3     - Shepard-Bernoulli, m = 3, exact derivative data up to order 2
///  st2     - Shepard-Taylor, m = 2, same data
///  bshep32 - Shepard-Bernoulli, m = 3, jets from quadratic least squares
///  bshep33 - Shepard-Bernoulli, m = 3, jets from cubic least squares
///  qshep2d - Shepard-Taylor, m = 2, jets from quadratic least squares
enum class OperatorId { sb3, st2, bshep32, bshep33, qshep2d };

std::string to_string(OperatorId op);
OperatorId parse_operator(const std::string& s);

struct BenchParams {
    int n_w = 9;
    int n_q_quadratic = 13;
    int n_q_cubic = 17;
    double mu = 2.0;
};

/// Interpolant configuration behind an operator id (nearest-node fallback on).
Config operator_config(OperatorId op, const BenchParams& params);

struct NodeSpec {
    NodeKind kind = NodeKind::uniform_random;
    std::vector<std::size_t> sizes{202, 777, 2991};
    std::uint64_t seed = 1;
};

struct ErrorReport {
    std::string op;
    int function = 0;
    std::size_t n = 0;
    int n_w = 0;
    int n_q = 0; // 0 when the operator uses exact derivatives
    std::uint64_t seed = 0;
    double max_abs = 0.0;
    double rms = 0.0;
    double runtime = 0.0; // seconds, build + grid evaluation
    std::string status = "ok";
};

/// Fit and measure the interpolant for one (operator, function) pair.
ErrorReport run_case(OperatorId op, int function, const NodeSet& nodes, std::uint64_t seed, const GridSpec& grid,
                     const BenchParams& params);

/// Every (size, function, operator) combination in that nesting order. Build
/// or evaluation failures are recorded in the row's status.
std::vector<ErrorReport> run_benchmark(const std::vector<OperatorId>& operators, const std::vector<int>& functions,
                                       const NodeSpec& nodes, const GridSpec& grid, const BenchParams& params);

} // namespace bshep::bench
