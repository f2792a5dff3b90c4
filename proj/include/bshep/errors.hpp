#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bshep/geometry.hpp"

namespace bshep {

/// Invalid argument or configuration (CLI exit code 2).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures that arise while building or evaluating an
/// interpolant from otherwise valid input (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GeometryError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// No support disk covers the query point.
class CoverageError : public NumericalError {
public:
    explicit CoverageError(Point p);
    Point point() const noexcept { return point_; }

private:
    Point point_;
};

/// A node could not be associated with a non-degenerate triangle.
class AssociationError : public NumericalError {
public:
    AssociationError(std::size_t node, const std::string& what);
    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

/// Weighted least-squares derivative estimation failed at a node.
class FitError : public NumericalError {
public:
    FitError(std::size_t node, const std::string& what);
    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

} // namespace bshep
