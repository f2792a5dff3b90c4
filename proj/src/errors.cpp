#include "bshep/errors.hpp"

#include <sstream>

namespace bshep {

namespace {

std::string describe(Point p)
{
    std::ostringstream os;
    os.precision(17);
    os << "no support disk covers (" << p.x << ", " << p.y << ")";
    return os.str();
}

} // namespace

CoverageError::CoverageError(Point p) : NumericalError(describe(p)), point_(p) {}

AssociationError::AssociationError(std::size_t node, const std::string& what)
    : NumericalError("node " + std::to_string(node) + ": " + what), node_(node)
{
}

FitError::FitError(std::size_t node, const std::string& what)
    : NumericalError("node " + std::to_string(node) + ": " + what), node_(node)
{
}

} // namespace bshep
