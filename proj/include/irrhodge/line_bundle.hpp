#pragma once

#include "irrhodge/divisor.hpp"

namespace irrhodge {

/// Exact h^i(X, O(D)) on the complete fan, computed character by character:
/// a character contributes through the reduced cohomology of the subcomplex
/// of rays where its section condition fails.
std::vector<int> line_bundle_cohomology(const Fan& fan, const ToricDivisor& d);

/// Characters spanning H^0(X, O(D)).
std::vector<LatticePoint> line_bundle_sections(const Fan& fan, const ToricDivisor& d);

}  // namespace irrhodge
