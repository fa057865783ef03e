#pragma once

#include <map>
#include <string>

#include "irrhodge/polytope.hpp"

namespace irrhodge {

/// Complete fan of rank 1 or 2. Rays are primitive; in rank 2 they are kept
/// in ccw order and the maximal cones are the consecutive pairs.
struct Fan {
  int rank = 1;
  std::vector<LatticePoint> rays;

  static Fan from_rays(int rank, std::vector<LatticePoint> rays);

  int num_rays() const { return (int)rays.size(); }
  int ray_index(const LatticePoint& v) const;

  int num_max_cones() const { return rank == 1 ? num_rays() : num_rays(); }
  /// Ray indices of maximal cone c (rank 1: {c}; rank 2: {c, c+1 mod n}).
  std::vector<int> cone_rays(int c) const;
  /// Maximal cone spanned by the two rays, or -1.
  int cone_of_rays(int r1, int r2) const;

  bool is_smooth() const;
  bool is_complete() const;
};

/// Local coordinates of a maximal cone and monomial transitions to neighbours.
struct Chart {
  int cone = 0;
  std::vector<std::string> coord_names;
  std::vector<LatticePoint> dual_basis;  // row i pairs to 1 with ray i of the cone
  std::map<int, std::vector<LatticePoint>> transitions;
};

std::vector<Chart> fan_charts(const Fan& fan);

/// Complete smooth fan refining the normal fan of delta, containing the
/// coordinate rays and extra_rays. Rank 2 cones are smoothed by the
/// continued-fraction chain insertion.
Fan smooth_compatible_fan(const NewtonPolytope& delta,
                          const std::vector<LatticePoint>& extra_rays);

/// Insert the primitive sum of the cone's rays (blowup at its fixed point).
/// Returns the new fan and the inserted ray.
std::pair<Fan, LatticePoint> stellar_subdivide(const Fan& fan, int cone);

/// Rays strictly inside cone(v, w) making every consecutive pair unimodular.
std::vector<LatticePoint> unimodular_chain(const LatticePoint& v, const LatticePoint& w);

}  // namespace irrhodge
