#pragma once

#include <set>

#include "irrhodge/divisor.hpp"
#include "irrhodge/line_bundle.hpp"

namespace irrhodge {

enum class AxisKind { torus, affine };

/// The pair (U, f): U is a product of G_m / A^1 axes, f regular on U.
struct PairModel {
  std::vector<AxisKind> axes;
  LaurentPolynomial f;

  int rank() const { return (int)axes.size(); }
  void validate() const;
  /// f = f1(x1) + f2(x2) with no mixed terms (constants land in f1).
  bool decomposable(LaurentPolynomial* f1 = nullptr, LaurentPolynomial* f2 = nullptr) const;
};

/// A compactification: smooth complete fan, boundary ray selection S, and f
/// as a rational function on X.
struct ToricModel {
  Fan fan;
  std::set<int> boundary;  // ray indices of S; must contain supp(P)
  LaurentPolynomial f;
  bool elimination_certified = false;  // non-degeneracy by the all-Delta>=0 criterion

  bool in_boundary(int ray) const { return boundary.count(ray) > 0; }
  ToricDivisor pole() const { return pole_divisor(fan, f); }
  /// lcm of the pole multiplicities (1 when P = 0): the alpha grid denominator.
  int64_t alpha_denominator() const { return multiplicity_lcm(pole()); }
  int dim() const { return fan.rank; }
  void validate() const;
};

/// Compactify a pair. Curves use P^1; decomposable surfaces run the blowup
/// elimination on the product of the factor compactifications; other
/// surfaces take a fan compatible with the Newton polytope near the poles.
ToricModel build_toric_model(const PairModel& pair);

/// Blow up a torus-fixed boundary point (the cone must have a boundary ray).
ToricModel subdivide_model(const ToricModel& m, int cone);

}  // namespace irrhodge
