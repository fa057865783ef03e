#pragma once

#include <optional>

#include "irrhodge/laurent.hpp"

namespace irrhodge {

/// Convex hull of a finite lattice set; vertices are exactly the extreme
/// points (ccw order in rank 2).
struct NewtonPolytope {
  int rank = 0;
  std::vector<LatticePoint> vertices;

  int dim() const;
};

NewtonPolytope newton_polytope(const LaurentPolynomial& f);

NewtonPolytope convex_hull(int rank, std::vector<LatticePoint> pts);

/// Half-plane description: pairs (n, b) meaning <n, x> <= b.
std::vector<std::pair<LatticePoint, Rat>> h_description(const NewtonPolytope& p);

/// min { lambda >= 0 : u in lambda * p }; nullopt = infinite.
std::optional<Rat> gauge(const NewtonPolytope& p, const LatticePoint& u);

/// A face of the polytope, given by its support points of the defining set.
struct PolyFace {
  int dim = 0;                       // 0, 1, or 2
  std::vector<LatticePoint> span;    // vertices of the face
  bool relint_contains_origin = false;
};

std::vector<PolyFace> polytope_faces(const NewtonPolytope& p);

/// Standard face criterion: true iff every face whose relative interior
/// misses the origin has a face subpolynomial without torus critical points.
/// Rank 2 edges reduce to a univariate multiple-root test; the 2-dimensional
/// face uses resultants and may throw if undecidable after shears.
bool face_nondegenerate(const LaurentPolynomial& f);

}  // namespace irrhodge
