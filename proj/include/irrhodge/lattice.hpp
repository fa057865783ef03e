#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "irrhodge/rational.hpp"

namespace irrhodge {

/// Lattice point / character exponent. Length = ambient rank.
using LatticePoint = std::vector<int64_t>;

inline int64_t dot(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw Error("lattice rank mismatch");
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw Error("lattice rank mismatch");
  LatticePoint c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw Error("lattice rank mismatch");
  LatticePoint c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline LatticePoint neg(const LatticePoint& a) {
  LatticePoint c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline bool is_zero(const LatticePoint& a) {
  for (auto x : a)
    if (x) return false;
  return true;
}

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

/// v / gcd of entries; zero stays zero.
inline LatticePoint primitive(LatticePoint v) {
  int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// 2d cross product v x w.
inline int64_t cross(const LatticePoint& v, const LatticePoint& w) {
  return v[0] * w[1] - v[1] * w[0];
}

}  // namespace irrhodge
