#pragma once

#include <vector>

#include "irrhodge/rational.hpp"

namespace irrhodge {

/// Dense univariate polynomial over Q; coefficient i belongs to t^i.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

  static Poly1 monomial(int deg, const Rat& c);

  int deg() const { return (int)c_.size() - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rat(0); }

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 scaled(const Rat& s) const;
  Poly1 derivative() const;

  /// Quotient when the division is exact; throws otherwise.
  Poly1 div_exact(const Poly1& d) const;

  /// Largest v with t^v | p, and p / t^v.
  int valuation() const;
  Poly1 strip_valuation() const;

  void trim();

 private:
  std::vector<Rat> c_;
};

/// Monic gcd over Q (zero if both zero).
Poly1 poly_gcd(Poly1 a, Poly1 b);

/// Has a multiple root in C^* (i.e. gcd(p, p') has a nonzero root)?
bool has_multiple_nonzero_root(const Poly1& p);

/// Has any root in C^*?
inline bool has_nonzero_root(const Poly1& p) {
  return !p.is_zero() && p.strip_valuation().deg() >= 1;
}

/// Determinant by fraction-free Bareiss over Q[t].
Poly1 poly_matrix_det(std::vector<std::vector<Poly1>> m);

}  // namespace irrhodge
