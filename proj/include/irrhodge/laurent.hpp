#pragma once

#include <map>
#include <string>

#include "irrhodge/lattice.hpp"

namespace irrhodge {

/// Laurent polynomial with exact rational coefficients; no zero terms stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const LatticePoint& e, const Rat& c);
  Rat coeff(const LatticePoint& e) const;
  const std::map<LatticePoint, Rat>& terms() const { return terms_; }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial scaled(const Rat& c) const;

  /// Is the support a single exponent (or empty)?
  bool is_monomial() const { return terms_.size() <= 1; }

  /// max over support of |e_i| (0 for the zero polynomial).
  int64_t max_support_abs() const;

  /// x_i * d/dx_i, the logarithmic partial derivative.
  LaurentPolynomial log_derivative(int axis) const;

  /// Substitute x^e -> x^(A e) for an integer matrix A (rows of A = images).
  LaurentPolynomial monomial_substitution(const std::vector<LatticePoint>& a_cols) const;

  /// Embed into a larger rank, placing variable i at position offset+i.
  LaurentPolynomial embedded(int new_rank, int offset) const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  int rank_ = 0;
  std::map<LatticePoint, Rat> terms_;
};

inline LaurentPolynomial laurent_monomial(int rank, const LatticePoint& e, const Rat& c) {
  LaurentPolynomial f(rank);
  f.add_term(e, c);
  return f;
}

}  // namespace irrhodge
