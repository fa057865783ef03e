#pragma once

#include "irrhodge/fan.hpp"

namespace irrhodge {

/// Torus-invariant divisor: ray index -> coefficient (absent = 0).
struct ToricDivisor {
  std::map<int, Rat> coeffs;

  Rat at(int ray) const {
    auto it = coeffs.find(ray);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void set(int ray, const Rat& v) {
    if (v == 0)
      coeffs.erase(ray);
    else
      coeffs[ray] = v;
  }
  bool is_integral() const {
    for (auto& [r, v] : coeffs)
      if (!is_integer(v)) return false;
    return true;
  }
  bool is_zero() const { return coeffs.empty(); }
  ToricDivisor operator+(const ToricDivisor& o) const {
    ToricDivisor d = *this;
    for (auto& [r, v] : o.coeffs) d.set(r, d.at(r) + v);
    return d;
  }
};

/// Vanishing orders: coefficient at ray v is min_{m in supp f} <m, v>.
/// Poles are negative.
ToricDivisor divisor_of_function(const Fan& fan, const LaurentPolynomial& f);

/// P = componentwise max(0, -ord).
ToricDivisor pole_divisor(const Fan& fan, const LaurentPolynomial& f);

/// Componentwise floor(mu * D). The "+"-variant (zero sheaf for mu < 0) is
/// handled by callers.
ToricDivisor floor_divisor(const Rat& mu, const ToricDivisor& d);

/// lcm of the nonzero multiplicities of an effective integral divisor (1 if none).
int64_t multiplicity_lcm(const ToricDivisor& d);

}  // namespace irrhodge
