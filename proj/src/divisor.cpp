#include "irrhodge/divisor.hpp"

namespace irrhodge {

ToricDivisor divisor_of_function(const Fan& fan, const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error("divisor_of_function: zero polynomial");
  ToricDivisor d;
  for (int r = 0; r < fan.num_rays(); ++r) {
    bool first = true;
    int64_t m = 0;
    for (auto& [e, c] : f.terms()) {
      int64_t v = dot(e, fan.rays[r]);
      if (first || v < m) m = v;
      first = false;
    }
    d.set(r, Rat((long)m));
  }
  return d;
}

ToricDivisor pole_divisor(const Fan& fan, const LaurentPolynomial& f) {
  ToricDivisor p;
  if (f.is_zero()) return p;
  ToricDivisor ord = divisor_of_function(fan, f);
  for (auto& [r, v] : ord.coeffs)
    if (v < 0) p.set(r, -v);
  return p;
}

ToricDivisor floor_divisor(const Rat& mu, const ToricDivisor& d) {
  ToricDivisor out;
  for (auto& [r, v] : d.coeffs) out.set(r, Rat(rat_floor(mu * v)));
  return out;
}

int64_t multiplicity_lcm(const ToricDivisor& d) {
  Int l = 1;
  for (auto& [r, v] : d.coeffs) {
    if (v == 0) continue;
    if (!is_integer(v) || v < 0) throw Error("multiplicity_lcm needs an effective integral divisor");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_num_mpz_t());
  }
  return to_long(l);
}

}  // namespace irrhodge
