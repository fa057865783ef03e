#include "irrhodge/poly1.hpp"

namespace irrhodge {

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly1 Poly1::monomial(int deg, const Rat& c) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return Poly1(std::move(v));
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly1(std::move(v));
}

Poly1 Poly1::operator-(const Poly1& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Poly1(std::move(v));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly1(std::move(v));
}

Poly1 Poly1::scaled(const Rat& s) const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= s;
  return Poly1(std::move(v));
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return Poly1();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat((long)i);
  return Poly1(std::move(v));
}

Poly1 Poly1::div_exact(const Poly1& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  if (is_zero()) return Poly1();
  if (deg() < d.deg()) throw Error("inexact polynomial division");
  std::vector<Rat> rem(c_);
  std::vector<Rat> q(deg() - d.deg() + 1, Rat(0));
  for (int i = deg(); i >= d.deg(); --i) {
    Rat f = rem[i] / d.c_.back();
    q[i - d.deg()] = f;
    if (f == 0) continue;
    for (int j = 0; j <= d.deg(); ++j) rem[i - d.deg() + j] -= f * d.c_[j];
  }
  for (auto& x : rem)
    if (x != 0) throw Error("inexact polynomial division");
  return Poly1(std::move(q));
}

int Poly1::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return (int)i;
  return 0;
}

Poly1 Poly1::strip_valuation() const {
  if (is_zero()) return Poly1();
  int v = valuation();
  return Poly1(std::vector<Rat>(c_.begin() + v, c_.end()));
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    // remainder of a by b, leading-normalized each round
    Poly1 r = a;
    while (!r.is_zero() && r.deg() >= b.deg()) {
      Poly1 t = Poly1::monomial(r.deg() - b.deg(), r.coeffs().back() / b.coeffs().back());
      r = r - t * b;
    }
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.coeffs().back());
}

bool has_multiple_nonzero_root(const Poly1& p) {
  if (p.is_zero()) return true;
  Poly1 g = poly_gcd(p, p.derivative());
  return has_nonzero_root(g);
}

Poly1 poly_matrix_det(std::vector<std::vector<Poly1>> m) {
  size_t n = m.size();
  if (n == 0) return Poly1::monomial(0, Rat(1));
  Poly1 prev = Poly1::monomial(0, Rat(1));
  Rat sign(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Poly1();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).div_exact(prev);
      m[i][k] = Poly1();
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1].scaled(sign);
}

}  // namespace irrhodge
