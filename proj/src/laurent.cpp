#include "irrhodge/laurent.hpp"

#include <sstream>

namespace irrhodge {

void LaurentPolynomial::add_term(const LatticePoint& e, const Rat& c) {
  if ((int)e.size() != rank_) throw Error("laurent term rank mismatch");
  if (c == 0) return;
  Rat& v = terms_[e];
  v += c;
  if (v == 0) terms_.erase(e);
}

Rat LaurentPolynomial::coeff(const LatticePoint& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r(rank_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& c) const {
  LaurentPolynomial r(rank_);
  if (c == 0) return r;
  for (auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

int64_t LaurentPolynomial::max_support_abs() const {
  int64_t m = 0;
  for (auto& [e, c] : terms_)
    for (auto x : e) m = std::max(m, x < 0 ? -x : x);
  return m;
}

LaurentPolynomial LaurentPolynomial::log_derivative(int axis) const {
  LaurentPolynomial r(rank_);
  for (auto& [e, c] : terms_) r.add_term(e, c * Rat((long)e[axis]));
  return r;
}

LaurentPolynomial LaurentPolynomial::monomial_substitution(
    const std::vector<LatticePoint>& a_cols) const {
  if ((int)a_cols.size() != rank_) throw Error("substitution shape mismatch");
  int new_rank = a_cols.empty() ? 0 : (int)a_cols[0].size();
  LaurentPolynomial r(new_rank);
  for (auto& [e, c] : terms_) {
    LatticePoint img(new_rank, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < new_rank; ++j) img[j] += e[i] * a_cols[i][j];
    r.add_term(img, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::embedded(int new_rank, int offset) const {
  LaurentPolynomial r(new_rank);
  for (auto& [e, c] : terms_) {
    LatticePoint img(new_rank, 0);
    for (int i = 0; i < rank_; ++i) img[offset + i] = e[i];
    r.add_term(img, c);
  }
  return r;
}

std::string LaurentPolynomial::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < rank_; ++i)
      if (e[i] != 0) os << "*" << var_names[i] << "^" << e[i];
  }
  return os.str();
}

}  // namespace irrhodge
