#include "irrhodge/polytope.hpp"

#include <algorithm>

#include "irrhodge/poly1.hpp"

namespace irrhodge {

int NewtonPolytope::dim() const {
  if (vertices.empty()) return -1;
  if (vertices.size() == 1) return 0;
  if (rank == 1 || vertices.size() == 2) return 1;
  return 2;
}

NewtonPolytope convex_hull(int rank, std::vector<LatticePoint> pts) {
  NewtonPolytope p;
  p.rank = rank;
  if (pts.empty()) return p;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (rank == 1) {
    p.vertices.push_back(pts.front());
    if (pts.back() != pts.front()) p.vertices.push_back(pts.back());
    return p;
  }
  if (rank != 2) throw Error("convex_hull: rank > 2 unsupported");
  if (pts.size() == 1) {
    p.vertices = pts;
    return p;
  }
  // Andrew monotone chain; vertices end up in ccw order.
  auto build = [&](bool lower) {
    std::vector<LatticePoint> h;
    for (size_t k = 0; k < pts.size(); ++k) {
      const LatticePoint& q = lower ? pts[k] : pts[pts.size() - 1 - k];
      while (h.size() >= 2 && cross(sub(h.back(), h[h.size() - 2]), sub(q, h[h.size() - 2])) <= 0)
        h.pop_back();
      h.push_back(q);
    }
    return h;
  };
  auto lo = build(true), hi = build(false);
  lo.pop_back();
  hi.pop_back();
  p.vertices = lo;
  p.vertices.insert(p.vertices.end(), hi.begin(), hi.end());
  if (p.vertices.empty()) p.vertices.push_back(pts.front());  // all collinear-equal
  // Collinear input collapses to a segment.
  if (p.vertices.size() >= 3) {
    bool collinear = true;
    for (size_t i = 2; i < p.vertices.size(); ++i)
      if (cross(sub(p.vertices[1], p.vertices[0]), sub(p.vertices[i], p.vertices[0])) != 0)
        collinear = false;
    if (collinear) p.vertices = {pts.front(), pts.back()};
  }
  return p;
}

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error("newton_polytope of the zero polynomial");
  std::vector<LatticePoint> pts;
  for (auto& [e, c] : f.terms()) pts.push_back(e);
  return convex_hull(f.rank(), std::move(pts));
}

std::vector<std::pair<LatticePoint, Rat>> h_description(const NewtonPolytope& p) {
  std::vector<std::pair<LatticePoint, Rat>> hs;
  auto add_eq = [&](const LatticePoint& n, int64_t b) {
    hs.push_back({n, Rat((long)b)});
    hs.push_back({neg(n), Rat((long)-b)});
  };
  if (p.rank == 1) {
    int64_t lo = p.vertices.front()[0], hi = p.vertices.back()[0];
    hs.push_back({{1}, Rat((long)hi)});
    hs.push_back({{-1}, Rat((long)-lo)});
    return hs;
  }
  if (p.vertices.size() == 1) {
    add_eq({1, 0}, p.vertices[0][0]);
    add_eq({0, 1}, p.vertices[0][1]);
    return hs;
  }
  if (p.vertices.size() == 2) {
    LatticePoint d = primitive(sub(p.vertices[1], p.vertices[0]));
    LatticePoint perp{d[1], -d[0]};
    add_eq(perp, dot(perp, p.vertices[0]));
    int64_t a = dot(d, p.vertices[0]), b = dot(d, p.vertices[1]);
    hs.push_back({d, Rat((long)std::max(a, b))});
    hs.push_back({neg(d), Rat((long)-std::min(a, b))});
    return hs;
  }
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    const LatticePoint& a = p.vertices[i];
    const LatticePoint& b = p.vertices[(i + 1) % p.vertices.size()];
    LatticePoint d = sub(b, a);
    LatticePoint n = primitive(LatticePoint{d[1], -d[0]});  // outward for ccw
    hs.push_back({n, Rat((long)dot(n, a))});
  }
  return hs;
}

std::optional<Rat> gauge(const NewtonPolytope& p, const LatticePoint& u) {
  if ((int)u.size() != p.rank) throw Error("gauge: rank mismatch");
  if (is_zero(u)) return Rat(0);
  Rat lo(0);
  std::optional<Rat> hi;
  for (auto& [n, b] : h_description(p)) {
    Rat nu((long)dot(n, u));
    if (b > 0) {
      Rat bound = nu / b;
      if (bound > lo) lo = bound;
    } else if (b == 0) {
      if (nu > 0) return std::nullopt;
    } else {
      Rat bound = nu / b;
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (hi && *hi < lo) return std::nullopt;
  return lo;
}

std::vector<PolyFace> polytope_faces(const NewtonPolytope& p) {
  std::vector<PolyFace> faces;
  auto vertex_face = [&](const LatticePoint& v) {
    PolyFace f;
    f.dim = 0;
    f.span = {v};
    f.relint_contains_origin = is_zero(v);
    faces.push_back(f);
  };
  auto edge_face = [&](const LatticePoint& a, const LatticePoint& b) {
    PolyFace f;
    f.dim = 1;
    f.span = {a, b};
    // 0 strictly between a and b
    bool collin = p.rank == 1 || cross(a, b) == 0;
    f.relint_contains_origin = collin && dot(a, b) < 0;
    faces.push_back(f);
  };
  for (auto& v : p.vertices) vertex_face(v);
  if (p.vertices.size() == 2) {
    edge_face(p.vertices[0], p.vertices[1]);
  } else if (p.vertices.size() > 2) {
    for (size_t i = 0; i < p.vertices.size(); ++i)
      edge_face(p.vertices[i], p.vertices[(i + 1) % p.vertices.size()]);
    PolyFace top;
    top.dim = 2;
    top.span = p.vertices;
    top.relint_contains_origin = true;
    for (auto& [n, b] : h_description(p))
      if (!(b > 0)) top.relint_contains_origin = false;
    faces.push_back(top);
  }
  return faces;
}

namespace {

bool on_segment(const LatticePoint& x, const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d = sub(b, a), r = sub(x, a);
  if (d.size() == 2 && cross(d, r) != 0) return false;
  int64_t t = dot(r, d);
  return t >= 0 && t <= dot(d, d);
}

// Face subpolynomial along an edge, written in the edge parameter:
// terms a = a0 + k d  ->  coefficient of s^k.
Poly1 edge_poly(const LaurentPolynomial& f, const LatticePoint& a0, const LatticePoint& d,
                const LatticePoint& a, const LatticePoint& b) {
  std::map<int, Rat> coef;
  for (auto& [e, c] : f.terms()) {
    if (!on_segment(e, a, b)) continue;
    LatticePoint r = sub(e, a0);
    int64_t k = dot(r, d) / dot(d, d);
    coef[(int)k] = c;
  }
  std::vector<Rat> v(coef.empty() ? 0 : coef.rbegin()->first + 1, Rat(0));
  for (auto& [k, c] : coef) v[k] = c;
  return Poly1(std::move(v));
}

// True iff the edge subpolynomial has a torus critical point.
bool edge_degenerate(const LaurentPolynomial& f, const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d = primitive(sub(b, a));
  const LatticePoint& a0 = a;
  Poly1 g = edge_poly(f, a0, d, a, b);
  bool parallel = f.rank() == 1 || cross(a0, d) == 0;
  if (!parallel) {
    // need common nonzero root of G and sG', i.e. a multiple root in C^*
    return has_multiple_nonzero_root(g);
  }
  // a0 = c d with integral c; criterion: cG + sG' has a nonzero root
  int64_t c = 0;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) c = a0[i] / d[i];
  Poly1 sgp = g.derivative();
  std::vector<Rat> shifted(sgp.coeffs().size() + 1, Rat(0));
  for (int i = 0; i <= sgp.deg(); ++i) shifted[i + 1] = sgp.coeff(i);
  Poly1 p = Poly1(std::move(shifted)) + g.scaled(Rat((long)c));
  return has_nonzero_root(p);
}

// Laurent polynomial in 2 vars as a polynomial in y with Q[x] coefficients,
// after shifting exponents to be non-negative.
std::vector<Poly1> as_poly_in_y(const LaurentPolynomial& g) {
  int64_t minx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (auto& [e, c] : g.terms()) {
    if (first) {
      minx = e[0];
      miny = maxy = e[1];
      first = false;
    }
    minx = std::min(minx, e[0]);
    miny = std::min(miny, e[1]);
    maxy = std::max(maxy, e[1]);
  }
  std::vector<Poly1> out(g.is_zero() ? 0 : maxy - miny + 1);
  for (auto& [e, c] : g.terms()) {
    Poly1& p = out[e[1] - miny];
    std::vector<Rat> v(p.coeffs());
    if ((int64_t)v.size() <= e[0] - minx) v.resize(e[0] - minx + 1, Rat(0));
    v[e[0] - minx] = c;
    p = Poly1(std::move(v));
  }
  return out;
}

Poly1 resultant_y(const LaurentPolynomial& g1, const LaurentPolynomial& g2) {
  auto p = as_poly_in_y(g1), q = as_poly_in_y(g2);
  int m = (int)p.size() - 1, n = (int)q.size() - 1;
  if (m < 0 || n < 0) return Poly1();
  if (m == 0 && n == 0) return Poly1::monomial(0, Rat(1));
  std::vector<std::vector<Poly1>> s(m + n, std::vector<Poly1>(m + n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = p[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = q[n - j];
  return poly_matrix_det(std::move(s));
}

Poly1 y_free_part(const LaurentPolynomial& g) {
  // g(x, 0) after the exponent shift used by as_poly_in_y
  auto p = as_poly_in_y(g);
  return p.empty() ? Poly1() : p[0];
}

// Does the 2-variable Laurent system x@x(fs) = y@y(fs) = 0 have a torus
// solution? Exact; tries shears (x, y) -> (x, y x^k) and both variable
// orders, then gives up.
bool top_face_degenerate(const LaurentPolynomial& fs) {
  LaurentPolynomial g1 = fs.log_derivative(0), g2 = fs.log_derivative(1);
  if (g1.is_zero() && g2.is_zero()) return !fs.is_zero();
  auto monomialish = [](const LaurentPolynomial& g) { return g.term_count() <= 1; };
  if (g1.is_zero()) return !monomialish(g2);
  if (g2.is_zero()) return !monomialish(g1);

  auto spread = [](const LaurentPolynomial& g, int axis) {
    int64_t lo = 0, hi = 0;
    bool first = true;
    for (auto& [e, c] : g.terms()) {
      if (first) lo = hi = e[axis], first = false;
      lo = std::min(lo, e[axis]);
      hi = std::max(hi, e[axis]);
    }
    return hi - lo;
  };
  for (int axis = 0; axis < 2; ++axis) {
    if (spread(g1, axis) == 0 && spread(g2, axis) == 0) {
      // both free of one variable: common torus zero iff the two univariate
      // parts share a nonzero root
      auto uni = [&](const LaurentPolynomial& g) {
        auto swapped = g.monomial_substitution({{0, 1}, {1, 0}});
        auto p = axis == 1 ? as_poly_in_y(g) : as_poly_in_y(swapped);
        return p.empty() ? Poly1() : p[0];
      };
      Poly1 g = poly_gcd(uni(g1), uni(g2));
      return has_nonzero_root(g);
    }
  }

  for (int swap = 0; swap < 2; ++swap) {
    for (int64_t k = 0; k <= 4; ++k) {
      std::vector<LatticePoint> shear = swap ? std::vector<LatticePoint>{{1, 0}, {k, 1}}
                                             : std::vector<LatticePoint>{{1, k}, {0, 1}};
      LaurentPolynomial h1 = g1.monomial_substitution(shear);
      LaurentPolynomial h2 = g2.monomial_substitution(shear);
      // leading y-coefficients must be monomials in x for Res_y to certify
      auto py = as_poly_in_y(h1), qy = as_poly_in_y(h2);
      auto lead_monomial = [](const std::vector<Poly1>& p) {
        return !p.empty() && p.back().strip_valuation().deg() == 0;
      };
      if (!lead_monomial(py) || !lead_monomial(qy)) continue;
      Poly1 r = resultant_y(h1, h2).strip_valuation();
      if (r.is_zero()) continue;  // unexpected; try another shear
      if (r.deg() == 0) return false;
      Poly1 h0 = poly_gcd(y_free_part(h1), y_free_part(h2)).strip_valuation();
      if (h0.deg() <= 0) return true;
      // strip roots shared with the y=0 locus
      Poly1 rr = r;
      for (;;) {
        Poly1 g = poly_gcd(rr, h0);
        if (g.deg() <= 0) break;
        rr = rr.div_exact(g);
      }
      if (rr.deg() >= 1) return true;
      // all x-candidates sit on y=0; undecided, try next shear
    }
  }
  throw Error("face_nondegenerate: 2-dimensional face undecided");
}

}  // namespace

bool face_nondegenerate(const LaurentPolynomial& f) {
  if (f.rank() > 2) throw Error("face_nondegenerate: rank > 2 unsupported");
  if (f.is_zero()) return true;
  NewtonPolytope np = newton_polytope(f);
  for (auto& face : polytope_faces(np)) {
    if (face.relint_contains_origin) continue;
    if (face.dim == 0) continue;  // a monomial face x^a, a != 0: no torus critical point
    if (face.dim == 1) {
      if (edge_degenerate(f, face.span[0], face.span[1])) return false;
    } else {
      LaurentPolynomial fs = f;  // the top face carries every term
      if (top_face_degenerate(fs)) return false;
    }
  }
  return true;
}

}  // namespace irrhodge
