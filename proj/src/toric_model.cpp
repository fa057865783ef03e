#include "irrhodge/toric_model.hpp"

#include <algorithm>

#include "irrhodge/elimination.hpp"

namespace irrhodge {

void PairModel::validate() const {
  int n = rank();
  if (n < 1 || n > 2) throw Error("pair: rank must be 1 or 2");
  if (f.rank() != n) throw Error("pair: f rank mismatch");
  for (auto& [e, c] : f.terms())
    for (int i = 0; i < n; ++i)
      if (axes[i] == AxisKind::affine && e[i] < 0)
        throw Error("pair: f has a pole along a retained hyperplane");
}

bool PairModel::decomposable(LaurentPolynomial* f1, LaurentPolynomial* f2) const {
  if (rank() != 2) return false;
  LaurentPolynomial g1(1), g2(1);
  for (auto& [e, c] : f.terms()) {
    if (e[0] != 0 && e[1] != 0) return false;
    if (e[1] == 0)
      g1.add_term({e[0]}, c);  // constants land here
    else
      g2.add_term({e[1]}, c);
  }
  if (f1) *f1 = g1;
  if (f2) *f2 = g2;
  return true;
}

void ToricModel::validate() const {
  if (!fan.is_complete()) throw Error("model: fan not complete");
  if (!fan.is_smooth()) throw Error("model: fan not smooth");
  if (f.rank() != fan.rank) throw Error("model: f rank mismatch");
  for (int r : boundary)
    if (r < 0 || r >= fan.num_rays()) throw Error("model: boundary ray out of range");
  if (!f.is_zero()) {
    ToricDivisor ord = divisor_of_function(fan, f);
    for (int r = 0; r < fan.num_rays(); ++r)
      if (!in_boundary(r) && ord.at(r) < 0) throw Error("model: f has a pole inside U");
  }
}

namespace {

Fan smooth_completion(std::vector<LatticePoint> rays) {
  Fan f = Fan::from_rays(2, std::move(rays));
  if (!f.is_complete()) throw Error("smooth_completion: rays do not span");
  std::vector<LatticePoint> full;
  int n = f.num_rays();
  for (int i = 0; i < n; ++i) {
    full.push_back(f.rays[i]);
    auto chain = unimodular_chain(f.rays[i], f.rays[(i + 1) % n]);
    full.insert(full.end(), chain.begin(), chain.end());
  }
  return Fan::from_rays(2, std::move(full));
}

ToricModel build_curve_model(const PairModel& pair) {
  ToricModel m;
  m.fan = Fan::from_rays(1, {{1}, {-1}});
  m.f = pair.f;
  m.boundary.insert(m.fan.ray_index({-1}));
  if (pair.axes[0] == AxisKind::torus) m.boundary.insert(m.fan.ray_index({1}));
  m.validate();
  return m;
}

ToricModel build_surface_model_direct(const PairModel& pair) {
  if (!pair.f.is_zero() && !face_nondegenerate(pair.f))
    throw Error("pair is degenerate with respect to its Newton polytope");
  bool both_affine =
      pair.axes[0] == AxisKind::affine && pair.axes[1] == AxisKind::affine;
  std::vector<LatticePoint> rays{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (!pair.f.is_zero()) {
    for (auto& [n, b] : h_description(newton_polytope(pair.f))) {
      LatticePoint v = primitive(neg(n));
      // rays strictly inside the retained quadrant would split A^2; they
      // carry no pole, so compatibility near P survives dropping them
      if (both_affine && v[0] > 0 && v[1] > 0) continue;
      rays.push_back(v);
    }
  }
  ToricModel m;
  m.fan = smooth_completion(std::move(rays));
  m.f = pair.f;
  for (int r = 0; r < m.fan.num_rays(); ++r) {
    bool u_ray = (pair.axes[0] == AxisKind::affine && m.fan.rays[r] == LatticePoint{1, 0}) ||
                 (pair.axes[1] == AxisKind::affine && m.fan.rays[r] == LatticePoint{0, 1});
    if (!u_ray) m.boundary.insert(r);
  }
  m.validate();
  return m;
}

}  // namespace

ToricModel build_toric_model(const PairModel& pair) {
  pair.validate();
  if (pair.rank() == 1) return build_curve_model(pair);
  LaurentPolynomial f1(1), f2(1);
  if (pair.decomposable(&f1, &f2)) {
    PairModel p1{{pair.axes[0]}, f1};
    PairModel p2{{pair.axes[1]}, f2};
    return toric_eliminate(build_toric_model(p1), build_toric_model(p2)).model;
  }
  return build_surface_model_direct(pair);
}

ToricModel subdivide_model(const ToricModel& m, int cone) {
  if (m.dim() != 2) throw Error("subdivide_model: rank-2 models only");
  auto cr = m.fan.cone_rays(cone);
  if (!m.in_boundary(cr[0]) && !m.in_boundary(cr[1]))
    throw Error("subdivide_model: center lies inside U");
  std::vector<LatticePoint> bd_vecs;
  for (int r : m.boundary) bd_vecs.push_back(m.fan.rays[r]);
  auto [fan, e] = stellar_subdivide(m.fan, cone);
  ToricModel out;
  out.fan = fan;
  out.f = m.f;
  out.elimination_certified = m.elimination_certified;
  for (auto& v : bd_vecs) out.boundary.insert(out.fan.ray_index(v));
  out.boundary.insert(out.fan.ray_index(e));
  out.validate();
  return out;
}

}  // namespace irrhodge
