#include "irrhodge/fan.hpp"

#include <algorithm>

namespace irrhodge {

namespace {

// ccw angular order starting just above the positive x-axis
bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  auto half = [](const LatticePoint& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  int64_t x1, y1;
  int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

Fan Fan::from_rays(int rank, std::vector<LatticePoint> rays) {
  Fan f;
  f.rank = rank;
  for (auto& r : rays) {
    if ((int)r.size() != rank || is_zero(r)) throw Error("fan ray must be nonzero of fan rank");
    r = primitive(r);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rank == 1) {
    std::sort(rays.begin(), rays.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a[0] > b[0]; });
  } else {
    std::sort(rays.begin(), rays.end(), angle_less);
  }
  f.rays = std::move(rays);
  return f;
}

int Fan::ray_index(const LatticePoint& v) const {
  for (int i = 0; i < (int)rays.size(); ++i)
    if (rays[i] == v) return i;
  return -1;
}

std::vector<int> Fan::cone_rays(int c) const {
  if (rank == 1) return {c};
  return {c, (c + 1) % num_rays()};
}

int Fan::cone_of_rays(int r1, int r2) const {
  if (rank != 2) return -1;
  int n = num_rays();
  for (int c = 0; c < n; ++c) {
    auto cr = cone_rays(c);
    if ((cr[0] == r1 && cr[1] == r2) || (cr[0] == r2 && cr[1] == r1)) return c;
  }
  return -1;
}

bool Fan::is_complete() const {
  if (rank == 1) return num_rays() == 2 && rays[0][0] == 1 && rays[1][0] == -1;
  if (num_rays() < 3) return false;
  for (int i = 0; i < num_rays(); ++i)
    if (cross(rays[i], rays[(i + 1) % num_rays()]) <= 0) return false;
  return true;
}

bool Fan::is_smooth() const {
  if (rank == 1) return true;
  for (int i = 0; i < num_rays(); ++i)
    if (cross(rays[i], rays[(i + 1) % num_rays()]) != 1) return false;
  return true;
}

std::vector<Chart> fan_charts(const Fan& fan) {
  std::vector<Chart> charts;
  int n = fan.num_max_cones();
  for (int c = 0; c < n; ++c) {
    Chart ch;
    ch.cone = c;
    if (fan.rank == 1) {
      ch.coord_names = {"t"};
      ch.dual_basis = {fan.rays[c]};  // self-dual in rank 1
    } else {
      auto cr = fan.cone_rays(c);
      const LatticePoint &v1 = fan.rays[cr[0]], &v2 = fan.rays[cr[1]];
      int64_t d = cross(v1, v2);
      if (d != 1) throw Error("charts need a smooth fan");
      ch.coord_names = {"t1", "t2"};
      ch.dual_basis = {{v2[1], -v2[0]}, {-v1[1], v1[0]}};
      ch.coord_names = {"t1@" + std::to_string(c), "t2@" + std::to_string(c)};
    }
    charts.push_back(ch);
  }
  // transitions: rows of M_tau * M_sigma^{-1}
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (fan.rank == 1) {
        charts[a].transitions[b] = {{fan.rays[a][0] * fan.rays[b][0]}};
        continue;
      }
      bool adjacent = (b == (a + 1) % n) || (a == (b + 1) % n);
      if (!adjacent) continue;
      const auto& ma = charts[a].dual_basis;
      const auto& mb = charts[b].dual_basis;
      // inverse of ma (unimodular): columns solve against the cone rays
      auto cr = fan.cone_rays(a);
      const LatticePoint &v1 = fan.rays[cr[0]], &v2 = fan.rays[cr[1]];
      std::vector<LatticePoint> t(2, LatticePoint(2));
      for (int i = 0; i < 2; ++i) {
        t[i][0] = dot(mb[i], v1);  // coefficient on m^a_1
        t[i][1] = dot(mb[i], v2);
      }
      charts[a].transitions[b] = t;
    }
  }
  return charts;
}

std::vector<LatticePoint> unimodular_chain(const LatticePoint& v, const LatticePoint& w) {
  std::vector<LatticePoint> out;
  LatticePoint a = v;
  int64_t d = cross(a, w);
  if (d <= 0) throw Error("unimodular_chain: not a positively oriented cone");
  while (d > 1) {
    // u = u0 + t a with det(a, u0) = 1, minimizing det(u, w) >= 1
    int64_t x, y;
    int64_t g = egcd(a[0], a[1], x, y);
    if (g != 1) throw Error("unimodular_chain: ray not primitive");
    LatticePoint u0{-y, x};  // det(a, u0) = a0*x + a1*y = 1
    int64_t duw = cross(u0, w);
    // t = ceil(-duw / d)
    int64_t t = -duw >= 0 ? (-duw + d - 1) / d : -((duw) / d);
    LatticePoint u{u0[0] + t * a[0], u0[1] + t * a[1]};
    int64_t dn = cross(u, w);
    if (dn < 1 || dn >= d || cross(a, u) != 1) throw Error("unimodular_chain: step failed");
    out.push_back(u);
    a = u;
    d = dn;
  }
  return out;
}

Fan smooth_compatible_fan(const NewtonPolytope& delta,
                          const std::vector<LatticePoint>& extra_rays) {
  if (delta.rank == 1) {
    Fan f = Fan::from_rays(1, {{1}, {-1}});
    for (auto& r : extra_rays)
      if (f.ray_index(primitive(r)) < 0) throw Error("rank-1 fan cannot contain extra ray");
    return f;
  }
  if (delta.rank != 2) throw Error("smooth_compatible_fan: rank > 2 unsupported");
  std::vector<LatticePoint> rays{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (auto& [n, b] : h_description(delta)) rays.push_back(neg(n));
  for (auto& r : extra_rays) rays.push_back(r);
  Fan f = Fan::from_rays(2, std::move(rays));
  if (!f.is_complete()) throw Error("smooth_compatible_fan: degenerate ray set");
  std::vector<LatticePoint> full;
  int n = f.num_rays();
  for (int i = 0; i < n; ++i) {
    full.push_back(f.rays[i]);
    auto chain = unimodular_chain(f.rays[i], f.rays[(i + 1) % n]);
    full.insert(full.end(), chain.begin(), chain.end());
  }
  return Fan::from_rays(2, std::move(full));
}

std::pair<Fan, LatticePoint> stellar_subdivide(const Fan& fan, int cone) {
  if (fan.rank != 2) throw Error("stellar_subdivide needs a 2-cone");
  if (cone < 0 || cone >= fan.num_max_cones()) throw Error("stellar_subdivide: no such cone");
  auto cr = fan.cone_rays(cone);
  LatticePoint e = primitive(add(fan.rays[cr[0]], fan.rays[cr[1]]));
  auto rays = fan.rays;
  rays.push_back(e);
  return {Fan::from_rays(2, std::move(rays)), e};
}

}  // namespace irrhodge
