#include "irrhodge/elimination.hpp"

#include <algorithm>

namespace irrhodge {

namespace {

int64_t checked_mul(int64_t x, int64_t y) {
  __int128 p = (__int128)x * y;
  if (p > INT64_MAX || p < INT64_MIN) throw Error("delta overflow");
  return (int64_t)p;
}

std::pair<int, int> ordered(int i, int j) { return i < j ? std::make_pair(i, j) : std::make_pair(j, i); }

}  // namespace

int EliminationState::add_component(int64_t a, int64_t b) {
  if (a < 0 || b < 0) throw Error("pole orders must be non-negative");
  int id = next_id++;
  components[id] = BoundaryComponent{id, a, b};
  return id;
}

void EliminationState::add_edge(int i, int j) {
  if (i == j) throw Error("no self-intersections");
  if (!components.count(i) || !components.count(j)) throw Error("edge references unknown component");
  edges.insert(ordered(i, j));
}

bool EliminationState::adjacent(int i, int j) const {
  return i != j && edges.count(ordered(i, j)) > 0;
}

int64_t delta(const EliminationState& s, int d1, int d2) {
  auto i1 = s.components.find(d1), i2 = s.components.find(d2);
  if (i1 == s.components.end() || i2 == s.components.end())
    throw Error("delta: unknown component id");
  if (d1 == d2 || !s.adjacent(d1, d2)) return 0;
  // ord(f1) - ord(f2) = b - a componentwise
  return checked_mul(i1->second.b - i1->second.a, i2->second.b - i2->second.a);
}

int64_t min_delta(const EliminationState& s) {
  int64_t m = 0;
  for (auto& e : s.edges) m = std::min(m, delta(s, e.first, e.second));
  return m;
}

std::optional<std::pair<int, int>> select_center(const EliminationState& s) {
  std::optional<std::pair<int, int>> best;
  int64_t bestv = 0;
  for (auto& e : s.edges) {
    int64_t d = delta(s, e.first, e.second);
    if (d < 0 && (!best || d < bestv)) {
      best = e;
      bestv = d;
    }
  }
  return best;
}

EliminationState blowup_step(const EliminationState& s, std::pair<int, int> center) {
  auto [d1, d2] = ordered(center.first, center.second);
  if (!s.adjacent(d1, d2)) throw Error("blowup center does not intersect");

  // predicted table from the update formulas
  std::map<std::pair<int, int>, int64_t> predicted;
  int64_t dc = delta(s, d1, d2);
  const auto& c1 = s.components.at(d1);
  const auto& c2 = s.components.at(d2);

  EliminationState t = s;
  t.edges.erase(ordered(d1, d2));
  int e = t.add_component(c1.a + c2.a, c1.b + c2.b);
  t.add_edge(d1, e);
  t.add_edge(d2, e);
  predicted[ordered(d1, e)] = dc + checked_mul(c1.b - c1.a, c1.b - c1.a);
  predicted[ordered(d2, e)] = dc + checked_mul(c2.b - c2.a, c2.b - c2.a);

  if (s.mode == EliminationMode::nerve) {
    // stellar subdivision of the edge {d1, d2} in the dual complex
    std::vector<std::vector<int>> cells;
    for (auto& cell : t.cells) {
      bool has1 = std::count(cell.begin(), cell.end(), d1) > 0;
      bool has2 = std::count(cell.begin(), cell.end(), d2) > 0;
      if (!(has1 && has2)) {
        cells.push_back(cell);
        continue;
      }
      for (int drop : {d1, d2}) {
        std::vector<int> nc;
        for (int v : cell)
          if (v != drop) nc.push_back(v);
        nc.push_back(e);
        std::sort(nc.begin(), nc.end());
        cells.push_back(nc);
      }
      // link members of the center stay adjacent to the exceptional component
      for (int v : cell)
        if (v != d1 && v != d2) {
          t.add_edge(v, e);
          predicted[ordered(v, e)] = delta(s, v, d1) + delta(s, v, d2);
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    t.cells = std::move(cells);
  }

  for (auto& ed : s.edges)
    if (ed != ordered(d1, d2)) predicted[ed] = delta(s, ed.first, ed.second);

  // the freshly recomputed table must match the incremental prediction
  for (auto& ed : t.edges) {
    int64_t got = delta(t, ed.first, ed.second);
    auto it = predicted.find(ed);
    if (it == predicted.end() || it->second != got)
      throw Error("delta update formulas violated (internal)");
  }

  BlowupRecord rec;
  rec.step = (int)s.history.size() + 1;
  rec.center = {d1, d2};
  rec.exceptional_id = e;
  rec.ea = c1.a + c2.a;
  rec.eb = c1.b + c2.b;
  rec.min_delta_before = min_delta(s);
  rec.min_delta_after = min_delta(t);
  t.history.push_back(rec);
  return t;
}

bool check_nondegenerate_config(const EliminationState& s) {
  for (auto& e : s.edges)
    if (delta(s, e.first, e.second) < 0) return false;
  return true;
}

EliminationState eliminate(EliminationState s, int max_steps) {
  if (max_steps < 1) throw Error("eliminate: max_steps must be >= 1");
  for (int step = 0; step < max_steps; ++step) {
    auto center = select_center(s);
    if (!center) return s;
    s = blowup_step(s, *center);
  }
  if (!select_center(s)) return s;
  throw EliminationExhausted("eliminate: max_steps exhausted", std::move(s));
}

nlohmann::json trace_json(const std::vector<BlowupRecord>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : trace) {
    arr.push_back({{"step", r.step},
                   {"center", {r.center.first, r.center.second}},
                   {"exceptional", {{"id", r.exceptional_id}, {"a", r.ea}, {"b", r.eb}}},
                   {"min_delta_before", r.min_delta_before},
                   {"min_delta_after", r.min_delta_after}});
  }
  return arr;
}

namespace {

int64_t pole_order_along(const LaurentPolynomial& f, const LatticePoint& ray) {
  if (f.is_zero()) return 0;
  bool first = true;
  int64_t m = 0;
  for (auto& [e, c] : f.terms()) {
    int64_t v = dot(e, ray);
    if (first || v < m) m = v;
    first = false;
  }
  return m < 0 ? -m : 0;
}

}  // namespace

ToricEliminationResult toric_eliminate(const ToricModel& c1, const ToricModel& c2,
                                       int max_steps) {
  if (c1.dim() != 1 || c2.dim() != 1) throw Error("toric_eliminate needs curve factors");
  c1.validate();
  c2.validate();

  LaurentPolynomial f1 = c1.f.embedded(2, 0);
  LaurentPolynomial f2 = c2.f.embedded(2, 1);
  LaurentPolynomial f = f1 + f2;

  // product fan and its boundary rays
  std::vector<LatticePoint> rays;
  std::vector<LatticePoint> bd_rays;
  for (int r = 0; r < c1.fan.num_rays(); ++r) {
    rays.push_back({c1.fan.rays[r][0], 0});
    if (c1.in_boundary(r)) bd_rays.push_back({c1.fan.rays[r][0], 0});
  }
  for (int r = 0; r < c2.fan.num_rays(); ++r) {
    rays.push_back({0, c2.fan.rays[r][0]});
    if (c2.in_boundary(r)) bd_rays.push_back({0, c2.fan.rays[r][0]});
  }
  Fan fan = Fan::from_rays(2, rays);

  EliminationState st;
  st.mode = EliminationMode::surface;
  std::map<LatticePoint, int> ray_comp;
  for (auto& v : bd_rays) ray_comp[v] = st.add_component(pole_order_along(f1, v), pole_order_along(f2, v));

  auto sync_edges = [&](const Fan& fn) {
    std::set<std::pair<int, int>> edges;
    for (auto it1 = ray_comp.begin(); it1 != ray_comp.end(); ++it1)
      for (auto it2 = std::next(it1); it2 != ray_comp.end(); ++it2) {
        int r1 = fn.ray_index(it1->first), r2 = fn.ray_index(it2->first);
        if (fn.cone_of_rays(r1, r2) >= 0)
          edges.insert(it1->second < it2->second ? std::make_pair(it1->second, it2->second)
                                                 : std::make_pair(it2->second, it1->second));
      }
    return edges;
  };
  st.edges = sync_edges(fan);

  for (int step = 0; step < max_steps + 1; ++step) {
    auto center = select_center(st);
    if (!center) break;
    if (step == max_steps) throw EliminationExhausted("toric_eliminate: max_steps exhausted", std::move(st));
    // locate the rays of the center components
    LatticePoint v1, v2;
    for (auto& [v, id] : ray_comp) {
      if (id == center->first) v1 = v;
      if (id == center->second) v2 = v;
    }
    int cone = fan.cone_of_rays(fan.ray_index(v1), fan.ray_index(v2));
    if (cone < 0) throw Error("toric_eliminate: abstract edge without fan cone (internal)");
    auto [nf, e] = stellar_subdivide(fan, cone);
    fan = nf;
    st = blowup_step(st, *center);
    int eid = st.history.back().exceptional_id;
    ray_comp[e] = eid;
    // fan-derived orders must agree with the abstract ones
    if (pole_order_along(f1, e) != st.components.at(eid).a ||
        pole_order_along(f2, e) != st.components.at(eid).b)
      throw Error("toric_eliminate: exceptional orders disagree (internal)");
    if (sync_edges(fan) != st.edges)
      throw Error("toric_eliminate: incidence graphs disagree (internal)");
  }

  ToricEliminationResult res{ToricModel{}, ray_comp, st};
  res.model.fan = fan;
  res.model.f = f;
  res.model.elimination_certified = true;
  for (auto& [v, id] : ray_comp) res.model.boundary.insert(fan.ray_index(v));
  res.model.validate();
  if (!check_nondegenerate_config(st)) throw Error("toric_eliminate: final state degenerate (internal)");
  return res;
}

}  // namespace irrhodge
