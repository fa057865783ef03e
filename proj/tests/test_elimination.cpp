#include <doctest.h>

#include <random>

#include "irrhodge/elimination.hpp"

using namespace irrhodge;

namespace {

EliminationState two_components(int64_t a1, int64_t b1, int64_t a2, int64_t b2) {
  EliminationState s;
  int d1 = s.add_component(a1, b1);
  int d2 = s.add_component(a2, b2);
  s.add_edge(d1, d2);
  return s;
}

PairModel curve(AxisKind kind, std::initializer_list<std::pair<int64_t, Rat>> terms) {
  LaurentPolynomial f(1);
  for (auto& [e, c] : terms) f.add_term({e}, c);
  return PairModel{{kind}, f};
}

}  // namespace

TEST_CASE("delta: examples") {
  auto s = two_components(2, 0, 0, 1);
  CHECK(delta(s, 0, 1) == -2);
  CHECK(delta(s, 0, 0) == 0);
  s.edges.clear();  // disjoint pair
  CHECK(delta(s, 0, 1) == 0);
  CHECK_THROWS_AS(delta(s, 0, 7), Error);
}

TEST_CASE("select_center: examples") {
  EliminationState s;
  int a = s.add_component(2, 0);
  int b = s.add_component(0, 1);  // delta(a,b) = -2
  int c = s.add_component(1, 0);  // delta(c,b) = -1
  s.add_edge(a, b);
  s.add_edge(c, b);
  auto ctr = select_center(s);
  REQUIRE(ctr.has_value());
  CHECK(*ctr == std::make_pair(a, b));

  EliminationState t = two_components(1, 1, 2, 2);
  CHECK(!select_center(t).has_value());

  // two pairs both at -2: lexicographically least ids win
  EliminationState u;
  int u0 = u.add_component(2, 0);
  int u1 = u.add_component(0, 1);
  int u2 = u.add_component(0, 1);
  u.add_edge(u0, u1);
  u.add_edge(u0, u2);
  auto c2 = select_center(u);
  REQUIRE(c2.has_value());
  CHECK(*c2 == std::make_pair(u0, u1));
}

TEST_CASE("blowup_step: examples") {
  auto s = two_components(2, 0, 0, 1);
  auto t = blowup_step(s, {0, 1});
  const auto& e = t.components.at(2);
  CHECK(e.a == 2);
  CHECK(e.b == 1);
  CHECK(!t.adjacent(0, 1));
  CHECK(delta(t, 0, 2) == 2);   // -2 + (0-2)^2
  CHECK(delta(t, 1, 2) == -1);  // -2 + (1-0)^2

  for (int64_t ee = 1; ee <= 4; ++ee) {
    auto sym = two_components(ee, 0, 0, ee);
    auto r = blowup_step(sym, {0, 1});
    CHECK(delta(r, 0, 2) == 0);  // -e^2 + e^2
    CHECK(delta(r, 1, 2) == 0);
  }

  auto eq = two_components(3, 3, 1, 1);
  CHECK(delta(eq, 0, 1) == 0);
  CHECK(!select_center(eq).has_value());
  CHECK_THROWS_AS(blowup_step(s, {0, 7}), Error);
}

TEST_CASE("eliminate: examples") {
  auto s1 = two_components(1, 0, 0, 1);
  auto r1 = eliminate(s1);
  CHECK(r1.history.size() == 1);
  CHECK(check_nondegenerate_config(r1));

  auto s2 = two_components(2, 0, 0, 1);
  auto r2 = eliminate(s2);
  CHECK(r2.history.size() == 2);
  CHECK(r2.history[0].center == std::make_pair(0, 1));
  CHECK(r2.history[1].center == std::make_pair(1, 2));
  bool saw21 = false, saw22 = false;
  for (auto& [id, c] : r2.components) {
    if (c.a == 2 && c.b == 1) saw21 = true;
    if (c.a == 2 && c.b == 2) saw22 = true;
  }
  CHECK(saw21);
  CHECK(saw22);
  CHECK(check_nondegenerate_config(r2));

  auto s3 = two_components(0, 0, 0, 0);
  auto r3 = eliminate(s3);
  CHECK(r3.history.empty());
  CHECK(r3.edges == s3.edges);
}

TEST_CASE("check_nondegenerate_config: examples") {
  auto s = two_components(2, 0, 0, 1);
  CHECK(!check_nondegenerate_config(s));
  CHECK(check_nondegenerate_config(eliminate(s)));
  EliminationState empty;
  CHECK(check_nondegenerate_config(empty));
}

TEST_CASE("eliminate invariants on seeded random configurations") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> ncomp(2, 6), order(0, 6), coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    EliminationState s;
    int n = ncomp(rng);
    for (int i = 0; i < n; ++i) s.add_component(order(rng), order(rng));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) s.add_edge(i, j);
    auto r = eliminate(s, 500);
    CHECK(check_nondegenerate_config(r));
    // exceptional additivity along the recorded history
    EliminationState cur = s;
    for (auto& rec : r.history) {
      auto& c1 = cur.components.at(rec.center.first);
      auto& c2 = cur.components.at(rec.center.second);
      CHECK(rec.ea == c1.a + c2.a);
      CHECK(rec.eb == c1.b + c2.b);
      cur = blowup_step(cur, rec.center);
    }
    // idempotence
    CHECK(eliminate(r).history.size() == r.history.size());
  }
}

TEST_CASE("nerve mode blowup subdivides the dual complex") {
  EliminationState s;
  s.mode = EliminationMode::nerve;
  int d0 = s.add_component(2, 0);
  int d1 = s.add_component(0, 1);
  int d2 = s.add_component(1, 1);
  s.cells = {{d0, d1, d2}};
  s.add_edge(d0, d1);
  s.add_edge(d0, d2);
  s.add_edge(d1, d2);
  auto t = blowup_step(s, {d0, d1});
  int e = t.history.back().exceptional_id;
  CHECK(t.adjacent(d2, e));  // d2 contains the center
  CHECK(!t.adjacent(d0, d1));
  CHECK(t.cells == std::vector<std::vector<int>>{{d0, d2, e}, {d1, d2, e}});
  CHECK(delta(t, d2, e) == delta(s, d2, d0) + delta(s, d2, d1));
}

TEST_CASE("toric_eliminate: examples") {
  auto a1x2 = build_toric_model(curve(AxisKind::affine, {{2, 1}}));

  SUBCASE("x^2 against x^2: one subdivision at (infty, infty)") {
    auto res = toric_eliminate(a1x2, a1x2);
    CHECK(res.state.history.size() == 1);
    CHECK(res.model.fan.ray_index({-1, -1}) >= 0);
    CHECK(res.model.fan.num_rays() == 5);
    auto it = res.ray_component.find({-1, -1});
    REQUIRE(it != res.ray_component.end());
    CHECK(res.state.components.at(it->second).a == 2);
    CHECK(res.state.components.at(it->second).b == 2);
  }

  SUBCASE("x^2 against x: rays (-1,-1) then (-1,-2)") {
    auto a1x = build_toric_model(curve(AxisKind::affine, {{1, 1}}));
    auto res = toric_eliminate(a1x2, a1x);
    CHECK(res.state.history.size() == 2);
    CHECK(res.model.fan.ray_index({-1, -1}) >= 0);
    CHECK(res.model.fan.ray_index({-1, -2}) >= 0);
    CHECK(check_nondegenerate_config(res.state));
  }

  SUBCASE("zero functions: no subdivision") {
    auto gm0 = build_toric_model(curve(AxisKind::torus, {}));
    auto res = toric_eliminate(gm0, gm0);
    CHECK(res.state.history.empty());
    CHECK(res.model.fan.num_rays() == 4);
  }
}

TEST_CASE("abstract and toric traces coincide") {
  auto pairs = std::vector<PairModel>{
      curve(AxisKind::affine, {{2, 1}}),
      curve(AxisKind::affine, {{1, 1}}),
      curve(AxisKind::torus, {{1, 1}, {-1, 1}}),
      curve(AxisKind::torus, {{1, 1}}),
  };
  for (auto& p1 : pairs)
    for (auto& p2 : pairs) {
      auto m1 = build_toric_model(p1), m2 = build_toric_model(p2);
      auto res = toric_eliminate(m1, m2);
      // replay the abstract elimination from the initial state
      EliminationState init = res.state;
      init.components.clear();
      init.edges.clear();
      init.history.clear();
      init.next_id = 0;
      LaurentPolynomial f1 = p1.f.embedded(2, 0), f2 = p2.f.embedded(2, 1);
      {
        // rebuild initial components in the same deterministic order
        std::vector<LatticePoint> bd;
        for (int r = 0; r < m1.fan.num_rays(); ++r)
          if (m1.in_boundary(r)) bd.push_back({m1.fan.rays[r][0], 0});
        for (int r = 0; r < m2.fan.num_rays(); ++r)
          if (m2.in_boundary(r)) bd.push_back({0, m2.fan.rays[r][0]});
        for (auto& v : bd) {
          auto ordv = [&](const LaurentPolynomial& g) {
            if (g.is_zero()) return (int64_t)0;
            bool first = true;
            int64_t m = 0;
            for (auto& [e, c] : g.terms()) {
              int64_t x = dot(e, v);
              if (first || x < m) m = x;
              first = false;
            }
            return m < 0 ? -m : (int64_t)0;
          };
          init.add_component(ordv(f1), ordv(f2));
        }
        for (auto it1 = res.ray_component.begin(); it1 != res.ray_component.end(); ++it1)
          for (auto it2 = std::next(it1); it2 != res.ray_component.end(); ++it2) {
            if (init.components.count(it1->second) && init.components.count(it2->second)) {
              // initial adjacency: one ray per factor
              bool mixed = (it1->first[0] == 0) != (it2->first[0] == 0);
              if (mixed && it1->second < init.next_id && it2->second < init.next_id)
                init.add_edge(it1->second, it2->second);
            }
          }
      }
      auto abstract_run = eliminate(init);
      REQUIRE(abstract_run.history.size() == res.state.history.size());
      for (size_t i = 0; i < abstract_run.history.size(); ++i) {
        CHECK(abstract_run.history[i].center == res.state.history[i].center);
        CHECK(abstract_run.history[i].exceptional_id == res.state.history[i].exceptional_id);
      }
    }
}

TEST_CASE("trace JSON schema") {
  auto s = two_components(2, 0, 0, 1);
  auto r = eliminate(s);
  auto j = trace_json(r.history);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["step"] == 1);
  CHECK(j[0]["center"] == nlohmann::json({0, 1}));
  CHECK(j[0]["exceptional"]["a"] == 2);
  CHECK(j[0]["exceptional"]["b"] == 1);
  CHECK(j[0].contains("min_delta_before"));
  CHECK(j[0].contains("min_delta_after"));
}
