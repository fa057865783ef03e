#include <doctest.h>

#include "irrhodge/fan.hpp"
#include "irrhodge/line_bundle.hpp"
#include "irrhodge/polytope.hpp"

using namespace irrhodge;

namespace {

LaurentPolynomial lp1(std::initializer_list<std::pair<int64_t, Rat>> terms) {
  LaurentPolynomial f(1);
  for (auto& [e, c] : terms) f.add_term({e}, c);
  return f;
}

LaurentPolynomial lp2(std::initializer_list<std::pair<std::pair<int64_t, int64_t>, Rat>> terms) {
  LaurentPolynomial f(2);
  for (auto& [e, c] : terms) f.add_term({e.first, e.second}, c);
  return f;
}

Fan p1xp1() { return Fan::from_rays(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

}  // namespace

TEST_CASE("newton_polytope: examples") {
  auto np = newton_polytope(lp1({{1, 1}, {-1, 1}}));  // x + 1/x
  CHECK(np.vertices == std::vector<LatticePoint>{{-1}, {1}});

  np = newton_polytope(lp1({{2, 1}}));  // x^2
  CHECK(np.vertices == std::vector<LatticePoint>{{2}});

  np = newton_polytope(lp2({{{2, 0}, 1}, {{0, 2}, 1}}));  // x1^2 + x2^2
  REQUIRE(np.vertices.size() == 2);
  CHECK(np.dim() == 1);

  CHECK_THROWS_AS(newton_polytope(LaurentPolynomial(1)), Error);
}

TEST_CASE("gauge: examples") {
  NewtonPolytope seg;  // [-1, 1]
  seg.rank = 1;
  seg.vertices = {{-1}, {1}};
  CHECK(gauge(seg, {3}) == Rat(3));
  CHECK(gauge(seg, {0}) == Rat(0));

  auto np = newton_polytope(lp2({{{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK(gauge(np, {2, 2}) == Rat(2));
  CHECK(gauge(np, {0, 0}) == Rat(0));

  NewtonPolytope pt;  // {2}: u outside the cone of the polytope
  pt.rank = 1;
  pt.vertices = {{2}};
  CHECK(!gauge(pt, {-1}).has_value());
  CHECK(gauge(pt, {3}) == make_rat(3, 2));
}

TEST_CASE("gauge additivity across disjoint variable groups") {
  // f(x,y) = f1(x) + f2(y); gauge(NP(f),(u1,u2)) = gauge(NP1,u1) + gauge(NP2,u2)
  auto f1 = lp1({{2, 1}, {-1, 3}});
  auto f2 = lp1({{1, 1}, {3, make_rat(1, 2)}});
  LaurentPolynomial f = f1.embedded(2, 0) + f2.embedded(2, 1);
  auto np = newton_polytope(f);
  auto np1 = newton_polytope(f1);
  auto np2 = newton_polytope(f2);
  for (int64_t u1 = -4; u1 <= 4; ++u1)
    for (int64_t u2 = -4; u2 <= 4; ++u2) {
      auto g1 = gauge(np1, {u1});
      auto g2 = gauge(np2, {u2});
      auto g = gauge(np, {u1, u2});
      if (g1 && g2) {
        REQUIRE(g.has_value());
        CHECK(*g == *g1 + *g2);
      } else {
        CHECK(!g.has_value());
      }
    }
}

TEST_CASE("face_nondegenerate: examples") {
  CHECK(face_nondegenerate(lp1({{1, 1}, {-1, 1}})));                    // x + 1/x
  CHECK(face_nondegenerate(lp2({{{2, 0}, 1}, {{0, 2}, 1}})));           // x1^2 + x2^2
  CHECK(!face_nondegenerate(lp1({{2, 1}, {1, -2}, {0, 1}})));           // (x-1)^2
  CHECK(face_nondegenerate(lp1({{2, 1}})));                             // x^2
  CHECK(face_nondegenerate(lp1({{1, 1}})));                             // x
  CHECK(face_nondegenerate(lp2({{{1, 0}, 1}, {{0, 1}, 1}})));           // x1 + x2
  CHECK(!face_nondegenerate(lp2({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}})));  // x+y+xy
}

TEST_CASE("smooth_compatible_fan") {
  NewtonPolytope seg;
  seg.rank = 1;
  seg.vertices = {{-1}, {1}};
  Fan f1 = smooth_compatible_fan(seg, {});
  CHECK(f1.rays == std::vector<LatticePoint>{{1}, {-1}});

  NewtonPolytope pt;
  pt.rank = 1;
  pt.vertices = {{2}};
  CHECK(smooth_compatible_fan(pt, {}).num_rays() == 2);

  auto np = convex_hull(2, {{0, 0}, {2, 0}, {0, 2}});
  Fan f2 = smooth_compatible_fan(np, {});
  CHECK(f2.is_complete());
  CHECK(f2.is_smooth());
  // contains the coordinate rays and the inner normal (-1,-1) of the hypotenuse
  CHECK(f2.ray_index({1, 0}) >= 0);
  CHECK(f2.ray_index({0, 1}) >= 0);
  CHECK(f2.ray_index({-1, -1}) >= 0);
}

TEST_CASE("unimodular_chain") {
  auto chain = unimodular_chain({1, 0}, {1, 3});
  CHECK(chain == std::vector<LatticePoint>{{1, 1}, {1, 2}});
  CHECK(unimodular_chain({1, 0}, {0, 1}).empty());
}

TEST_CASE("stellar subdivisions") {
  Fan f = p1xp1();
  int cone = f.cone_of_rays(f.ray_index({-1, 0}), f.ray_index({0, -1}));
  REQUIRE(cone >= 0);
  auto [f2, e] = stellar_subdivide(f, cone);
  CHECK(e == LatticePoint{-1, -1});
  CHECK(f2.num_rays() == 5);
  CHECK(f2.is_smooth());
  CHECK(f2.is_complete());

  int cone2 = f2.cone_of_rays(f2.ray_index({-1, 0}), f2.ray_index({-1, -1}));
  auto [f3, e2] = stellar_subdivide(f2, cone2);
  CHECK(e2 == LatticePoint{-2, -1});
  CHECK(f3.num_rays() == 6);
  CHECK(f3.is_complete());
  CHECK(f3.is_smooth());
}

TEST_CASE("chart transitions compose to the identity around the fan") {
  Fan f = p1xp1();
  auto charts = fan_charts(f);
  // follow the cycle of maximal cones 0 -> 1 -> 2 -> 3 -> 0
  std::vector<LatticePoint> acc = {{1, 0}, {0, 1}};
  auto mul = [](const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
    std::vector<LatticePoint> c(2, LatticePoint(2, 0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  int n = f.num_max_cones();
  for (int c = 0; c < n; ++c) acc = mul(charts[c].transitions.at((c + 1) % n), acc);
  CHECK(acc == std::vector<LatticePoint>{{1, 0}, {0, 1}});
}

TEST_CASE("divisor_of_function and pole divisor: examples") {
  Fan f1 = Fan::from_rays(1, {{1}, {-1}});
  auto d = divisor_of_function(f1, lp1({{1, 1}, {-1, 1}}));
  CHECK(d.at(f1.ray_index({1})) == -1);
  CHECK(d.at(f1.ray_index({-1})) == -1);
  auto p = pole_divisor(f1, lp1({{1, 1}, {-1, 1}}));
  CHECK(p.at(0) == 1);
  CHECK(p.at(1) == 1);

  d = divisor_of_function(f1, lp1({{2, 1}}));
  CHECK(d.at(f1.ray_index({1})) == 2);
  CHECK(d.at(f1.ray_index({-1})) == -2);
  p = pole_divisor(f1, lp1({{2, 1}}));
  CHECK(p.at(f1.ray_index({1})) == 0);
  CHECK(p.at(f1.ray_index({-1})) == 2);

  Fan f2 = p1xp1();
  p = pole_divisor(f2, lp2({{{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK(p.at(f2.ray_index({-1, 0})) == 2);
  CHECK(p.at(f2.ray_index({0, -1})) == 2);
  CHECK(p.at(f2.ray_index({1, 0})) == 0);
}

TEST_CASE("floor_divisor: examples") {
  ToricDivisor p;
  p.set(0, 2);  // P = 2[infty]
  auto d = floor_divisor(make_rat(1, 2), p);
  CHECK(d.at(0) == 1);
  d = floor_divisor(Rat(0), p);
  CHECK(d.is_zero());

  ToricDivisor q;
  q.set(0, 2);
  q.set(1, 1);
  d = floor_divisor(make_rat(3, 4), q);
  CHECK(d.at(0) == 1);
  CHECK(d.at(1) == 0);
}

TEST_CASE("line_bundle_cohomology: P^1 classics") {
  Fan f = Fan::from_rays(1, {{1}, {-1}});
  ToricDivisor d;
  d.set(0, -2);  // O(-2)
  CHECK(line_bundle_cohomology(f, d) == std::vector<int>{0, 1});
  ToricDivisor e;
  e.set(0, 1);  // O(1)
  CHECK(line_bundle_cohomology(f, e) == std::vector<int>{2, 0});
}

TEST_CASE("line_bundle_cohomology: O(-1,-1) on P^1 x P^1") {
  Fan f = p1xp1();
  ToricDivisor d;
  d.set(f.ray_index({1, 0}), -1);
  d.set(f.ray_index({0, 1}), -1);
  CHECK(line_bundle_cohomology(f, d) == std::vector<int>{0, 0, 0});
}

TEST_CASE("Serre duality on P^1") {
  Fan f = Fan::from_rays(1, {{1}, {-1}});
  for (int deg = -5; deg <= 5; ++deg) {
    ToricDivisor d, dual;
    d.set(0, deg);
    dual.set(0, -deg - 2);
    auto h = line_bundle_cohomology(f, d);
    auto hd = line_bundle_cohomology(f, dual);
    CHECK(h[0] == hd[1]);
    CHECK(h[1] == hd[0]);
  }
}

TEST_CASE("Euler characteristic of O(a,b) on P^1 x P^1") {
  Fan f = p1xp1();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      ToricDivisor d;
      d.set(f.ray_index({-1, 0}), a);
      d.set(f.ray_index({0, -1}), b);
      auto h = line_bundle_cohomology(f, d);
      CHECK(h[0] - h[1] + h[2] == (a + 1) * (b + 1));
    }
}
