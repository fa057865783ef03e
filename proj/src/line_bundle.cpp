#include "irrhodge/line_bundle.hpp"

#include <algorithm>

namespace irrhodge {

namespace {

// Enumeration box certified by the line arrangement <m, v_r> = -c_r: all
// characters with interesting failing patterns lie among its cells.
int64_t character_bound(const Fan& fan, const std::vector<int64_t>& c) {
  int n = fan.num_rays();
  Rat best(0);
  auto consider = [&](const Rat& x) {
    Rat a = x < 0 ? -x : x;
    if (a > best) best = a;
  };
  if (fan.rank == 1) {
    for (int r = 0; r < n; ++r) consider(Rat((long)c[r]));
    return to_long(rat_ceil(best)) + 2;
  }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      int64_t det = cross(fan.rays[r], fan.rays[s]);
      if (det == 0) continue;
      // solve <m, v_r> = -c_r, <m, v_s> = -c_s
      Rat b1((long)-c[r]), b2((long)-c[s]);
      Rat mx = (b1 * Rat((long)fan.rays[s][1]) - b2 * Rat((long)fan.rays[r][1])) / Rat((long)det);
      Rat my = (b2 * Rat((long)fan.rays[r][0]) - b1 * Rat((long)fan.rays[s][0])) / Rat((long)det);
      consider(mx);
      consider(my);
    }
  return to_long(rat_ceil(best)) + 2;
}

struct PatternCounts {
  int h0 = 0, h1 = 0, h2 = 0;
};

// Contribution of one character from its failing-ray pattern.
void add_contribution(const Fan& fan, const std::vector<bool>& fails, PatternCounts& pc) {
  int n = fan.num_rays();
  int nf = 0;
  for (int r = 0; r < n; ++r) nf += fails[r] ? 1 : 0;
  if (nf == 0) {
    pc.h0++;
    return;
  }
  if (fan.rank == 1) {
    if (nf == 2) pc.h1++;  // S^0 fully failing
    return;
  }
  if (nf == n) {
    pc.h2++;
    return;
  }
  // components of the failing set in the cycle of rays
  int arcs = 0;
  for (int r = 0; r < n; ++r)
    if (fails[r] && !fails[(r + n - 1) % n]) arcs++;
  pc.h1 += arcs - 1;
}

}  // namespace

std::vector<int> line_bundle_cohomology(const Fan& fan, const ToricDivisor& d) {
  if (!fan.is_complete()) throw Error("line_bundle_cohomology: fan not complete");
  if (!d.is_integral()) throw Error("line_bundle_cohomology: divisor not integral");
  int n = fan.num_rays();
  std::vector<int64_t> c(n, 0);
  for (auto& [r, v] : d.coeffs) c[r] = to_long(v.get_num());

  int64_t bound = character_bound(fan, c);
  for (int attempt = 0; attempt < 8; ++attempt) {
    PatternCounts pc;
    bool margin_clean = true;
    std::vector<bool> fails(n);
    LatticePoint m(fan.rank);
    auto visit = [&](int64_t x, int64_t y) {
      m[0] = x;
      if (fan.rank == 2) m[1] = y;
      for (int r = 0; r < n; ++r) fails[r] = dot(m, fan.rays[r]) < -c[r];
      PatternCounts one;
      add_contribution(fan, fails, one);
      bool boundary = std::max(std::abs(x), fan.rank == 2 ? std::abs(y) : int64_t(0)) >= bound - 1;
      if (boundary && (one.h0 || one.h1 || one.h2)) margin_clean = false;
      pc.h0 += one.h0;
      pc.h1 += one.h1;
      pc.h2 += one.h2;
    };
    if (fan.rank == 1) {
      for (int64_t x = -bound; x <= bound; ++x) visit(x, 0);
    } else {
      for (int64_t x = -bound; x <= bound; ++x)
        for (int64_t y = -bound; y <= bound; ++y) visit(x, y);
    }
    if (margin_clean) {
      if (fan.rank == 1) return {pc.h0, pc.h1};
      return {pc.h0, pc.h1, pc.h2};
    }
    bound *= 2;
  }
  throw Error("line_bundle_cohomology: enumeration bound failed to certify");
}

std::vector<LatticePoint> line_bundle_sections(const Fan& fan, const ToricDivisor& d) {
  if (!fan.is_complete()) throw Error("line_bundle_sections: fan not complete");
  if (!d.is_integral()) throw Error("line_bundle_sections: divisor not integral");
  int n = fan.num_rays();
  std::vector<int64_t> c(n, 0);
  for (auto& [r, v] : d.coeffs) c[r] = to_long(v.get_num());
  int64_t bound = character_bound(fan, c);
  std::vector<LatticePoint> out;
  auto pass = [&](const LatticePoint& m) {
    for (int r = 0; r < n; ++r)
      if (dot(m, fan.rays[r]) < -c[r]) return false;
    return true;
  };
  if (fan.rank == 1) {
    for (int64_t x = -bound; x <= bound; ++x)
      if (pass({x})) out.push_back({x});
  } else {
    for (int64_t x = -bound; x <= bound; ++x)
      for (int64_t y = -bound; y <= bound; ++y)
        if (pass({x, y})) out.push_back({x, y});
  }
  return out;
}

}  // namespace irrhodge
