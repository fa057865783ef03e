#include "irrhodge/sheaf.hpp"

#include <algorithm>

namespace irrhodge {

namespace {

int64_t egcd64(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  int64_t x1, y1;
  int64_t g = egcd64(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

int wedge_sign(int i, int mask) {
  int below = mask & ((1 << i) - 1);
  return __builtin_popcount(below) % 2 == 0 ? 1 : -1;
}

std::vector<int> masks_of_size(int n, int p) {
  std::vector<int> out;
  for (int m = 0; m < (1 << n); ++m)
    if (__builtin_popcount(m) == p) out.push_back(m);
  return out;
}

int64_t wedge_minor(const Cell& cell, int jmask, int kmask) {
  std::vector<int> rows, cols;
  for (int i = 0; i < (int)cell.basis.size(); ++i) {
    if (jmask & (1 << i)) rows.push_back(i);
    if (kmask & (1 << i)) cols.push_back(i);
  }
  if (rows.size() != cols.size()) throw Error("wedge_minor: size mismatch");
  if (rows.empty()) return 1;
  if (rows.size() == 1) return cell.basis[rows[0]][cols[0]];
  return cell.basis[rows[0]][cols[0]] * cell.basis[rows[1]][cols[1]] -
         cell.basis[rows[0]][cols[1]] * cell.basis[rows[1]][cols[0]];
}

std::vector<std::vector<int64_t>> wedge_to_chart_matrix(const Cell& cell, int p) {
  int n = (int)cell.basis.size();
  auto masks = masks_of_size(n, p);
  int s = (int)masks.size();
  // W[k][j] = coefficient of global mask k in chart wedge j
  std::vector<std::vector<int64_t>> w(s, std::vector<int64_t>(s, 0));
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k) w[k][j] = wedge_minor(cell, masks[j], masks[k]);
  // invert (unimodular, size <= 2)
  if (s == 1) {
    if (w[0][0] != 1 && w[0][0] != -1) throw Error("wedge transform not unimodular");
    return {{w[0][0]}};
  }
  int64_t det = w[0][0] * w[1][1] - w[0][1] * w[1][0];
  if (det != 1 && det != -1) throw Error("wedge transform not unimodular");
  return {{det * w[1][1], -det * w[0][1]}, {-det * w[1][0], det * w[0][0]}};
}

CellComplex CellComplex::build(const Fan& fan) {
  CellComplex cc;
  cc.rank = fan.rank;
  int n = fan.num_rays();
  auto add_cell = [&](Cell c) {
    c.id = (int)cc.cells.size();
    cc.cells.push_back(std::move(c));
    return (int)cc.cells.size() - 1;
  };

  if (fan.rank == 1) {
    cc.by_q.resize(2);
    for (int r = 0; r < n; ++r) {
      Cell c;
      c.dim = 1;
      c.rays = {r};
      c.basis = {fan.rays[r]};
      c.dual_rays = {fan.rays[r]};
      c.coord_ray = {r};
      cc.by_q[0].push_back(add_cell(std::move(c)));
    }
    Cell t;
    t.dim = 0;
    t.basis = {{1}};
    t.dual_rays = {{1}};
    t.coord_ray = {-1};
    int tid = add_cell(std::move(t));
    cc.by_q[1].push_back(tid);
    cc.faces.resize(cc.cells.size());
    cc.faces[cc.by_q[0][0]] = {{tid, 1}};
    cc.faces[cc.by_q[0][1]] = {{tid, -1}};
    return cc;
  }

  cc.by_q.resize(3);
  // q=0: maximal cones (v_i, v_{i+1})
  std::vector<int> cone_cell(n), ray_cell(n);
  for (int c = 0; c < n; ++c) {
    auto cr = fan.cone_rays(c);
    const LatticePoint &v1 = fan.rays[cr[0]], &v2 = fan.rays[cr[1]];
    if (cross(v1, v2) != 1) throw Error("cell complex needs a smooth fan");
    Cell cell;
    cell.dim = 2;
    cell.rays = cr;
    cell.basis = {{v2[1], -v2[0]}, {-v1[1], v1[0]}};
    cell.dual_rays = {v1, v2};
    cell.coord_ray = cr;
    cone_cell[c] = add_cell(std::move(cell));
    cc.by_q[0].push_back(cone_cell[c]);
  }
  // q=1: rays
  for (int r = 0; r < n; ++r) {
    const LatticePoint& rho = fan.rays[r];
    int64_t x, y;
    if (egcd64(rho[0], rho[1], x, y) != 1) throw Error("ray not primitive");
    Cell cell;
    cell.dim = 1;
    cell.rays = {r};
    LatticePoint m1{x, y};
    LatticePoint m2{-rho[1], rho[0]};
    cell.basis = {m1, m2};
    cell.dual_rays = {rho, {-m1[1], m1[0]}};
    cell.coord_ray = {r, -1};
    ray_cell[r] = add_cell(std::move(cell));
    cc.by_q[1].push_back(ray_cell[r]);
  }
  // q=2: the torus
  Cell t;
  t.dim = 0;
  t.basis = {{1, 0}, {0, 1}};
  t.dual_rays = {{1, 0}, {0, 1}};
  t.coord_ray = {-1, -1};
  int tid = add_cell(std::move(t));
  cc.by_q[2].push_back(tid);

  cc.faces.resize(cc.cells.size());
  // delta^0: cone (v_i, v_{i+1}) -> +ray_i - ray_{i+1}
  for (int c = 0; c < n; ++c) {
    auto cr = fan.cone_rays(c);
    cc.faces[cone_cell[c]] = {{ray_cell[cr[0]], 1}, {ray_cell[cr[1]], -1}};
  }
  // delta^1: ray -> torus
  for (int r = 0; r < n; ++r) cc.faces[ray_cell[r]] = {{tid, 1}};
  return cc;
}

CellComplex build_cells(const Fan& fan) { return CellComplex::build(fan); }

namespace {

DiagonalData log_bounds(const ToricModel& m, const CellComplex& cc,
                        const std::vector<ToricDivisor>& gens, int p) {
  DiagonalData dd;
  int n = cc.rank;
  dd.bounds.resize(cc.cells.size());
  for (auto& cell : cc.cells) {
    dd.bounds[cell.id].resize(1 << n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != p) continue;
      auto& alts = dd.bounds[cell.id][mask];
      for (auto& d : gens) {
        std::vector<std::pair<LatticePoint, int64_t>> conds;
        for (int i = 0; i < n; ++i) {
          int r = cell.coord_ray[i];
          if (r < 0) continue;
          Rat c = d.at(r);
          if (!is_integer(c)) throw Error("sheaf bounds need an integral divisor");
          int64_t b = -to_long(c.get_num());
          if (!m.in_boundary(r) && (mask & (1 << i))) b += 1;
          conds.push_back({m.fan.rays[r], b});
        }
        alts.push_back(std::move(conds));
      }
    }
  }
  return dd;
}

}  // namespace

SheafSpec log_twist_sheaf(const ToricModel& m, const CellComplex& cc, const ToricDivisor& d,
                          int p) {
  SheafSpec s;
  s.kind = SheafSpec::diagonal_chart;
  s.p = p;
  s.diag = log_bounds(m, cc, {d}, p);
  return s;
}

SheafSpec log_twist_union_sheaf(const ToricModel& m, const CellComplex& cc,
                                const std::vector<ToricDivisor>& gens, int p) {
  if (gens.empty()) return zero_sheaf(p);
  SheafSpec s;
  s.kind = SheafSpec::diagonal_chart;
  s.p = p;
  s.diag = log_bounds(m, cc, gens, p);
  return s;
}

SheafSpec kontsevich_sheaf(const ToricModel& m, const CellComplex& cc, const Rat& alpha, int p) {
  if (alpha < 0 || alpha >= 1) throw Error("kontsevich_sheaf: alpha must lie in [0,1)");
  ToricDivisor da = floor_divisor(alpha, m.pole());
  SheafSpec s;
  s.kind = SheafSpec::kernel;
  s.p = p;
  s.diag = log_bounds(m, cc, {da}, p);
  if (p + 1 <= cc.rank) s.target = log_bounds(m, cc, {da}, p + 1);
  s.f = m.f;
  return s;
}

SheafSpec zero_sheaf(int p) {
  SheafSpec s;
  s.kind = SheafSpec::zero;
  s.p = p;
  return s;
}

namespace {

// chart exponents of a character in the cell frame
LatticePoint chart_exponents(const Cell& cell, const LatticePoint& a) {
  LatticePoint s(cell.basis.size());
  for (size_t i = 0; i < cell.basis.size(); ++i) s[i] = dot(a, cell.dual_rays[i]);
  return s;
}

// df wedge on a chart monomial: the terms (i, w, coeff) with target wedge
// J u {i} and character a + w.
struct DfTerm {
  int coord;
  LatticePoint shift;
  Rat coeff;
};

std::vector<DfTerm> df_terms(const Cell& cell, const LaurentPolynomial& f) {
  std::vector<DfTerm> out;
  for (auto& [w, c] : f.terms()) {
    LatticePoint wch = chart_exponents(cell, w);
    for (int i = 0; i < (int)wch.size(); ++i)
      if (wch[i] != 0) out.push_back({i, w, c * Rat((long)wch[i])});
  }
  return out;
}

CellSection chart_monomial_to_global(const Cell& cell, int jmask, const LatticePoint& a,
                                     const Rat& coeff, int n, int p) {
  CellSection s;
  for (int k : masks_of_size(n, p)) {
    int64_t minor = wedge_minor(cell, jmask, k);
    if (minor != 0) s.parts.push_back({k, a, coeff * Rat((long)minor)});
  }
  return s;
}

}  // namespace

bool diag_allowed(const SheafSpec& spec, const CellComplex& cc, int cell, int chart_mask,
                  const LatticePoint& a) {
  if (spec.kind == SheafSpec::zero) return false;
  if (spec.kind == SheafSpec::diagonal_chart) return spec.diag.allowed(cell, chart_mask, a);
  if (spec.kind != SheafSpec::kernel) throw Error("diag_allowed: unsupported spec kind");
  if (!spec.diag.allowed(cell, chart_mask, a)) return false;
  if (spec.f.term_count() > 1)
    throw Error("diag_allowed: kernel conditions are diagonal only for monomial f");
  if (spec.p + 1 > cc.rank || spec.f.is_zero()) return true;
  const Cell& c = cc.cells[cell];
  for (auto& t : df_terms(c, spec.f)) {
    if (chart_mask & (1 << t.coord)) continue;
    if (!spec.target.allowed(cell, chart_mask | (1 << t.coord), add(a, t.shift))) return false;
  }
  return true;
}

std::vector<CellSection> cell_sections(const SheafSpec& spec, const CellComplex& cc, int cell,
                                       const Box& box) {
  std::vector<CellSection> out;
  if (spec.kind == SheafSpec::zero) return out;
  const Cell& c = cc.cells[cell];
  int n = cc.rank;

  if (spec.kind == SheafSpec::diagonal_global) {
    for (int k : masks_of_size(n, spec.p)) {
      box.each([&](const LatticePoint& a) {
        if (spec.diag.allowed(cell, k, a)) {
          CellSection s;
          s.parts.push_back({k, a, Rat(1)});
          out.push_back(std::move(s));
        }
      });
    }
    return out;
  }

  if (spec.kind == SheafSpec::diagonal_chart) {
    for (int j : masks_of_size(n, spec.p)) {
      box.each([&](const LatticePoint& a) {
        if (spec.diag.allowed(cell, j, a))
          out.push_back(chart_monomial_to_global(c, j, a, Rat(1), n, spec.p));
      });
    }
    return out;
  }

  // kernel sheaf: base monomials in the box subject to df ^ w staying inside
  // the target log module
  std::vector<std::pair<int, LatticePoint>> domain;  // (jmask, char)
  for (int j : masks_of_size(n, spec.p)) {
    box.each([&](const LatticePoint& a) {
      if (spec.diag.allowed(cell, j, a)) domain.push_back({j, a});
    });
  }
  if (spec.p + 1 > n || spec.f.is_zero()) {
    for (auto& [j, a] : domain)
      out.push_back(chart_monomial_to_global(c, j, a, Rat(1), n, spec.p));
    return out;
  }
  auto terms = df_terms(c, spec.f);
  std::map<std::pair<int, LatticePoint>, int> rows;
  std::vector<std::tuple<int, int, Rat>> entries;  // (row, col, coeff)
  for (int col = 0; col < (int)domain.size(); ++col) {
    auto& [j, a] = domain[col];
    for (auto& t : terms) {
      if (j & (1 << t.coord)) continue;
      int jt = j | (1 << t.coord);
      LatticePoint b = add(a, t.shift);
      if (spec.target.allowed(cell, jt, b)) continue;
      auto key = std::make_pair(jt, b);
      auto [it, fresh] = rows.try_emplace(key, (int)rows.size());
      entries.push_back({it->second, col, t.coeff * Rat(wedge_sign(t.coord, j))});
    }
  }
  SparseMatrix cond((int)rows.size(), (int)domain.size());
  for (auto& [r, cl, v] : entries) cond.add(r, cl, v);
  for (auto& kv : cond.kernel_basis()) {
    CellSection s;
    std::map<std::pair<int, LatticePoint>, Rat> acc;
    for (auto& [col, coeff] : kv) {
      auto& [j, a] = domain[col];
      for (int k : masks_of_size(n, spec.p)) {
        int64_t minor = wedge_minor(c, j, k);
        if (minor != 0) acc[{k, a}] += coeff * Rat((long)minor);
      }
    }
    for (auto& [key, v] : acc)
      if (v != 0) s.parts.push_back({key.first, key.second, v});
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace irrhodge
