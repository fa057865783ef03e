#include "irrhodge/cech.hpp"

#include <algorithm>
#include <sstream>

namespace irrhodge {

TruncationPolicy default_policy(const ToricModel& m) {
  int64_t maxmult = 0;
  for (auto& [r, v] : m.pole().coeffs) maxmult = std::max(maxmult, to_long(v.get_num()));
  TruncationPolicy pol;
  pol.start = std::max<int64_t>(4, 4 * (maxmult + m.f.max_support_abs()));
  return pol;
}

HyperAssembly::HyperAssembly(const ComplexSpec& spec, Box box)
    : spec_(spec), box_(std::move(box)) {
  if ((int)spec_.components.size() != spec_.cells->rank + 1)
    throw Error("complex needs rank+1 components");
}

int HyperAssembly::slot(int p, int cell, int mask, const LatticePoint& a) {
  auto key = std::make_tuple(p, cell, mask, a);
  auto [it, fresh] = slots_.try_emplace(key, next_slot_);
  if (fresh) next_slot_++;
  return it->second;
}

SparseVec HyperAssembly::ambient(int p, int cell, const CellSection& s) {
  std::map<int, Rat> acc;
  for (auto& [mask, a, c] : s.parts) acc[slot(p, cell, mask, a)] += c;
  return sparse_normalize(std::move(acc));
}

SparseVec HyperAssembly::apply_d(int p, int cell, const CellSection& s) {
  const CellComplex& cc = *spec_.cells;
  int rank = cc.rank;
  int q = rank - cc.cells[cell].dim;
  std::map<int, Rat> acc;
  // Cech part
  for (auto& [cell2, sgn] : cc.faces[cell])
    for (auto& [mask, a, c] : s.parts) acc[slot(p, cell2, mask, a)] += c * Rat(sgn);
  // twisted part, sign (-1)^q
  DifferentialKind th = spec_.theta;
  if (th != DifferentialKind::none && p + 1 <= rank) {
    if (spec_.components[p + 1].kind == SheafSpec::zero) {
      // images must vanish for the complex to be well formed; d and df both
      // kill nothing generically, so forbid this shape outright
      throw Error("complex has a zero component above a nonzero one");
    }
    Rat sq(q % 2 == 0 ? 1 : -1);
    bool with_d = th == DifferentialKind::deRham || th == DifferentialKind::dOnly;
    bool with_df = th == DifferentialKind::deRham || th == DifferentialKind::higgs;
    for (auto& [mask, a, c] : s.parts) {
      if (with_d) {
        for (int i = 0; i < rank; ++i) {
          if (mask & (1 << i)) continue;
          if (a[i] == 0) continue;
          acc[slot(p + 1, cell, mask | (1 << i), a)] +=
              c * sq * Rat((long)a[i]) * Rat(wedge_sign(i, mask));
        }
      }
      if (with_df) {
        for (auto& [w, cw] : spec_.model->f.terms()) {
          for (int i = 0; i < rank; ++i) {
            if (mask & (1 << i)) continue;
            if (w[i] == 0) continue;
            acc[slot(p + 1, cell, mask | (1 << i), add(a, w))] +=
                c * sq * cw * Rat((long)w[i]) * Rat(wedge_sign(i, mask));
          }
        }
      }
    }
  }
  return sparse_normalize(std::move(acc));
}

HyperAssembly::Degree& HyperAssembly::degree(int k) {
  Degree& d = degrees_[k];
  if (d.built) return d;
  d.built = true;
  const CellComplex& cc = *spec_.cells;
  int rank = cc.rank;
  for (int q = 0; q <= rank; ++q) {
    int p = k - q;
    if (p < 0 || p > rank) continue;
    const SheafSpec& sheaf = spec_.components[p];
    if (sheaf.kind == SheafSpec::zero) continue;
    for (int cell : cc.by_q[q]) {
      for (auto& sec : cell_sections(sheaf, cc, cell, box_)) {
        d.tags.push_back({p, cell});
        d.cols.push_back(ambient(p, cell, sec));
        d.dcols.push_back(apply_d(p, cell, sec));
        d.sections.push_back(sec);
      }
    }
  }
  return d;
}

std::vector<SparseVec> HyperAssembly::cocycles(int k) {
  Degree& d = degree(k);
  SparseMatrix m(next_slot_, (int)d.cols.size());
  // rows grow while building dcols; rebuild against the final slot count
  for (int j = 0; j < (int)d.dcols.size(); ++j)
    for (auto& [i, v] : d.dcols[j]) m.set(i, j, v);
  std::vector<SparseVec> out;
  for (auto& kv : m.kernel_basis()) {
    std::map<int, Rat> acc;
    for (auto& [j, c] : kv)
      for (auto& [i, v] : d.cols[j]) acc[i] += c * v;
    out.push_back(sparse_normalize(std::move(acc)));
  }
  return out;
}

std::vector<SparseVec> HyperAssembly::coboundaries(int k) {
  Degree& d = degree(k - 1);
  std::vector<SparseVec> out;
  for (auto& v : d.dcols)
    if (!v.empty()) out.push_back(v);
  return out;
}

int HyperAssembly::dim_h(int k) {
  auto v = cocycles(k);
  auto w = coboundaries(k);
  return rank_of_columns2(next_slot_, v, w) - rank_of_columns(next_slot_, w);
}

int HyperAssembly::image_dim(int k, const ComplexSpec& sub) {
  // cocycles of the subcomplex, as vectors in this ambient
  HyperAssembly subasm(sub, box_);
  // share slots: rebuild sub columns through our slot map
  auto& sd = subasm.degree(k);
  std::vector<SparseVec> subcols, subd;
  for (size_t j = 0; j < sd.sections.size(); ++j) {
    auto [p, cell] = sd.tags[j];
    subcols.push_back(ambient(p, cell, sd.sections[j]));
    subd.push_back(apply_d(p, cell, sd.sections[j]));
  }
  SparseMatrix m(next_slot_, (int)subcols.size());
  for (int j = 0; j < (int)subd.size(); ++j)
    for (auto& [i, v] : subd[j]) m.set(i, j, v);
  std::vector<SparseVec> v;
  for (auto& kv : m.kernel_basis()) {
    std::map<int, Rat> acc;
    for (auto& [j, c] : kv)
      for (auto& [i, val] : subcols[j]) acc[i] += c * val;
    v.push_back(sparse_normalize(std::move(acc)));
  }
  auto w = coboundaries(k);
  return rank_of_columns2(next_slot_, v, w) - rank_of_columns(next_slot_, w);
}

bool HyperAssembly::is_coboundary(int k, const SparseVec& z) {
  auto w = coboundaries(k);
  return rank_of_columns2(next_slot_, w, {z}) == rank_of_columns(next_slot_, w);
}

bool HyperAssembly::is_cocycle(int p, int cell, const CellSection& s) {
  return apply_d(p, cell, s).empty();
}

namespace {

std::string dims_str(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

StabilizedDims hyper_dims(const ComplexSpec& spec, const TruncationPolicy& pol) {
  int rank = spec.cells->rank;
  for (int64_t n = pol.start; n <= pol.cap; n *= 2) {
    std::vector<int> a, b;
    for (int64_t nn : {n, n + 1}) {
      HyperAssembly asmb(spec, Box::centered(rank, nn));
      std::vector<int>& out = (nn == n) ? a : b;
      for (int k = 0; k <= 2 * rank; ++k) out.push_back(asmb.dim_h(k));
    }
    if (a == b) return {a, n};
    if (2 * n > pol.cap)
      throw StabilizationError("hypercohomology not stabilized at N=" + std::to_string(n) +
                               ": [" + dims_str(a) + "] vs [" + dims_str(b) + "]");
  }
  throw StabilizationError("hypercohomology truncation cap exhausted");
}

StabilizedDims hyper_image_dims(const ComplexSpec& sub, const ComplexSpec& full,
                                const TruncationPolicy& pol) {
  int rank = full.cells->rank;
  for (int64_t n = pol.start; n <= pol.cap; n *= 2) {
    std::vector<int> a, b;
    for (int64_t nn : {n, n + 1}) {
      HyperAssembly asmb(full, Box::centered(rank, nn));
      std::vector<int>& out = (nn == n) ? a : b;
      for (int k = 0; k <= 2 * rank; ++k) out.push_back(asmb.image_dim(k, sub));
    }
    if (a == b) return {a, n};
    if (2 * n > pol.cap)
      throw StabilizationError("image dims not stabilized at N=" + std::to_string(n) + ": [" +
                               dims_str(a) + "] vs [" + dims_str(b) + "]");
  }
  throw StabilizationError("image dims truncation cap exhausted");
}

StabilizedDims truncated_sheaf_cohomology(const ToricModel& m, const CellComplex& cc,
                                          const SheafSpec& spec, const TruncationPolicy& pol) {
  ComplexSpec cs;
  cs.model = &m;
  cs.cells = &cc;
  cs.theta = DifferentialKind::none;
  cs.components.assign(cc.rank + 1, zero_sheaf(0));
  for (int p = 0; p <= cc.rank; ++p) cs.components[p].p = p;
  cs.components[spec.p] = spec;
  StabilizedDims sd = hyper_dims(cs, pol);
  // total degree k = spec.p + q
  std::vector<int> h(cc.rank + 1, 0);
  for (int q = 0; q <= cc.rank; ++q) h[q] = sd.dims[spec.p + q];
  return {h, sd.n_used};
}

std::vector<int> equivariant_sheaf_cohomology(const ToricModel& m, const CellComplex& cc,
                                              const SheafSpec& spec) {
  int rank = cc.rank;
  std::vector<int> zero(rank + 1, 0);
  if (spec.kind == SheafSpec::zero) return zero;
  if (spec.kind == SheafSpec::kernel && spec.f.term_count() > 1)
    throw Error("equivariant path needs monomial f");

  // certified bound from the arrangement of all condition lines
  std::vector<std::pair<LatticePoint, Rat>> lines;
  auto collect = [&](const DiagonalData& dd, const LatticePoint& shift) {
    for (auto& per_cell : dd.bounds)
      for (auto& per_mask : per_cell)
        for (auto& alt : per_mask)
          for (auto& [v, b] : alt) lines.push_back({v, Rat((long)(b - dot(shift, v)))});
  };
  collect(spec.diag, LatticePoint(rank, 0));
  if (spec.kind == SheafSpec::kernel && !spec.f.is_zero())
    for (auto& [w, c] : spec.f.terms()) collect(spec.target, w);

  Rat best(0);
  auto consider = [&](const Rat& x) {
    Rat ax = x < 0 ? -x : x;
    if (ax > best) best = ax;
  };
  if (rank == 1) {
    for (auto& [v, b] : lines) consider(b / Rat((long)v[0]));
  } else {
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i + 1; j < lines.size(); ++j) {
        int64_t det = cross(lines[i].first, lines[j].first);
        if (det == 0) continue;
        const auto &v1 = lines[i].first, &v2 = lines[j].first;
        Rat b1 = lines[i].second, b2 = lines[j].second;
        consider((b1 * Rat((long)v2[1]) - b2 * Rat((long)v1[1])) / Rat((long)det));
        consider((b2 * Rat((long)v1[0]) - b1 * Rat((long)v2[0])) / Rat((long)det));
      }
  }
  int64_t bound = to_long(rat_ceil(best)) + 2;

  // chart-wedge transforms per cell
  int p = spec.p;
  auto masks = masks_of_size(rank, p);
  std::vector<std::vector<std::vector<int64_t>>> to_chart(cc.cells.size());
  for (auto& cell : cc.cells) to_chart[cell.id] = wedge_to_chart_matrix(cell, p);

  for (int attempt = 0; attempt < 8; ++attempt, bound *= 2) {
    std::vector<int> h(rank + 1, 0);
    bool margin_clean = true;
    Box box = Box::centered(rank, bound);
    box.each([&](const LatticePoint& a) {
      // allowed wedge lists per q
      std::vector<std::vector<std::pair<int, int>>> cols(rank + 1);  // (cell, mask index)
      for (int q = 0; q <= rank; ++q)
        for (int cell : cc.by_q[q])
          for (int mi = 0; mi < (int)masks.size(); ++mi)
            if (diag_allowed(spec, cc, cell, masks[mi], a)) cols[q].push_back({cell, mi});
      std::vector<int> ranks(rank + 1, 0);
      for (int q = 0; q < rank; ++q) {
        if (cols[q].empty() || cols[q + 1].empty()) {
          if (!cols[q].empty()) {
            // map to empty target must be zero: restrictions of sections are
            // sections, nothing to rank
          }
          continue;
        }
        std::map<std::pair<int, int>, int> rowid;
        for (int i = 0; i < (int)cols[q + 1].size(); ++i) rowid[cols[q + 1][i]] = i;
        SparseMatrix mx((int)cols[q + 1].size(), (int)cols[q].size());
        for (int j = 0; j < (int)cols[q].size(); ++j) {
          auto [cell, mi] = cols[q][j];
          // global coefficients of this chart wedge
          std::vector<int64_t> g(masks.size());
          for (int k = 0; k < (int)masks.size(); ++k)
            g[k] = wedge_minor(cc.cells[cell], masks[mi], masks[k]);
          for (auto& [cell2, sgn] : cc.faces[cell]) {
            auto& winv = to_chart[cell2];
            for (int j2 = 0; j2 < (int)masks.size(); ++j2) {
              int64_t val = 0;
              for (int k = 0; k < (int)masks.size(); ++k) val += winv[j2][k] * g[k];
              if (val == 0) continue;
              auto it = rowid.find({cell2, j2});
              if (it == rowid.end())
                throw Error("restriction left the section space (internal)");
              mx.add(it->second, j, Rat((long)(sgn * val)));
            }
          }
        }
        ranks[q] = mx.rank();
      }
      bool on_margin = false;
      for (int i = 0; i < rank; ++i)
        if (std::abs(a[i]) >= bound - 1) on_margin = true;
      for (int q = 0; q <= rank; ++q) {
        int hq = (int)cols[q].size() - ranks[q] - (q > 0 ? ranks[q - 1] : 0);
        if (hq < 0) throw Error("negative cohomology contribution (internal)");
        if (hq > 0 && on_margin) margin_clean = false;
        h[q] += hq;
      }
    });
    if (margin_clean) return h;
  }
  throw Error("equivariant enumeration bound failed to certify");
}

}  // namespace irrhodge
