#pragma once

#include "irrhodge/sparse_matrix.hpp"
#include "irrhodge/toric_model.hpp"

namespace irrhodge {

/// Differential of the twisted complexes: d + df, df, or d alone.
enum class DifferentialKind { deRham, higgs, dOnly, none };

/// Exponent box [lo_i, hi_i] per axis.
struct Box {
  std::vector<std::pair<int64_t, int64_t>> range;

  static Box centered(int rank, int64_t n) {
    Box b;
    b.range.assign(rank, {-n, n});
    return b;
  }
  bool contains(const LatticePoint& a) const {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] < range[i].first || a[i] > range[i].second) return false;
    return true;
  }
  int64_t count() const {
    int64_t c = 1;
    for (auto& [lo, hi] : range) c *= (hi - lo + 1);
    return c;
  }
  template <class F>
  void each(F&& f) const {
    LatticePoint a(range.size());
    each_rec(0, a, f);
  }

 private:
  template <class F>
  void each_rec(size_t i, LatticePoint& a, F&& f) const {
    if (i == range.size()) {
      f(a);
      return;
    }
    for (int64_t x = range[i].first; x <= range[i].second; ++x) {
      a[i] = x;
      each_rec(i + 1, a, f);
    }
  }
};

/// A cone of the fan viewed as an affine chart piece, with an adapted
/// unimodular basis of the character lattice. Chart coordinate i pairs to 1
/// with dual_rays[i]; coord_ray[i] is the fan ray it cuts out (-1 = free).
struct Cell {
  int id = 0;
  int dim = 0;
  std::vector<int> rays;
  std::vector<LatticePoint> basis;      // rows m_i
  std::vector<LatticePoint> dual_rays;  // n_i with <m_j, n_i> = delta_ij
  std::vector<int> coord_ray;
};

/// All cones of the fan arranged as the cochain complex computing sheaf
/// cohomology: C^q runs over cones of dimension rank - q.
struct CellComplex {
  int rank = 1;
  std::vector<Cell> cells;
  std::vector<std::vector<int>> by_q;
  std::vector<std::vector<std::pair<int, int>>> faces;  // cell -> (target cell, sign)

  static CellComplex build(const Fan& fan);
};

/// Monomial section conditions, diagonal either in the chart frame or in the
/// global torus frame. allowed = exists an alternative whose pairings all hold.
struct DiagonalData {
  // bounds[cell][mask] = alternatives; alternative = list of (ray vector, bound)
  std::vector<std::vector<std::vector<std::vector<std::pair<LatticePoint, int64_t>>>>> bounds;

  bool allowed(int cell, int mask, const LatticePoint& a) const {
    for (auto& alt : bounds[cell][mask]) {
      bool ok = true;
      for (auto& [v, b] : alt)
        if (dot(a, v) < b) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }
};

/// One graded component of a filtered complex: a coherent subsheaf of the
/// log forms cut out by monomial bounds, possibly as a df-kernel.
struct SheafSpec {
  enum Kind { zero, diagonal_chart, diagonal_global, kernel };
  Kind kind = zero;
  int p = 0;
  DiagonalData diag;    // chart-frame bounds (diagonal_chart, kernel base)
  DiagonalData target;  // kernel: bounds of the p+1 log module
  LaurentPolynomial f;  // kernel: membership via df wedge
};

/// Section basis vector over one cell, in global torus-frame coordinates.
struct CellSection {
  std::vector<std::tuple<int, LatticePoint, Rat>> parts;  // (global mask, char, coeff)
};

int wedge_sign(int i, int mask);
std::vector<int> masks_of_size(int n, int p);

/// Minor det of the cell basis: rows J, columns K (|J| = |K| <= 2).
int64_t wedge_minor(const Cell& cell, int jmask, int kmask);

/// Chart coordinates of a global-frame wedge vector (columns = chart wedges).
/// For p in {0..rank} the transform is unimodular.
std::vector<std::vector<int64_t>> wedge_to_chart_matrix(const Cell& cell, int p);

CellComplex build_cells(const Fan& fan);

/// Omega^p(log S)(D) with integral D.
SheafSpec log_twist_sheaf(const ToricModel& m, const CellComplex& cc, const ToricDivisor& d,
                          int p);

/// Sum of O(D_g) x Omega^p(log S): one alternative per generator divisor.
SheafSpec log_twist_union_sheaf(const ToricModel& m, const CellComplex& cc,
                                const std::vector<ToricDivisor>& gens, int p);

/// The Kontsevich sheaf Omega_f^p(alpha) as a kernel spec.
SheafSpec kontsevich_sheaf(const ToricModel& m, const CellComplex& cc, const Rat& alpha, int p);

SheafSpec zero_sheaf(int p);

/// Section space of the spec over one cell within the box.
std::vector<CellSection> cell_sections(const SheafSpec& spec, const CellComplex& cc, int cell,
                                       const Box& box);

/// Per-(mask, character) membership for diagonal specs and monomial-f kernels
/// (used by the per-character exact path).
bool diag_allowed(const SheafSpec& spec, const CellComplex& cc, int cell, int chart_mask,
                  const LatticePoint& a);

}  // namespace irrhodge
