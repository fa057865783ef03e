#pragma once

#include "irrhodge/sheaf.hpp"

namespace irrhodge {

/// A bounded complex of sheaf components with a twisted differential,
/// realized on the cell complex of the model's fan.
struct ComplexSpec {
  const ToricModel* model = nullptr;
  const CellComplex* cells = nullptr;
  std::vector<SheafSpec> components;  // indexed by form degree p, size rank+1
  DifferentialKind theta = DifferentialKind::none;
};

/// Truncation schedule: accept when N and N+1 agree, else grow geometrically.
struct TruncationPolicy {
  int64_t start = 8;
  int64_t cap = 512;
};

/// 4 * (max pole multiplicity + max support degree), at least 4.
TruncationPolicy default_policy(const ToricModel& m);

/// Box-truncated total-complex machinery. Columns of T^k are section basis
/// vectors over single cells; cocycles and coboundaries live in a shared
/// ambient slot space (p, cell, mask, character).
class HyperAssembly {
 public:
  HyperAssembly(const ComplexSpec& spec, Box box);

  /// dim of ker(D)|_{T^k} modulo D(T^{k-1}) inside the box.
  int dim_h(int k);

  /// dim of the image of classes from a subcomplex, modulo this complex's
  /// coboundaries. The subcomplex must be slot-compatible (same model).
  int image_dim(int k, const ComplexSpec& sub);

  /// Is the (already D-closed) ambient vector a coboundary?
  bool is_coboundary(int k, const SparseVec& z);

  /// Ambient encoding of a section over one cell at form degree p.
  SparseVec ambient(int p, int cell, const CellSection& s);
  SparseVec apply_d(int p, int cell, const CellSection& s);
  /// Cocycle basis of T^k as ambient vectors.
  std::vector<SparseVec> cocycles(int k);
  std::vector<SparseVec> coboundaries(int k);
  /// Verify z is D-closed (all slots of D z vanish).
  bool is_cocycle(int p, int cell, const CellSection& s);

  int slot_count() const { return next_slot_; }

 private:
  struct Degree {
    bool built = false;
    std::vector<std::pair<int, int>> tags;  // (p, cell) per column
    std::vector<CellSection> sections;
    std::vector<SparseVec> cols;   // ambient vectors
    std::vector<SparseVec> dcols;  // D images
  };
  Degree& degree(int k);
  int slot(int p, int cell, int mask, const LatticePoint& a);

  ComplexSpec spec_;
  Box box_;
  std::map<std::tuple<int, int, int, LatticePoint>, int> slots_;
  int next_slot_ = 0;
  std::map<int, Degree> degrees_;
};

struct StabilizedDims {
  std::vector<int> dims;
  int64_t n_used = 0;
};

/// Dims of the hypercohomology in all total degrees, stabilized over boxes.
StabilizedDims hyper_dims(const ComplexSpec& spec, const TruncationPolicy& pol);

/// Image dims of H(sub) -> H(full) per degree, stabilized.
StabilizedDims hyper_image_dims(const ComplexSpec& sub, const ComplexSpec& full,
                                const TruncationPolicy& pol);

/// Exact per-character sheaf cohomology for torus-equivariant specs
/// (diagonal data, or kernels of monomial f).
std::vector<int> equivariant_sheaf_cohomology(const ToricModel& m, const CellComplex& cc,
                                              const SheafSpec& spec);

/// Sheaf cohomology of one component via the box-truncated cell complex.
StabilizedDims truncated_sheaf_cohomology(const ToricModel& m, const CellComplex& cc,
                                          const SheafSpec& spec, const TruncationPolicy& pol);

}  // namespace irrhodge
