#pragma once

#include <map>
#include <optional>
#include <vector>

#include "irrhodge/rational.hpp"

namespace irrhodge {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_normalize(std::map<int, Rat> m);

/// Exact sparse matrix over Q. No stored zeros, indices in bounds.
///
/// rank/kernel use fraction-free Bareiss elimination (Gauss-Jordan form,
/// single-step exact division) with the deterministic pivot rule: among the
/// entries of maximal magnitude pick the smallest row, then column index.
/// Independent row/column blocks are eliminated separately; results do not
/// depend on the block order.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rat& v);
  void add(int r, int c, const Rat& v);
  Rat at(int r, int c) const;
  int64_t nnz() const;

  const std::map<int, Rat>& row(int r) const { return data_[r]; }

  SparseMatrix transpose() const;

  int rank() const;
  /// Basis of the right kernel, ordered by free-column index; each vector is
  /// primitive integral with positive leading entry.
  std::vector<SparseVec> kernel_basis() const;
  int cokernel_dim() const { return rows_ - rank(); }

  /// M * v with v indexed by columns.
  SparseVec apply(const SparseVec& v) const;

 private:
  int rows_, cols_;
  std::vector<std::map<int, Rat>> data_;
};

/// dim of the span of quotient_map * g over the generators g.
/// Throws on generator index out of range.
int subspace_image_dim(const std::vector<SparseVec>& generators,
                       const SparseMatrix& quotient_map);

/// Matrix whose columns are the given sparse vectors.
SparseMatrix columns_matrix(int nrows, const std::vector<SparseVec>& cols);

int rank_of_columns(int nrows, const std::vector<SparseVec>& cols);

/// rank([A | B]) for column lists A, B.
int rank_of_columns2(int nrows, const std::vector<SparseVec>& a,
                     const std::vector<SparseVec>& b);

/// Solves sum_i x_i cols[i] = target exactly; nullopt if unsolvable.
std::optional<std::vector<Rat>> solve_in_span(int nrows,
                                              const std::vector<SparseVec>& cols,
                                              const SparseVec& target);

inline bool in_span(int nrows, const std::vector<SparseVec>& cols,
                    const SparseVec& target) {
  std::vector<SparseVec> t{target};
  return rank_of_columns2(nrows, cols, t) == rank_of_columns(nrows, cols);
}

}  // namespace irrhodge
