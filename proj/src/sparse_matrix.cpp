#include "irrhodge/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace irrhodge {

Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  q.canonicalize();
  return q;
}

SparseVec sparse_normalize(std::map<int, Rat> m) {
  SparseVec v;
  v.reserve(m.size());
  for (auto& [i, x] : m)
    if (x != 0) v.emplace_back(i, x);
  return v;
}

void SparseMatrix::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of bounds");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Rat& v) {
  if (v == 0) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of bounds");
  Rat& e = data_[r][c];
  e += v;
  if (e == 0) data_[r].erase(c);
}

Rat SparseMatrix::at(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rat(0) : it->second;
}

int64_t SparseMatrix::nnz() const {
  int64_t n = 0;
  for (auto& row : data_) n += (int64_t)row.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (auto& [c, v] : data_[r]) t.data_[c][r] = v;
  return t;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  for (auto& [c, x] : v)
    if (c < 0 || c >= cols_) throw Error("vector index out of bounds");
  std::map<int, Rat> out;
  for (int r = 0; r < rows_; ++r) {
    const auto& row = data_[r];
    if (row.empty()) continue;
    Rat dot(0);
    if (row.size() < v.size()) {
      for (auto& [c, a] : row) {
        auto it = std::lower_bound(v.begin(), v.end(), c,
                                   [](const auto& p, int key) { return p.first < key; });
        if (it != v.end() && it->first == c) dot += a * it->second;
      }
    } else {
      for (auto& [c, x] : v) {
        auto it = row.find(c);
        if (it != row.end()) dot += it->second * x;
      }
    }
    if (dot != 0) out[r] = dot;
  }
  return sparse_normalize(std::move(out));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

using IntRow = std::map<int, Int>;

// Clears denominators; kernel and rank are unaffected by row scaling.
IntRow scale_row(const std::map<int, Rat>& row) {
  Int l = 1;
  for (auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  for (auto& [c, v] : row) {
    Rat s = v * l;
    out[c] = s.get_num();
  }
  return out;
}

struct Elimination {
  // Fraction-free Bareiss (Gaussian form). Rows not meeting a pivot column
  // keep a lazy "level"; the deferred passive scalings telescope to
  // row * p_{k-1} / p_{level}, which stays an exact division.
  // Pivot rule: maximal current magnitude, ties by smallest (row, col).
  std::vector<IntRow> rows;
  std::vector<int> level;                   // last step each row was scaled to
  std::vector<Int> step_pivot;              // step_pivot[k] = p_k, p_0 = 1
  std::vector<std::pair<int, int>> pivots;  // (row slot, col)
  std::vector<bool> pivot_col_used;

  explicit Elimination(std::vector<IntRow> rs, int ncols)
      : rows(std::move(rs)),
        level(rows.size(), 0),
        step_pivot{Int(1)},
        pivot_col_used(ncols, false) {}

  // Rescale a row to the step-k frame it should be in.
  void bring_current(size_t r, int k) {
    if (level[r] == k) return;
    const Int& num = step_pivot[k];
    const Int& den = step_pivot[level[r]];
    for (auto& [c, v] : rows[r]) {
      v *= num;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
    }
    level[r] = k;
  }

  void run() {
    std::vector<bool> row_used(rows.size(), false);
    for (;;) {
      int k = (int)pivots.size();
      int br = -1, bc = -1;
      Int best_abs;  // magnitude in the current (step-k) frame
      bool unit_k = mpz_cmpabs_ui(step_pivot[k].get_mpz_t(), 1) == 0;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (row_used[r]) continue;
        bool plain = level[r] == k ||
                     (unit_k && mpz_cmpabs_ui(step_pivot[level[r]].get_mpz_t(), 1) == 0);
        for (auto& [c, v] : rows[r]) {
          if (pivot_col_used[c]) continue;
          Int cur;
          if (plain) {
            cur = abs(v);
          } else {
            cur = abs(v) * abs(step_pivot[k]);
            Int den = abs(step_pivot[level[r]]);
            mpz_divexact(cur.get_mpz_t(), cur.get_mpz_t(), den.get_mpz_t());
          }
          if (br < 0 || cur > best_abs) {
            br = (int)r;
            bc = c;
            best_abs = cur;
          }
        }
      }
      if (br < 0) break;
      bring_current(br, k);
      Int p = rows[br].at(bc);
      for (size_t r = 0; r < rows.size(); ++r) {
        if ((int)r == br || row_used[r]) continue;
        auto it = rows[r].find(bc);
        if (it == rows[r].end()) continue;  // stays at its lazy level
        bring_current(r, k);
        Int a = it->second;
        const Int& prev = step_pivot[k];
        IntRow next;
        auto itr = rows[r].begin();
        auto itp = rows[br].begin();
        while (itr != rows[r].end() || itp != rows[br].end()) {
          int c;
          Int val;
          if (itp == rows[br].end() || (itr != rows[r].end() && itr->first < itp->first)) {
            c = itr->first;
            val = p * itr->second;
            ++itr;
          } else if (itr == rows[r].end() || itp->first < itr->first) {
            c = itp->first;
            val = -a * itp->second;
            ++itp;
          } else {
            c = itr->first;
            val = p * itr->second - a * itp->second;
            ++itr;
            ++itp;
          }
          if (val != 0) {
            Int q;
            mpz_divexact(q.get_mpz_t(), val.get_mpz_t(), prev.get_mpz_t());
            next[c] = q;
          }
        }
        rows[r] = std::move(next);
        level[r] = k + 1;
      }
      row_used[br] = true;
      pivot_col_used[bc] = true;
      pivots.emplace_back(br, bc);
      step_pivot.push_back(p);
    }
  }
};

// Sign/content normalization: primitive integral, first nonzero positive.
SparseVec normalize_kernel_vector(std::map<int, Rat> m) {
  SparseVec v = sparse_normalize(std::move(m));
  if (v.empty()) return v;
  Int l = 1, g = 0;
  for (auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& [i, x] : v) {
    Rat s = x * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  Rat scale = make_rat(l, g);
  if (v.front().second < 0) scale = -scale;
  for (auto& [i, x] : v) x *= scale;
  return v;
}

}  // namespace

int SparseMatrix::rank() const {
  // Independent blocks found via union-find on the nonzero pattern.
  UnionFind uf(cols_);
  for (int r = 0; r < rows_; ++r) {
    if (data_[r].empty()) continue;
    int c0 = data_[r].begin()->first;
    for (auto& [c, v] : data_[r]) uf.unite(c0, c);
  }
  std::map<int, std::vector<IntRow>> blocks;
  for (int r = 0; r < rows_; ++r) {
    if (data_[r].empty()) continue;
    blocks[uf.find(data_[r].begin()->first)].push_back(scale_row(data_[r]));
  }
  int rk = 0;
  for (auto& [root, rs] : blocks) {
    Elimination e(std::move(rs), cols_);
    e.run();
    rk += (int)e.pivots.size();
  }
  return rk;
}

std::vector<SparseVec> SparseMatrix::kernel_basis() const {
  UnionFind uf(cols_);
  for (int r = 0; r < rows_; ++r) {
    if (data_[r].empty()) continue;
    int c0 = data_[r].begin()->first;
    for (auto& [c, v] : data_[r]) uf.unite(c0, c);
  }
  std::map<int, std::vector<int>> block_rows;
  std::vector<bool> col_constrained(cols_, false);
  for (int r = 0; r < rows_; ++r) {
    if (data_[r].empty()) continue;
    block_rows[uf.find(data_[r].begin()->first)].push_back(r);
    for (auto& [c, v] : data_[r]) col_constrained[c] = true;
  }

  // Per free column: the back-substituted kernel vector.
  std::map<int, std::map<int, Rat>> by_free_col;
  for (int c = 0; c < cols_; ++c)
    if (!col_constrained[c]) by_free_col[c] = {{c, Rat(1)}};

  for (auto& [root, rlist] : block_rows) {
    std::vector<IntRow> rs;
    rs.reserve(rlist.size());
    for (int r : rlist) rs.push_back(scale_row(data_[r]));
    Elimination e(std::move(rs), cols_);
    e.run();
    std::vector<bool> is_pivot_col(cols_, false);
    for (auto& [r, c] : e.pivots) is_pivot_col[c] = true;
    std::vector<int> block_cols;
    for (int c = 0; c < cols_; ++c)
      if (uf.find(c) == root && col_constrained[c]) block_cols.push_back(c);
    for (int cf : block_cols) {
      if (is_pivot_col[cf]) continue;
      // reverse back-substitution: pivot rows are echelon, not fully reduced
      std::map<int, Rat> v;
      v[cf] = 1;
      for (int k = (int)e.pivots.size() - 1; k >= 0; --k) {
        auto [rr, pc] = e.pivots[k];
        const IntRow& row = e.rows[rr];
        Rat s(0);
        for (auto& [c, val] : row) {
          if (c == pc) continue;
          auto it = v.find(c);
          if (it != v.end()) s += Rat(val) * it->second;
        }
        if (s != 0) v[pc] = -s / Rat(row.at(pc));
      }
      by_free_col[cf] = std::move(v);
    }
  }

  std::vector<SparseVec> out;
  out.reserve(by_free_col.size());
  for (auto& [cf, v] : by_free_col) out.push_back(normalize_kernel_vector(std::move(v)));
  return out;
}

SparseMatrix columns_matrix(int nrows, const std::vector<SparseVec>& cols) {
  SparseMatrix m(nrows, (int)cols.size());
  for (int j = 0; j < (int)cols.size(); ++j)
    for (auto& [i, v] : cols[j]) m.set(i, j, v);
  return m;
}

int rank_of_columns(int nrows, const std::vector<SparseVec>& cols) {
  return columns_matrix(nrows, cols).rank();
}

int rank_of_columns2(int nrows, const std::vector<SparseVec>& a,
                     const std::vector<SparseVec>& b) {
  SparseMatrix m(nrows, (int)(a.size() + b.size()));
  for (int j = 0; j < (int)a.size(); ++j)
    for (auto& [i, v] : a[j]) m.set(i, j, v);
  for (int j = 0; j < (int)b.size(); ++j)
    for (auto& [i, v] : b[j]) m.set(i, (int)a.size() + j, v);
  return m.rank();
}

int subspace_image_dim(const std::vector<SparseVec>& generators,
                       const SparseMatrix& quotient_map) {
  std::vector<SparseVec> images;
  images.reserve(generators.size());
  for (auto& g : generators) {
    for (auto& [i, v] : g)
      if (i >= quotient_map.cols()) throw Error("generator length exceeds quotient_map.cols");
    images.push_back(quotient_map.apply(g));
  }
  return rank_of_columns(quotient_map.rows(), images);
}

std::optional<std::vector<Rat>> solve_in_span(int nrows,
                                              const std::vector<SparseVec>& cols,
                                              const SparseVec& target) {
  int n = (int)cols.size();
  SparseMatrix m(nrows, n + 1);
  for (int j = 0; j < n; ++j)
    for (auto& [i, v] : cols[j]) m.set(i, j, v);
  for (auto& [i, v] : target) m.set(i, n, v);
  for (auto& k : m.kernel_basis()) {
    Rat last(0);
    for (auto& [i, v] : k)
      if (i == n) last = v;
    if (last != 0) {
      std::vector<Rat> x(n, Rat(0));
      for (auto& [i, v] : k)
        if (i < n) x[i] = -v / last;
      return x;
    }
  }
  if (target.empty()) return std::vector<Rat>(n, Rat(0));
  return std::nullopt;
}

}  // namespace irrhodge
