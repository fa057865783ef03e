#include <doctest.h>

#include <random>

#include "irrhodge/sparse_matrix.hpp"

using namespace irrhodge;

namespace {

// Independent oracle: dense Gaussian elimination over Q, no pivot strategy.
int dense_rank(const SparseMatrix& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
  for (int r = 0; r < m.rows(); ++r)
    for (auto& [c, v] : m.row(r)) a[r][c] = v;
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[rank][col];
      for (int c2 = 0; c2 < m.cols(); ++c2) a[r][c2] -= f * a[rank][c2];
    }
    rank++;
  }
  return rank;
}

SparseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int fill_percent) {
  SparseMatrix m(rows, cols);
  std::uniform_int_distribution<int> val(-6, 6), den(1, 4), pct(0, 99);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (pct(rng) < fill_percent) m.set(r, c, make_rat(val(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("rank: examples") {
  SparseMatrix id2(2, 2);
  id2.set(0, 0, 1);
  id2.set(1, 1, 1);
  CHECK(id2.rank() == 2);

  SparseMatrix z(3, 4);
  CHECK(z.rank() == 0);

  SparseMatrix m(2, 2);  // [[1,2],[2,4]]: second row is twice the first
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  CHECK(m.rank() == 1);
}

TEST_CASE("kernel_basis: examples") {
  SparseMatrix id2(2, 2);
  id2.set(0, 0, 1);
  id2.set(1, 1, 1);
  CHECK(id2.kernel_basis().empty());

  SparseMatrix z(2, 2);
  auto kb = z.kernel_basis();
  REQUIRE(kb.size() == 2);
  CHECK(kb[0] == SparseVec{{0, Rat(1)}});
  CHECK(kb[1] == SparseVec{{1, Rat(1)}});

  SparseMatrix row(1, 2);  // x + y = 0
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  kb = row.kernel_basis();
  REQUIRE(kb.size() == 1);
  CHECK(kb[0] == SparseVec{{0, Rat(1)}, {1, Rat(-1)}});
}

TEST_CASE("cokernel_dim: examples") {
  SparseMatrix id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
  CHECK(id3.cokernel_dim() == 0);

  SparseMatrix z(3, 1);
  CHECK(z.cokernel_dim() == 3);

  SparseMatrix col(2, 1);  // [[1],[1]] has rank 1
  col.set(0, 0, 1);
  col.set(1, 0, 1);
  CHECK(col.cokernel_dim() == 1);
}

TEST_CASE("subspace_image_dim: examples") {
  SparseMatrix row(1, 2);  // map (x,y) -> x + y
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  // generator spanning the kernel
  CHECK(subspace_image_dim({{{0, Rat(1)}, {1, Rat(-1)}}}, row) == 0);
  // single vector mapping to nonzero
  CHECK(subspace_image_dim({{{0, Rat(1)}}}, row) == 1);

  SparseMatrix id2(2, 2);
  id2.set(0, 0, 1);
  id2.set(1, 1, 1);
  // two vectors with collinear images: rank of stacked images is 1
  CHECK(subspace_image_dim({{{0, Rat(1)}, {1, Rat(2)}}, {{0, Rat(2)}, {1, Rat(4)}}}, id2) == 1);

  CHECK_THROWS_AS(subspace_image_dim({{{5, Rat(1)}}}, id2), Error);
}

TEST_CASE("rank equals transpose rank and matches the dense oracle") {
  std::mt19937_64 rng(20260809);
  for (int t = 0; t < 40; ++t) {
    SparseMatrix m = random_matrix(rng, 1 + (int)(rng() % 8), 1 + (int)(rng() % 8), 40);
    int rk = m.rank();
    CHECK(rk == m.transpose().rank());
    CHECK(rk == dense_rank(m));
    auto kb = m.kernel_basis();
    CHECK((int)kb.size() + rk == m.cols());
    for (auto& v : kb) CHECK(m.apply(v).empty());
  }
}

TEST_CASE("deterministic results across runs") {
  std::mt19937_64 rng(7);
  SparseMatrix m = random_matrix(rng, 10, 12, 35);
  auto k1 = m.kernel_basis();
  auto k2 = m.kernel_basis();
  CHECK(k1 == k2);
  CHECK(m.rank() == m.rank());
}

TEST_CASE("solve_in_span") {
  std::vector<SparseVec> cols = {{{0, Rat(1)}, {1, Rat(1)}}, {{1, Rat(1)}}};
  auto x = solve_in_span(2, cols, {{0, Rat(2)}, {1, Rat(5)}});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK(!solve_in_span(2, {{{0, Rat(1)}}}, {{1, Rat(1)}}).has_value());
  CHECK(in_span(2, cols, {{0, Rat(1)}, {1, Rat(1)}}));
}
