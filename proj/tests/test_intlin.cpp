#include <random>

#include "doctest.h"
#include "lpa/intlin.hpp"

using namespace lpa;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, size_t maxdim, int maxabs) {
  std::uniform_int_distribution<size_t> dim(1, maxdim);
  std::uniform_int_distribution<int> entry(-maxabs, maxabs);
  IntMatrix m(dim(rng), dim(rng));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
  return m;
}

void check_snf_witnesses(const IntMatrix& m) {
  SnfResult s = snf(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(det(s.U)) == 1);
  CHECK(abs(det(s.V)) == 1);
  auto d = s.diagonal();
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (d[i] == 0) CHECK(d[i + 1] == 0);
  }
  for (size_t i = 0; i < s.D.rows(); ++i)
    for (size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("hnf basics") {
  IntMatrix id = IntMatrix::identity(3);
  HnfResult h = hnf(id);
  CHECK(h.H == id);
  CHECK(h.U == id);

  IntMatrix m{{2, 4}, {6, 8}};
  HnfResult hm = hnf(m);
  CHECK(hm.U * m == hm.H);
  CHECK(hm.H.at(0, 0) == 2);
  CHECK(hm.H.at(1, 0) == 0);
  CHECK(abs(det(hm.U)) == 1);

  IntMatrix z(2, 3);
  HnfResult hz = hnf(z);
  CHECK(hz.H == z);
  CHECK(hz.U == IntMatrix::identity(2));
}

TEST_CASE("hnf witnesses on random matrices") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 150; ++t) {
    IntMatrix m = random_matrix(rng, 5, 9);
    HnfResult h = hnf(m);
    CHECK(h.U * m == h.H);
    CHECK(abs(det(h.U)) == 1);
    // echelon shape with positive pivots and reduced entries above
    size_t r = 0;
    for (size_t c = 0; c < h.H.cols(); ++c) {
      bool pivot = r < h.H.rows() && h.H.at(r, c) != 0;
      for (size_t i = r + pivot; i < h.H.rows(); ++i) CHECK(h.H.at(i, c) == 0);
      if (!pivot) continue;
      CHECK(h.H.at(r, c) > 0);
      for (size_t i = 0; i < r; ++i) {
        CHECK(h.H.at(i, c) >= 0);
        CHECK(h.H.at(i, c) < h.H.at(r, c));
      }
      ++r;
    }
  }
}

TEST_CASE("snf frozen examples") {
  // diag(6,4): invariant factors are gcd and lcm.
  SnfResult a = snf(IntMatrix{{6, 0}, {0, 4}});
  CHECK(a.D == IntMatrix{{2, 0}, {0, 12}});

  SnfResult b = snf(IntMatrix{{2, 4}, {6, 8}});
  CHECK(b.D == IntMatrix{{2, 0}, {0, 4}});

  // Any unimodular matrix has trivial Smith form.
  IntMatrix u{{2, 3}, {3, 5}};  // det 1
  CHECK(det(u) == 1);
  CHECK(snf(u).D == IntMatrix::identity(2));
}

TEST_CASE("snf witnesses on random matrices") {
  std::mt19937_64 rng(20260811);
  for (int k = 0; k < 200; ++k) check_snf_witnesses(random_matrix(rng, 6, 9));
  check_snf_witnesses(IntMatrix(0, 3));
  check_snf_witnesses(IntMatrix(3, 0));
  check_snf_witnesses(IntMatrix(0, 0));
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix{{2, 3}, {3, 5}}).cols() == 0);

  IntMatrix m{{1, -2}};
  IntMatrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  bool plus = k.col(0) == std::vector<Int>{2, 1};
  bool minus = k.col(0) == std::vector<Int>{-2, -1};
  CHECK((plus || minus));

  IntMatrix z(2, 2);
  IntMatrix kz = kernel_basis(z);
  CHECK(kz.cols() == 2);
  CHECK(abs(det(kz)) == 1);
}

TEST_CASE("kernel lattice is saturated") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m = random_matrix(rng, 5, 4);
    IntMatrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    if (k.cols() == 0) continue;
    auto d = snf(k).diagonal();
    for (const auto& x : d) CHECK(x == 1);  // basis extends to a Z-basis
  }
}

TEST_CASE("solve") {
  IntMatrix id = IntMatrix::identity(3);
  std::vector<Int> b{1, -4, 7};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK_FALSE(solve(IntMatrix{{2}}, {Int(3)}).has_value());

  IntMatrix m{{2, 4}, {6, 8}};
  auto y = solve(m, {Int(2), Int(6)});
  REQUIRE(y.has_value());
  CHECK(m * *y == std::vector<Int>{2, 6});
}

TEST_CASE("solve agrees with brute force on random systems") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m = random_matrix(rng, 4, 4);
    std::vector<Int> b(m.rows());
    for (auto& v : b) v = entry(rng);
    auto x = solve(m, b);
    if (x) {
      CHECK(m * *x == b);
    } else {
      // Exhaustive check over a small box certifies unsolvability there.
      size_t n = m.cols();
      std::vector<int> c(n, -3);
      bool found = false;
      while (!found) {
        std::vector<Int> cand(c.begin(), c.end());
        if (m * cand == b) found = true;
        size_t i = 0;
        while (i < n && ++c[i] > 3) c[i++] = -3;
        if (i == n) break;
      }
      CHECK_FALSE(found);
    }
  }
}

TEST_CASE("determinant") {
  CHECK(det(IntMatrix{{1, 3}, {1, 1}}) == -2);
  CHECK(det(IntMatrix{{0, -1}, {-3, 0}}) == -3);
  CHECK(det(IntMatrix::identity(4)) == 1);
  CHECK(det(IntMatrix(3, 3)) == 0);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), NonSquare);
  // Cofactor-expansion oracle on 3x3 samples.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
    Int cofactor = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                   m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                   m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    CHECK(det(m) == cofactor);
  }
}

TEST_CASE("unimodular inverse") {
  IntMatrix u{{2, 3}, {3, 5}};
  CHECK(unimodular_inverse(u) * u == IntMatrix::identity(2));
  CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("lattice reduction is canonical") {
  IntMatrix m{{2, 0}, {0, 3}};
  ColHnfResult ch = col_hnf(m);
  auto r1 = reduce_mod_column_lattice({Int(5), Int(7)}, ch);
  auto r2 = reduce_mod_column_lattice({Int(-1), Int(1)}, ch);
  CHECK(r1 == r2);  // same coset, same representative
  CHECK(r1 == std::vector<Int>{1, 1});
}
