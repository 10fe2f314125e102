#include <cmath>
#include <random>
#include <set>

#include <doctest.h>

#include "hh/exactla.hpp"

using namespace hh;

namespace {

// rank over GF(p) from the size of the image, by enumerating every input vector
size_t brute_rank(const Matrix& m) {
  const uint32_t p = m.field().characteristic();
  std::set<std::vector<uint32_t>> image;
  std::vector<uint32_t> x(m.cols(), 0);
  while (true) {
    Vec v;
    for (uint32_t c : x) v.push_back(m.field().from_int(c));
    std::vector<uint32_t> img;
    for (const auto& s : m * v) img.push_back(s.residue());
    image.insert(img);
    size_t k = 0;
    while (k < x.size() && ++x[k] == p) x[k++] = 0;
    if (k == x.size()) break;
  }
  size_t r = 0;
  for (size_t n = image.size(); n > 1; n /= p) ++r;
  return r;
}

// number of vectors x with m x = 0
size_t brute_kernel_size(const Matrix& m) {
  const uint32_t p = m.field().characteristic();
  size_t count = 0;
  std::vector<uint32_t> x(m.cols(), 0);
  while (true) {
    Vec v;
    for (uint32_t c : x) v.push_back(m.field().from_int(c));
    count += is_zero(m * v) ? 1 : 0;
    size_t k = 0;
    while (k < x.size() && ++x[k] == p) x[k++] = 0;
    if (k == x.size()) break;
  }
  return count;
}

Matrix random_matrix(FieldSpec f, size_t rows, size_t cols, std::mt19937_64& rng, int spread = 7) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<int> d(-spread, spread);
  std::bernoulli_distribution sparse(0.4);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = sparse(rng) ? f.zero() : f.from_int(d(rng));
  return m;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK_NOTHROW(FieldSpec(0));
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(5));
  CHECK_THROWS(FieldSpec(4));
  CHECK_THROWS(FieldSpec(1));
  CHECK(FieldSpec(7).from_int(-1).residue() == 6);
  CHECK(FieldSpec(0).parse("-3/6") == FieldSpec(0).from_int(-1) / FieldSpec(0).from_int(2));
  CHECK(FieldSpec(5).parse("7") == FieldSpec(5).from_int(2));
}

TEST_CASE("rref_rank examples") {
  SUBCASE("identity over GF(3)") {
    auto r = rref_rank(Matrix::identity(FieldSpec(3), 2));
    CHECK(r.rank == 2);
  }
  SUBCASE("zero 3x5") {
    auto r = rref_rank(Matrix(FieldSpec(3), 3, 5));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
  }
  SUBCASE("[[1,2],[2,4]] over GF(5)") {
    Matrix m = Matrix::from_ints(FieldSpec(5), {{1, 2}, {2, 4}});
    CHECK(rref_rank(m).rank == 1);
    CHECK(brute_rank(m) == 1);
  }
  SUBCASE("empty matrix") { CHECK(rref_rank(Matrix(FieldSpec(2), 0, 0)).rank == 0); }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(FieldSpec(7), 4)).empty());
  auto k0 = kernel_basis(Matrix(FieldSpec(3), 2, 3));
  REQUIRE(k0.size() == 3);
  Matrix span(FieldSpec(3), 3, 3);
  for (size_t c = 0; c < 3; ++c) span.set_column(c, k0[c]);
  CHECK(rank(span) == 3);

  Matrix m = Matrix::from_ints(FieldSpec(2), {{1, 1, 0}});
  auto k = kernel_basis(m);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(is_zero(m * v));
  CHECK(brute_kernel_size(m) == 4);  // 2^2 annihilated vectors out of 8
}

TEST_CASE("solve examples") {
  const FieldSpec f5(5);
  Vec b{f5.from_int(1), f5.from_int(4), f5.from_int(2)};
  auto x = solve(Matrix::identity(f5, 3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(Matrix(f5, 2, 2), Vec{f5.one(), f5.zero()}));
  auto y = solve(Matrix::from_ints(f5, {{2}}), Vec{f5.one()});
  REQUIRE(y);
  CHECK((*y)[0] == f5.from_int(3));
  CHECK(f5.from_int(2) * (*y)[0] == f5.one());
}

TEST_CASE("rank agrees with enumeration on random small matrices") {
  std::mt19937_64 rng(11);
  for (uint32_t p : {2u, 3u, 5u})
    for (int trial = 0; trial < 25; ++trial) {
      const size_t rows = 1 + rng() % 4, cols = 1 + rng() % (p == 5 ? 4 : 5);
      Matrix m = random_matrix(FieldSpec(p), rows, cols, rng);
      CAPTURE(p);
      CHECK(rank(m) == brute_rank(m));
      size_t expect = 1;
      for (size_t k = 0; k < cols - rank(m); ++k) expect *= p;
      CHECK(brute_kernel_size(m) == expect);
    }
}

TEST_CASE("rank plus nullity, rref idempotence, kernel annihilation") {
  std::mt19937_64 rng(2024);
  for (uint32_t p : {0u, 2u, 3u, 5u, 7u, 101u})
    for (int trial = 0; trial < 30; ++trial) {
      const size_t rows = rng() % 9, cols = rng() % 9;
      Matrix m = random_matrix(FieldSpec(p), rows, cols, rng);
      auto r = rref_rank(m);
      auto k = kernel_basis(m);
      CAPTURE(p);
      CHECK(r.rank + k.size() == cols);
      CHECK(r.rank <= std::min(rows, cols));
      CHECK(rref_rank(r.reduced).reduced == r.reduced);
      for (const auto& v : k) CHECK(is_zero(m * v));
    }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  std::mt19937_64 rng(99);
  for (uint32_t p : {0u, 3u, 13u})
    for (int trial = 0; trial < 30; ++trial) {
      const FieldSpec f(p);
      const size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
      Matrix m = random_matrix(f, rows, cols, rng);
      Vec x0;
      for (size_t c = 0; c < cols; ++c) x0.push_back(f.from_int(int(rng() % 9) - 4));
      Vec b = m * x0;
      auto x = solve(m, b);
      REQUIRE(x);
      CHECK(m * *x == b);
      LinearSolver ls(m);
      auto y = ls.solve(b);
      REQUIRE(y);
      CHECK(m * *y == b);
      // a vector outside the column space, when one exists
      if (rank(m) < rows) {
        Matrix aug(f, rows, cols + 1);
        for (size_t c = 0; c < cols; ++c) aug.set_column(c, m.column(c));
        for (size_t e = 0; e < rows; ++e) {
          Vec unit(rows, f.zero());
          unit[e] = f.one();
          aug.set_column(cols, unit);
          if (rank(aug) > rank(m)) {
            CHECK_FALSE(solve(m, unit));
            CHECK_FALSE(ls.solve(unit));
            break;
          }
        }
      }
    }
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(5);
  for (uint32_t p : {0u, 2u, 3u, 5u, 7u, 65521u}) {
    const FieldSpec f(p);
    auto rnd = [&] {
      Scalar s = f.from_int(int64_t(rng() % 2001) - 1000);
      if (p == 0) s = s / f.from_int(int64_t(rng() % 50) + 1);
      return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
    }
  }
}

TEST_CASE("subspace reduction") {
  const FieldSpec f(3);
  Subspace s(f, 3);
  CHECK(s.add({f.one(), f.one(), f.zero()}));
  CHECK(s.add({f.zero(), f.one(), f.one()}));
  CHECK_FALSE(s.add({f.one(), f.from_int(2), f.one()}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({f.from_int(2), f.zero(), f.from_int(1)}));
  CHECK_FALSE(s.contains({f.one(), f.zero(), f.zero()}));
}
