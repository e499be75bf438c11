#include <doctest.h>

#include <cstdint>

#include "natfull/linalg.hpp"

using namespace natfull;

namespace {

// Deterministic generator for property tests (kept independent of the
// library's own suite generator).
struct XorShift {
  std::uint64_t s;
  explicit XorShift(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }
};

Mat random_matrix(XorShift& rng, const PrimeField& f, std::size_t r, std::size_t c) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.below(f.modulus());
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.reduce(-7) == 3);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(101), Error);
  CHECK_THROWS_AS(f5.inv(0), Error);
}

TEST_CASE("rref identity and zero cases") {
  PrimeField f2(2);
  Mat id = Mat::identity(f2, 2);
  auto r = rref(id);
  CHECK(r.rref == id);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(r.rank == 2);

  PrimeField f3(3);
  Mat z(f3, 3, 3);
  auto rz = rref(z);
  CHECK(rz.rref == z);
  CHECK(rz.pivot_columns.empty());
  CHECK(rz.rank == 0);
}

TEST_CASE("rref of [[1,1],[1,1]] over F_2") {
  PrimeField f2(2);
  Mat m = Mat::from_rows(f2, {{1, 1}, {1, 1}}, 2);
  auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.rref == Mat::from_rows(f2, {{1, 1}, {0, 0}}, 2));
}

TEST_CASE("kernel basis cases") {
  PrimeField f2(2);
  CHECK(kernel_basis(Mat::identity(f2, 3)).dim() == 0);

  // zero map F_2^3 -> F_2
  Mat z(f2, 1, 3);
  CHECK(kernel_basis(z).dim() == 3);

  Mat m = Mat::from_rows(f2, {{1, 1}}, 2);
  auto k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis[0] == Vec{1, 1});
}

TEST_CASE("solve_affine basics and determinism") {
  PrimeField f2(2);
  Mat id = Mat::identity(f2, 2);
  auto x = solve_affine(id, {1, 0});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{1, 0});

  // A = [[1,1]], b = [1]: free-variables-zero convention picks (1,0).
  Mat a = Mat::from_rows(f2, {{1, 1}}, 2);
  auto y = solve_affine(a, {1});
  REQUIRE(y.has_value());
  CHECK(*y == Vec{1, 0});

  Mat z(f2, 2, 2);
  CHECK_FALSE(solve_affine(z, {1, 0}).has_value());
}

TEST_CASE("quotient space") {
  PrimeField f2(2);
  SUBCASE("no relations") {
    Quotient q = quotient_space(f2, 3, Subspace{3, {}});
    CHECK(q.dim == 3);
    CHECK(q.projection == Mat::identity(f2, 3));
  }
  SUBCASE("full relations") {
    Subspace full{2, {{1, 0}, {0, 1}}};
    Quotient q = quotient_space(f2, 2, full);
    CHECK(q.dim == 0);
  }
  SUBCASE("e1 - e2 in F_2^4") {
    Subspace rel = Subspace::from_span(f2, 4, {{1, 1, 0, 0}});
    Quotient q = quotient_space(f2, 4, rel);
    CHECK(q.dim == 3);
    Vec e1(4, 0), e2(4, 0);
    e1[0] = 1;
    e2[1] = 1;
    CHECK(q.projection.apply(e1) == q.projection.apply(e2));
  }
}

TEST_CASE("kronecker") {
  PrimeField f3(3);
  CHECK(Mat::kronecker(Mat::identity(f3, 2), Mat::identity(f3, 3)) == Mat::identity(f3, 6));
  Mat a = Mat::from_rows(f3, {{1, 2}, {0, 1}}, 2);
  CHECK(Mat::kronecker(a, Mat(f3, 2, 2)).is_zero());
  Mat c(f3, 1, 1);
  c.at(0, 0) = 2;
  CHECK(Mat::kronecker(c, a) == a.scaled(2));
}

TEST_CASE("property: rank-nullity, solve soundness, quotient identities, rref idempotent") {
  XorShift rng(1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int iter = 0; iter < 60; ++iter) {
      std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
      Mat a = random_matrix(rng, f, r, c);

      auto rr = rref(a);
      CHECK(rr.rank + kernel_basis(a).dim() == c);
      CHECK(rref(rr.rref).rref == rr.rref);

      Vec b(r);
      for (auto& x : b) x = rng.below(p);
      auto sol = solve_affine(a, b);
      if (sol) {
        CHECK(a.apply(*sol) == b);
      } else {
        Mat aug(f, r, c + 1);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) aug.at(i, j) = a.at(i, j);
          aug.at(i, c) = b[i];
        }
        CHECK(rank(aug) > rank(a));
      }

      Subspace rel = Subspace::from_span(f, c, {a.row(rng.below(r))});
      Quotient q = quotient_space(f, c, rel);
      CHECK((q.projection * q.section).is_identity());
      for (const Vec& v : rel.basis) CHECK(is_zero_vec(q.projection.apply(v)));
      CHECK(kernel_basis(q.projection).dim() == rel.dim());
    }
  }
}
