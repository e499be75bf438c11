#include <doctest.h>

#include "natfull/algebra.hpp"
#include "natfull/module.hpp"

using namespace natfull;

namespace {

// Upper-triangular 2x2 algebra, basis (E11, E12, E22).
FDAlgebra upper_triangular(std::uint32_t p) {
  PrimeField f(p);
  FDAlgebra a{f, 3, std::vector<Vec>(9, Vec(3, 0)), {1, 0, 1}};
  auto set = [&](std::size_t i, std::size_t j, Vec v) { a.mul[i * 3 + j] = std::move(v); };
  set(0, 0, {1, 0, 0});  // E11 E11 = E11
  set(0, 1, {0, 1, 0});  // E11 E12 = E12
  set(1, 2, {0, 1, 0});  // E12 E22 = E12
  set(2, 2, {0, 0, 1});  // E22 E22 = E22
  return a;
}

FDAlgebra f4() {
  // F_4 = F_2[x]/(x^2 + x + 1)
  return polynomial_quotient_algebra(2, {1, 1});
}

}  // namespace

TEST_CASE("validate_algebra") {
  CHECK(field_algebra(2).validate().empty());
  CHECK(field_algebra(97).validate().empty());
  CHECK(upper_triangular(2).validate().empty());
  CHECK(upper_triangular(5).validate().empty());
  CHECK(f4().validate().empty());
  CHECK(matrix_algebra(2, 2).validate().empty());

  // e1*e1 = e2 with no usable unit
  FDAlgebra broken{PrimeField(2), 2, std::vector<Vec>(4, Vec(2, 0)), {1, 0}};
  broken.mul[0] = {0, 1};
  CHECK_FALSE(broken.validate().empty());
}

TEST_CASE("central idempotents") {
  auto ci = central_idempotents(field_algebra(2));
  CHECK(ci == std::vector<Vec>{{0}, {1}});

  auto c2 = central_idempotents(product_algebra(field_algebra(2), field_algebra(2)));
  CHECK(c2 == std::vector<Vec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  FDAlgebra tri = upper_triangular(2);
  auto c3 = central_idempotents(tri);
  CHECK(std::find(c3.begin(), c3.end(), Vec{0, 0, 0}) != c3.end());
  CHECK(std::find(c3.begin(), c3.end(), Vec{1, 0, 1}) != c3.end());
  // The diagonal idempotents E11, E22 are idempotent but not central.
  CHECK(std::find(c3.begin(), c3.end(), Vec{1, 0, 0}) == c3.end());
  CHECK(std::find(c3.begin(), c3.end(), Vec{0, 0, 1}) == c3.end());
  Vec e11{1, 0, 0};
  CHECK(tri.product(e11, e11) == e11);
}

TEST_CASE("opposite algebra") {
  FDAlgebra c = product_algebra(field_algebra(3), field_algebra(3));
  CHECK(c.opposite() == c);

  FDAlgebra tri = upper_triangular(2);
  CHECK(tri.opposite().opposite() == tri);
  CHECK(tri.opposite().validate().empty());
  // opposite of upper triangular is lower triangular: E12 * E11 = E12 there
  Vec e12{0, 1, 0}, e11{1, 0, 0};
  CHECK(tri.opposite().product(e12, e11) == e12);
  CHECK(is_zero_vec(tri.opposite().product(e11, e12)));
}

TEST_CASE("morphism validation") {
  FDAlgebra r2 = field_algebra(2);
  AlgebraMorphism id = identity_morphism(r2);
  CHECK(id.validate().empty());

  // unit embedding F_2 -> F_4
  AlgebraMorphism incl{r2, f4(), Mat::from_columns(PrimeField(2), {{1, 0}}, 2)};
  CHECK(incl.validate().empty());

  // non-multiplicative map F_4 -> F_4: x -> 1
  Mat bad(PrimeField(2), 2, 2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 1;
  AlgebraMorphism nm{f4(), f4(), bad};
  CHECK_FALSE(nm.validate().empty());
}

TEST_CASE("ring epimorphism test") {
  FDAlgebra r2 = field_algebra(2);

  auto rid = is_ring_epimorphism(identity_morphism(r2));
  CHECK(rid.is_epi);
  CHECK(rid.eps_kernel_dim == 0);

  // F_2 -> F_4: dim(S (x)_R S) = 4, rank eps = 2
  AlgebraMorphism incl{r2, f4(), Mat::from_columns(PrimeField(2), {{1, 0}}, 2)};
  auto ri = is_ring_epimorphism(incl);
  CHECK_FALSE(ri.is_epi);
  CHECK(ri.eps_kernel_dim == 2);

  // F_2 x F_2 ->> F_2 projection: surjective, hence epi
  FDAlgebra rr = product_algebra(r2, r2);
  AlgebraMorphism proj{rr, r2, Mat::from_rows(PrimeField(2), {{1, 0}}, 2)};
  CHECK(proj.validate().empty());
  auto rp = is_ring_epimorphism(proj);
  CHECK(rp.is_epi);
  CHECK(rp.eps_kernel_dim == 0);

  // corner projection of the triangular algebra is surjective, hence epi
  FDAlgebra tri = upper_triangular(3);
  AlgebraMorphism corner{tri, field_algebra(3), Mat::from_rows(PrimeField(3), {{1, 0, 0}}, 3)};
  CHECK(corner.validate().empty());
  CHECK(is_ring_epimorphism(corner).is_epi);
}

TEST_CASE("Thm 1.1(4) separability-idempotent form agrees with the epi test") {
  // s (x) 1 = 1 (x) s for all basis s iff the epi verdict is true.
  auto check = [](const AlgebraMorphism& phi) {
    Module sr = right_module_via(bimodule_regular(phi.target), phi);
    Module rs = left_module_via(bimodule_regular(phi.target), phi);
    TensorChain t = tensor_over(sr, rs);
    const FDAlgebra& s = phi.target;
    bool inv = true;
    for (std::size_t i = 0; i < s.dim; ++i) {
      Vec a(t.ambient_dim(), 0), b(t.ambient_dim(), 0);
      for (std::size_t k = 0; k < s.dim; ++k) {
        // e_i (x) 1 and 1 (x) e_i
        if (s.unit[k]) {
          a[i * s.dim + k] = s.unit[k];
          b[k * s.dim + i] = s.unit[k];
        }
      }
      if (t.projection.apply(a) != t.projection.apply(b)) inv = false;
    }
    CHECK(inv == is_ring_epimorphism(phi).is_epi);
  };
  FDAlgebra r2 = field_algebra(2);
  check(identity_morphism(r2));
  check(AlgebraMorphism{r2, f4(), Mat::from_columns(PrimeField(2), {{1, 0}}, 2)});
  FDAlgebra rr = product_algebra(r2, r2);
  check(AlgebraMorphism{rr, r2, Mat::from_rows(PrimeField(2), {{1, 0}}, 2)});
  FDAlgebra tri = upper_triangular(2);
  check(AlgebraMorphism{tri, r2, Mat::from_rows(PrimeField(2), {{1, 0, 0}}, 3)});
}

TEST_CASE("conjugated algebras validate and preserve epi verdicts") {
  FDAlgebra rr = product_algebra(field_algebra(2), field_algebra(2));
  Mat q = Mat::from_rows(PrimeField(2), {{1, 1}, {0, 1}}, 2);
  FDAlgebra rc = conjugate_algebra(rr, q);
  CHECK(rc.validate().empty());
  // transport the projection morphism: phi' = phi q
  AlgebraMorphism proj{rr, field_algebra(2), Mat::from_rows(PrimeField(2), {{1, 0}}, 2)};
  AlgebraMorphism projc{rc, field_algebra(2), proj.matrix * q};
  CHECK(projc.validate().empty());
  CHECK(is_ring_epimorphism(projc).is_epi == is_ring_epimorphism(proj).is_epi);
}
