#pragma once

// Finite-dimensional unital associative F_p-algebras presented by structure
// constants, and algebra morphisms as matrices. Houses the ring-epimorphism
// test (injectivity of the multiplication map S (x)_R S -> S) on which the
// restriction-of-scalars analyzers are built.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "natfull/linalg.hpp"

namespace natfull {

struct FDAlgebra {
  PrimeField field;
  std::size_t dim = 0;
  // mul[i*dim + j] = coordinates of e_i * e_j.
  std::vector<Vec> mul;
  Vec unit;

  Vec product(const Vec& x, const Vec& y) const;
  // L(x): y -> x*y and R(x): y -> y*x as dim x dim matrices.
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
  Vec basis_product(std::size_t i, std::size_t j) const { return mul[i * dim + j]; }

  // Empty iff associativity holds on all basis triples and the unit acts as
  // identity on both sides.
  std::vector<std::string> validate() const;

  FDAlgebra opposite() const;

  bool operator==(const FDAlgebra& o) const;
};

// Convenience constructors used by fixtures, tests and the random suite.
FDAlgebra field_algebra(std::uint32_t p);
FDAlgebra product_algebra(const FDAlgebra& a, const FDAlgebra& b);
// F_p[x] / (x^n + c_{n-1} x^{n-1} + ... + c_0), coefficients of the monic modulus.
FDAlgebra polynomial_quotient_algebra(std::uint32_t p, const Vec& modulus_coeffs);
FDAlgebra matrix_algebra(std::uint32_t p, std::size_t n);
// Change of basis: structure constants transported along an invertible q
// (new basis vectors are the columns of q).
FDAlgebra conjugate_algebra(const FDAlgebra& a, const Mat& q);

struct AlgebraMorphism {
  FDAlgebra source;
  FDAlgebra target;
  // target.dim x source.dim; column j = coordinates of phi(e_j).
  Mat matrix;

  Vec apply(const Vec& x) const { return matrix.apply(x); }
  // Empty iff phi(1) = 1 and phi is multiplicative on all basis pairs.
  std::vector<std::string> validate() const;
};

AlgebraMorphism identity_morphism(const FDAlgebra& a);
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

// All central idempotents, found by enumerating the center. Throws
// CenterTooLarge when p^dim(center) exceeds the bound.
std::vector<Vec> central_idempotents(const FDAlgebra& a, std::uint64_t enumeration_bound = (1u << 20));

Subspace center(const FDAlgebra& a);

struct RingEpiReport {
  bool is_epi = false;
  std::size_t eps_kernel_dim = 0;
};

// phi is an epimorphism of rings iff eps_S : S (x)_R S -> S, s (x) s' -> s s'
// is injective (then an isomorphism).
RingEpiReport is_ring_epimorphism(const AlgebraMorphism& phi);

}  // namespace natfull
