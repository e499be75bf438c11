#pragma once

// Modules, bimodules, Hom-spaces and tensor products over finite-dimensional
// F_p-algebras. Sidedness convention: module elements are column vectors and
// every map M -> N is stored as a dim(N) x dim(M) matrix acting on the left
// of coordinates. Where the source material composes maps as right operators,
// (m)(f.g) = ((m)f)g, the product f.g therefore corresponds to the matrix
// product mat(g) * mat(f); each transcription below says which side it uses.

#include <optional>
#include <string>
#include <vector>

#include "natfull/algebra.hpp"
#include "natfull/linalg.hpp"

namespace natfull {

// An F_p-space with an optional left and an optional right algebra action.
// A plain left module has only `left`, a bimodule has both.
struct Module {
  PrimeField field;
  std::size_t dim = 0;
  std::optional<FDAlgebra> left;
  std::optional<FDAlgebra> right;
  std::vector<Mat> left_action;   // one dim x dim matrix per basis element of `left`
  std::vector<Mat> right_action;  // same for `right`

  Mat left_act(const Vec& x) const;
  Mat right_act(const Vec& x) const;

  // Unitality, compatibility with the structure constants, and commutation
  // of the two actions when both are present.
  std::vector<std::string> validate() const;
};

Module left_regular(const FDAlgebra& a);
Module right_regular(const FDAlgebra& a);
Module bimodule_regular(const FDAlgebra& a);
Module free_left_module(const FDAlgebra& a, std::size_t copies);
Module zero_module(const PrimeField& f);

// Restriction of scalars along phi on the chosen side(s).
Module left_module_via(Module m, const AlgebraMorphism& phi);
Module right_module_via(Module m, const AlgebraMorphism& phi);

// Forget one side.
Module forget_right(Module m);
Module forget_left(Module m);

enum class Sided { Left, Right, Both };

struct HomSpace {
  std::size_t source_dim = 0, target_dim = 0;
  std::vector<Mat> basis;
  std::size_t constraints_rank = 0;

  std::size_t dim() const { return basis.size(); }
  Mat matrix_of(const PrimeField& f, const Vec& coeffs) const;
  // Columns are the vectorized basis elements; used to re-express maps.
  Mat basis_columns(const PrimeField& f) const;
  std::optional<Vec> coords_of(const PrimeField& f, const Mat& m) const;
};

// Basis of all linear maps M -> N commuting with the declared actions,
// computed as the kernel of the stacked intertwining system.
HomSpace hom_space(const Module& m, const Module& n, Sided s);

// Iterated tensor product over the shared algebras of adjacent factors,
// realized as a cokernel of the K-linear tensor space. The result inherits
// the leftmost left action and the rightmost right action.
struct TensorChain {
  Module result;
  Mat projection;  // (prod of factor dims) -> result.dim
  Mat section;     // result.dim -> (prod of factor dims)
  std::vector<std::size_t> factor_dims;

  std::size_t ambient_dim() const;
};

TensorChain tensor_chain(const std::vector<const Module*>& factors);
TensorChain tensor_over(const Module& m, const Module& n);

// {m : x m = m x for all x} for a bimodule with the same algebra on both sides.
Subspace invariants(const Module& m);

// Dual basis {(e_i, *e_i)} of a left module that is finitely generated
// projective; nullopt when the splitting system is infeasible.
struct DualBasis {
  std::vector<Vec> generators;  // the standard basis vectors of M
  std::vector<Mat> duals;       // *e_i : M -> S, left S-linear
};
std::optional<DualBasis> fgp_dual_basis(const Module& m);

// Trace ideal of a left module equals the whole algebra.
bool is_generator(const Module& m);

// Hom(M, Q) for left modules over the same algebra, packaged as a module:
// left action of M.right via (m)(r.f) = (mr)f, right action of Q.right via
// (m)(f.t) = ((m)f)t.
struct HomModule {
  Module module;
  std::vector<Mat> basis;
  std::size_t source_dim = 0, target_dim = 0;

  Mat basis_columns(const PrimeField& f) const;
  Vec coords_of(const PrimeField& f, const Mat& m) const;
  Mat matrix_of(const PrimeField& f, const Vec& coeffs) const;
};
HomModule hom_left_as_module(const Module& m, const Module& q);

// *M = Hom_S(M, S) as an (R, S)-bimodule for an (S, R)-bimodule M.
HomModule star_module(const Module& m);

// A = End_S(M) with structure constants in the right-operator composition
// order, and chi : R -> A, chi(r) = (m -> m r), when M carries a right action.
struct EndAlgebra {
  FDAlgebra algebra;
  std::vector<Mat> basis;
  std::optional<AlgebraMorphism> chi;
  std::size_t module_dim = 0;

  Mat basis_columns() const;
  Vec coords_of(const Mat& endo) const;
  Mat matrix_of(const Vec& coeffs) const;
};
EndAlgebra endomorphism_algebra(const Module& m);

// Left submodule spanned by the action orbit of the given vectors.
Subspace left_submodule_generated(const Module& m, const std::vector<Vec>& gens);
// Quotient by an action-stable subspace, with induced actions.
Module quotient_module(const Module& m, const Subspace& w);
// An action-stable subspace as a module in its own right (actions expressed
// in the subspace basis).
Module submodule_module(const Module& m, const Subspace& w);
// A right module viewed as a left module over the opposite algebra.
Module as_left_over_opposite(const Module& m);

}  // namespace natfull
