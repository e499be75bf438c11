#pragma once

// Corings over a finite-dimensional algebra and their comodules. The
// comultiplication is stored as a lift C -> C (x)_K C with the row-major
// pair index idx(i,j) = i*dim(C) + j; all axioms are checked after
// projecting to C (x)_R C, so the class of the lift is what matters.

#include <optional>
#include <string>
#include <vector>

#include "natfull/algebra.hpp"
#include "natfull/module.hpp"

namespace natfull {

struct Coring {
  FDAlgebra base;
  Module carrier;  // R-bimodule with left = right = base
  Mat delta;       // (dim C * dim C) x dim C, lift of the comultiplication
  Mat epsilon;     // dim R x dim C

  std::size_t dim() const { return carrier.dim; }
};

// Cached tensor squares/cubes of the carrier.
struct CoringParts {
  TensorChain cc;   // C (x)_R C
  TensorChain ccc;  // C (x)_R C (x)_R C
  Mat delta_q;      // pi_cc . delta : C -> C (x)_R C
};
CoringParts coring_parts(const Coring& c);

std::vector<std::string> validate_coring(const Coring& c);

struct Comodule {
  Module module;  // right R-module (right = coring base)
  Mat rho;        // (dim M * dim C) x dim M, lift of the coaction
};

std::vector<std::string> validate_comodule(const Coring& c, const Comodule& m);

// C as a right comodule over itself.
Comodule regular_comodule(const Coring& c);
// G(N) = N (x)_R C with coaction N (x) Delta.
Comodule induced_comodule(const Coring& c, const Module& n);
// R as a right C-comodule attached to a grouplike: rho(r) = 1 (x) g r.
Comodule grouplike_base_comodule(const Coring& c, const Vec& g);

struct CotensorFunctorReport {
  bool naturally_full = false;
  std::optional<Vec> witness_z;  // z in C^R with c = eps(c) z
  std::optional<Mat> xi;         // bimodule splitting xi : R -> C, xi . eps = id
};
// G = - (x)_R C.
CotensorFunctorReport analyze_cotensor_functor(const Coring& c);

struct ForgetfulFunctorReport {
  bool naturally_full = false;    // c eps(d) = eps(c) d on basis pairs
  bool delta_surjective = false;  // equivalent form
};
// F = forgetful.
ForgetfulFunctorReport analyze_forgetful_functor(const Coring& c);

// An R-ring structure on the same carrier bimodule, with the splitting data
// that makes restriction/extension along xi naturally full.
struct CoringRingSide {
  FDAlgebra ring;       // multiplication and unit on the carrier's space
  AlgebraMorphism xi;   // R -> ring
  Mat section_E;        // E : ring -> R with xi . E = id (an R-bimodule map)
  Module carrier;       // the underlying R-bimodule (unchanged)
};

// The two directions of the bijection between coring structures with G
// naturally full and ring structures with a bimodule section. Throws
// CriterionNotMet when the input side's criterion fails.
CoringRingSide coring_to_ring(const Coring& c);
Coring ring_to_coring(const CoringRingSide& rs);

struct DerivedChecksReport {
  bool g_side_applicable = false;  // witness z present
  bool fgp_left = false;
  bool fgp_right = false;
  bool frobenius_phi_bijective = false;
  bool f_side_applicable = false;  // F naturally full
  std::optional<Mat> coseparability_chi;  // chi : C (x)_R C -> R on quotient coords
  bool coseparability_identity = false;   // chi . Delta = eps
};
DerivedChecksReport derived_checks(const Coring& c);

// All g with Delta(g) = g (x) g and eps(g) = 1, by enumerating the affine
// subspace eps^{-1}(1). Throws TooLargeToEnumerate past the bound.
std::vector<Vec> grouplikes(const Coring& c, std::uint64_t enumeration_bound = (1u << 20));

struct BaseCoinvariants {
  Subspace space;   // B = {r : r g = g r} inside R
  FDAlgebra b;      // the induced subalgebra structure
  Mat inclusion;    // dim R x dim B
};
BaseCoinvariants coinvariants_base(const Coring& c, const Vec& g);
// M^{co C} = {m : rho(m) = m (x) g}.
Subspace coinvariants(const Coring& c, const Vec& g, const Comodule& m);

struct ChiConditionReport {
  bool hypotheses_met = false;         // (3.15.1) and chi(g (x) g) = 1
  std::optional<bool> alpha_bijective; // unit maps bijective for N in {B, R}
};
// chi is given on C (x)_R C quotient coordinates.
ChiConditionReport check_chi_condition(const Coring& c, const Vec& g, const Mat& chi);

Coring trivial_coring(const FDAlgebra& r);
Coring sweedler_coring(const AlgebraMorphism& phi);
// Throws NotProjective when M is not fgp over its left algebra.
Coring comatrix_coring(const Module& m);

// eta and counit of the (forgetful, - (x) C) adjunction, used by the oracle.
Mat coring_unit(const Coring& c, const Comodule& m, const TensorChain& mc);
Mat coring_counit(const Coring& c, const Module& n, const TensorChain& nc);

// Does the bimodule map chi satisfy (3.15.1)?
bool chi_balance_identity(const Coring& c, const CoringParts& parts, const Mat& chi);

// Right C-comodule maps M -> N: right R-linear and colinear.
HomSpace comodule_hom(const Coring& c, const Comodule& m, const Comodule& n);

}  // namespace natfull
