#pragma once

// Natural fullness of the induction functor M (x)_R - and the coinduction
// functor Hom_S(M, -) attached to an (S, R)-bimodule M, with the structural
// consequences of a coinduction witness: e = sum (m_i)f_i is a central
// idempotent of S, sm = sem = esem, and M generates over eSe.
//
// Transcription convention: the source composes Hom-elements as right
// operators, (m)(f.g) = ((m)f)g, and writes (?)f m for the endomorphism
// x -> ((x)f)m. As matrices acting on column vectors these become
// mat(f.g) = mat(g) mat(f) and mat((?)f m) = Lambda_m mat(f), where
// Lambda_m : S -> M is s -> s m.

#include <optional>
#include <vector>

#include "natfull/module.hpp"
#include "natfull/scalars.hpp"

namespace natfull {

struct CoinductionReport {
  bool naturally_full = false;
  // coordinates in M (x)_R *M of z = sum m_i (x) f_i satisfying the
  // invariance and the splitting identity
  std::optional<Vec> witness_z;
};

struct InductionReport {
  bool naturally_full = false;
  std::optional<Mat> witness_E;             // E : End_S(M) -> R with chi . E = id
  std::optional<Vec> central_idempotent_e;  // e = E(1)
};

struct BimoduleStructureReport {
  std::optional<Vec> central_idempotent_e_of_S;
  std::optional<bool> M_generator_over_eSe;
  bool chi_epi = false;
  bool M_generator = false;
  std::optional<bool> fully_faithful_G;  // set when Prop 3.10's hypotheses hold
};

struct BimoduleFunctorReport {
  CoinductionReport coinduction;
  InductionReport induction;  // skipped (empty) when M is not projective over S
  bool induction_applicable = false;
  BimoduleStructureReport structure;
};

// Cached spaces shared by the analyzers and the oracle.
struct CoinductionParts {
  HomModule star;        // *M = Hom_S(M, S) as an (R, S)-bimodule
  TensorChain tensor;    // M (x)_R *M with its S-bimodule structure
  HomModule endo;        // End_S(M) as an (R, R)-bimodule
  TensorChain m_endo;    // M (x)_R End_S(M)
};
CoinductionParts coinduction_parts(const Module& m);

CoinductionReport analyze_coinduction(const Module& m);
// Throws NotProjective when M is not finitely generated projective over S
// (the hypothesis of the induction half of the criterion).
InductionReport analyze_induction(const Module& m);
BimoduleStructureReport structural_consequences(const Module& m, const std::optional<Vec>& witness_z);
BimoduleFunctorReport analyze_bimodule(const Module& m);

// Condition (4.14): m (x) id = sum m_i (x) (?)f_i m in M (x)_R End_S(M).
bool holds_414(const Module& m, const CoinductionParts& parts, const Vec& z);
// Condition (4.15) for a given left S-module Q, quantified over the basis of
// Hom_S(M, Q).
bool holds_415(const Module& m, const CoinductionParts& parts, const Vec& z, const Module& q);

// eps_Q : M (x)_R Hom_S(M, Q) -> Q, m (x) f -> (m)f; reports bijectivity.
bool counit_bijective(const Module& m, const Module& q);

}  // namespace natfull
