#pragma once

// Homomorphisms of corings (Phi, phi) : C/R -> D/S, the cotensor product
// N square_D (S (x)_R C) as a concrete equalizer kernel, the induced
// adjunction (F = - (x)_R S, G = - square_D (S (x)_R C)), and the natural
// fullness criteria: F is naturally full iff eta_C cosplits by a C-bicomodule
// map, G iff Phi-hat : S (x)_R C (x)_R S -> D splits by a D-bicomodule map.
//
// Base-change caveat: over the prime field every equalizer here is a plain
// kernel; the induced coaction on a cotensor is found by solving the defining
// linear system and then re-verified against the comodule axioms.

#include <optional>
#include <string>
#include <vector>

#include "natfull/coring.hpp"

namespace natfull {

struct CoringMorphism {
  Coring source;  // C over R
  Coring target;  // D over S
  AlgebraMorphism phi;
  Mat Phi;  // dim D x dim C
};

std::vector<std::string> validate_coring_morphism(const CoringMorphism& m);

// Cached structures: L = S (x)_R C with its two coactions.
struct CormorParts {
  Module s_sr;       // S as an (S, R)-bimodule along phi
  Module s_rs;       // S as an (R, S)-bimodule along phi
  TensorChain l;     // S (x)_R C
  Mat rho_l_right;   // T_L -> T_L (x)_K C (right C-coaction lift)
  Mat rho_l_left;    // T_L -> D (x)_K T_L (left D-coaction lift)
};
CormorParts cormor_parts(const CoringMorphism& m);

struct CotensorSpace {
  Module module;   // the equalizer K with its module structure(s)
  Mat inclusion;   // K -> X = N (x)_S L coordinates
  Mat rho;         // induced right C-coaction lift K -> K (x)_K C
  TensorChain x;   // the ambient N (x)_S L
};
// N is a right D-comodule. Throws CoactionNotInduced if the coaction system
// is infeasible (impossible under the criteria's reduction shapes).
CotensorSpace cotensor(const CoringMorphism& m, const Comodule& n);

// F(M) = M (x)_R S with the induced right D-coaction.
struct InducedDComodule {
  Comodule comodule;
  TensorChain chain;  // M (x)_R S
};
InducedDComodule apply_F(const CoringMorphism& m, const Comodule& mc);

// eta_M : M -> GFM in the cotensor's coordinates.
Mat cormor_unit(const CoringMorphism& m, const Comodule& mc, const InducedDComodule& fm,
                const CotensorSpace& gfm);
// eps_N : FGN -> N.
Mat cormor_counit(const CoringMorphism& m, const Comodule& n, const CotensorSpace& gn,
                  const InducedDComodule& fgn);

struct FNatFullReport {
  bool naturally_full = false;
  std::optional<Mat> witness_nu;  // C-bicomodule map GFC -> C
};
FNatFullReport analyze_F_naturally_full(const CoringMorphism& m);

struct GNatFullReport {
  bool naturally_full = false;
  std::optional<Mat> witness_Psi;  // D-bicomodule map D -> S (x)_R C (x)_R S
};
GNatFullReport analyze_G_naturally_full(const CoringMorphism& m);

// The two degenerate shapes used throughout: (phi, phi) between trivial
// corings, and (eps_C, id_R) into the trivial coring over R.
CoringMorphism trivial_morphism_pair(const AlgebraMorphism& phi);
CoringMorphism counit_morphism(const Coring& c);

}  // namespace natfull
