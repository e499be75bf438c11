// Acceptance suite: runs every acceptance criterion at its stated size and
// prints one PASS/FAIL line per criterion. All arithmetic is exact, so the
// tolerance everywhere is equality mod p. Exit code 0 iff all criteria pass.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "natfull/fixtures.hpp"
#include "natfull/io.hpp"
#include "natfull/oracle.hpp"

using namespace natfull;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

AlgebraMorphism fix_proj() {
  FDAlgebra s = field_algebra(2);
  FDAlgebra r = product_algebra(s, s);
  Mat m(s.field, 1, 2);
  m.at(0, 0) = 1;
  return AlgebraMorphism{r, s, m};
}

// ----------------------------------------------------------- criterion 1

void criterion_1() {
  std::string detail;
  std::size_t checked = 0;
  bool ok = true;
  for (std::uint32_t p : {2u, 3u}) {
    Rng rng(1000 + p);
    for (std::size_t i = 0; i < 100; ++i) {
      Rng sub = rng.fork(i);
      try {
        AlgebraMorphism phi = random_morphism(sub, p, 4);
        ScalarsFamily fam = default_scalars_family(phi, i + 1);
        analyze_restriction(phi, fam);  // traps fire on any disagreement
        ++checked;
      } catch (const Error& e) {
        ok = false;
        detail = "p=" + std::to_string(p) + " i=" + std::to_string(i) + ": " + e.what();
      }
    }
  }
  report(1, ok && checked == 200,
         "Theorem 1.1 equivalence suite, 200 seeded morphisms (p in {2,3}, dims <= 4), "
         "conditions (2),(4),(5),(6) agree and (1),(3) never contradict",
         detail);
}

// ----------------------------------------------------------- criterion 2

void criterion_2() {
  bool ok = true;
  std::string detail;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    try {
      auto [r, phi] = build_triangular_example(p);
      ScalarsFamily fam = default_scalars_family(phi, p);
      ScalarsReport rep = analyze_scalars(phi, fam);
      auto adj = scalars_adjunction(phi);
      PerObjectReport po = per_object_fullness(*adj, true, adj->source_family(p));
      if (!po.all_solvable || !rep.extension.full_on_family) {
        ok = false;
        detail = "p=" + std::to_string(p) + ": extension not full on the family";
      }
      if (rep.extension.naturally_full) {
        ok = false;
        detail = "p=" + std::to_string(p) + ": extension unexpectedly naturally full";
      }
      if (!rep.restriction.naturally_full) {
        ok = false;
        detail = "p=" + std::to_string(p) + ": restriction not naturally full";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
  }
  report(2, ok,
         "triangular example for p in {2,3,5}: extension full on family, not naturally full; "
         "restriction naturally full",
         detail);
}

// ----------------------------------------------------------- criterion 3

void criterion_3() {
  bool ok = true;
  std::string detail;
  try {
    AlgebraMorphism phi = fix_proj();
    ScalarsFamily fam = default_scalars_family(phi, 3);
    ExtensionReport ext = analyze_extension(phi, fam);
    if (!ext.naturally_full || !ext.witness_E.has_value()) {
      ok = false;
      detail = "no witness E";
    } else {
      if (!(phi.matrix * *ext.witness_E).is_identity()) {
        ok = false;
        detail = "phi . E != id";
      }
      if (*ext.central_idempotent_e != Vec{1, 0}) {
        ok = false;
        detail = "e != (1,0)";
      }
    }
    Coring sw = sweedler_coring(phi);
    CoringRingSide rs = coring_to_ring(sw);
    Coring back = ring_to_coring(rs);
    CoringParts p1 = coring_parts(sw);
    CoringParts p2 = coring_parts(back);
    if (!(p1.delta_q == p2.delta_q) || !(back.epsilon == sw.epsilon)) {
      ok = false;
      detail = "coring round trip not exact";
    }
    CoringRingSide rs2 = coring_to_ring(back);
    if (!(rs2.ring.mul == rs.ring.mul) || !(rs2.ring.unit == rs.ring.unit) ||
        !(rs2.xi.matrix == rs.xi.matrix) || !(rs2.section_E == rs.section_E)) {
      ok = false;
      detail = "ring round trip not exact";
    }
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }
  report(3, ok,
         "projection fixture yields E with phi.E = id and e = (1,0); the Sweedler coring of it "
         "round-trips through the ring side exactly",
         detail);
}

// ------------------------------------------------------- criteria 4 and 5

void criteria_4_and_5() {
  bool ok4 = true, ok5 = true;
  std::string d4, d5;
  std::size_t corings_checked = 0, g_full = 0, f_full = 0;
  Rng rng(4444);
  for (std::size_t i = 0; i < 100; ++i) {
    Rng sub = rng.fork(i);
    Coring c = random_coring(sub, 2 + (i % 2), 4, 3);
    try {
      CotensorFunctorReport cot = analyze_cotensor_functor(c);   // asserts (2)<=>(3)
      ForgetfulFunctorReport forg = analyze_forgetful_functor(c);  // asserts (2)<=>(3)
      ++corings_checked;
      DerivedChecksReport der = derived_checks(c);  // asserts every Cor 3.13 consequence
      if (cot.naturally_full) {
        ++g_full;
        if (!der.fgp_left || !der.fgp_right || !der.frobenius_phi_bijective) {
          ok5 = false;
          d5 = "coring#" + std::to_string(i) + ": Cor 3.13 part 1 flags";
        }
      }
      if (forg.naturally_full) {
        ++f_full;
        if (!der.coseparability_identity) {
          ok5 = false;
          d5 = "coring#" + std::to_string(i) + ": chi . Delta != eps";
        }
      }
    } catch (const Error& e) {
      ok4 = false;
      d4 = "coring#" + std::to_string(i) + ": " + e.what();
    }
  }
  try {
    FDAlgebra s = field_algebra(2);
    Module m2 = free_left_module(s, 2);
    m2.right = s;
    m2.right_action = {Mat::identity(s.field, 2)};
    Coring mat2 = comatrix_coring(m2);
    if (analyze_cotensor_functor(mat2).naturally_full ||
        analyze_forgetful_functor(mat2).naturally_full) {
      ok4 = false;
      d4 = "FIX-MAT2 must report both functors not naturally full";
    }
    for (std::uint32_t p : {2u, 3u}) {
      Coring triv = trivial_coring(field_algebra(p));
      auto cot = analyze_cotensor_functor(triv);
      if (!cot.naturally_full || !analyze_forgetful_functor(triv).naturally_full ||
          *cot.witness_z != Vec{1}) {
        ok4 = false;
        d4 = "FIX-TRIV must report both naturally full with z = 1";
      }
    }
  } catch (const Error& e) {
    ok4 = false;
    d4 = e.what();
  }
  report(4, ok4 && corings_checked == 100,
         "Prop 3.12 internal equivalences agree on 100 seeded corings; FIX-MAT2 doubly negative; "
         "FIX-TRIV doubly positive with z = 1",
         d4);
  report(5, ok5,
         "Cor 3.13: " + std::to_string(g_full) + " G-naturally-full instances pass fgp+Frobenius, " +
             std::to_string(f_full) + " F-naturally-full instances pass chi.Delta = eps",
         d5);
}

// ----------------------------------------------------------- criterion 6

void criterion_6() {
  bool ok = true;
  std::string detail;
  std::size_t checked = 0;
  Rng rng(6666);
  for (std::size_t i = 0; i < 25; ++i) {
    Rng sub = rng.fork(i);
    try {
      Module m = random_fgp_bimodule(sub, 2 + (i % 2), 3);
      CoinductionReport co = analyze_coinduction(m);
      Coring cm = comatrix_coring(m);
      if (analyze_cotensor_functor(cm).naturally_full != co.naturally_full) {
        ok = false;
        detail = "bimodule#" + std::to_string(i) + ": cotensor(comatrix) != coinduction";
      }
      InductionReport ind = analyze_induction(m);
      EndAlgebra ea = endomorphism_algebra(m);
      ScalarsFamily fam = default_scalars_family(*ea.chi, i + 1);
      if (analyze_extension(*ea.chi, fam).naturally_full != ind.naturally_full) {
        ok = false;
        detail = "bimodule#" + std::to_string(i) + ": extension(chi) != induction";
      }
      ++checked;
    } catch (const Error& e) {
      ok = false;
      detail = "bimodule#" + std::to_string(i) + ": " + e.what();
    }
  }
  report(6, ok && checked == 25,
         "bridge on 25 seeded fgp bimodules: coinduction = cotensor(comatrix coring) and "
         "induction = extension along chi",
         detail);
}

// ----------------------------------------------------------- criterion 7

void criterion_7() {
  bool ok = true;
  std::string detail;
  std::size_t pairs = 0, counits = 0;
  Rng rng(7777);
  for (std::size_t i = 0; i < 50; ++i) {
    Rng sub = rng.fork(2 * i);
    try {
      AlgebraMorphism phi = random_morphism(sub, 2 + (i % 2), 3);
      CoringMorphism cm = trivial_morphism_pair(phi);
      ScalarsFamily fam = default_scalars_family(phi, i + 1);
      bool ext = analyze_extension(phi, fam).naturally_full;
      bool epi = is_ring_epimorphism(phi).is_epi;
      if (analyze_F_naturally_full(cm).naturally_full != ext) {
        ok = false;
        detail = "(phi,phi)#" + std::to_string(i) + ": F != extension";
      }
      if (analyze_G_naturally_full(cm).naturally_full != epi) {
        ok = false;
        detail = "(phi,phi)#" + std::to_string(i) + ": G != (ker eps_S = 0)";
      }
      ++pairs;
    } catch (const Error& e) {
      ok = false;
      detail = "(phi,phi)#" + std::to_string(i) + ": " + e.what();
    }
    Rng sub2 = rng.fork(2 * i + 1);
    try {
      Coring c = random_coring(sub2, 2 + (i % 2), 4, 3);
      CoringMorphism cm = counit_morphism(c);
      if (analyze_F_naturally_full(cm).naturally_full !=
          analyze_forgetful_functor(c).naturally_full) {
        ok = false;
        detail = "(eps,id)#" + std::to_string(i) + ": F != forgetful";
      }
      if (analyze_G_naturally_full(cm).naturally_full !=
          analyze_cotensor_functor(c).naturally_full) {
        ok = false;
        detail = "(eps,id)#" + std::to_string(i) + ": G != cotensor";
      }
      ++counits;
    } catch (const Error& e) {
      ok = false;
      detail = "(eps,id)#" + std::to_string(i) + ": " + e.what();
    }
  }
  report(7, ok && pairs == 50 && counits == 50,
         "reductions on 50 seeded (phi,phi) and 50 seeded (eps_C,id) coring morphisms recover the "
         "scalar and coring criteria",
         detail);
}

// ------------------------------------------------------ criteria 8 and 9

void criteria_8_and_9() {
  bool ok8 = true;
  std::string d8;
  SuiteReport rep = equivalence_suite(1, 25, 2, 3);
  if (!rep.violations.empty()) {
    ok8 = false;
    d8 = "[" + rep.violations.front().instance + "] " + rep.violations.front().check;
  }
  if (rep.witnesses_verified == 0) {
    ok8 = false;
    d8 = "no splitting witnesses were produced";
  }
  SuiteReport rep3 = equivalence_suite(5, 25, 3, 3);
  if (!rep3.violations.empty()) {
    ok8 = false;
    d8 = "[p=3 " + rep3.violations.front().instance + "] " + rep3.violations.front().check;
  }
  report(8, ok8,
         "every naturally-full verdict across suite runs produced a verified splitting witness (" +
             std::to_string(rep.witnesses_verified + rep3.witnesses_verified) +
             " witnesses); zero WitnessViolation/InconsistentCriteria events",
         d8);

  SuiteReport a = equivalence_suite(1, 50, 2, 3);
  SuiteReport b = equivalence_suite(1, 50, 2, 3);
  std::string ja = suite_report_json(a).dump(2);
  std::string jb = suite_report_json(b).dump(2);
  bool ok9 = (ja == jb) && a.violations.empty();
  report(9, ok9, "two runs of `suite run --seed 1 --count 50` produce byte-identical JSON reports",
         ok9 ? "" : "reports differ or violations present");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criteria_4_and_5();
  criterion_6();
  criterion_7();
  criteria_8_and_9();
  if (failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
