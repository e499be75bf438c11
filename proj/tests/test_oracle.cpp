#include <doctest.h>

#include "natfull/oracle.hpp"

using namespace natfull;

namespace {

AlgebraMorphism fix_f4() {
  FDAlgebra r2 = field_algebra(2);
  FDAlgebra f4 = polynomial_quotient_algebra(2, {1, 1});
  return AlgebraMorphism{r2, f4, Mat::from_columns(PrimeField(2), {{1, 0}}, 2)};
}

AlgebraMorphism fix_proj() {
  FDAlgebra r2 = field_algebra(2);
  FDAlgebra rr = product_algebra(r2, r2);
  return AlgebraMorphism{rr, r2, Mat::from_rows(PrimeField(2), {{1, 0}}, 2)};
}

}  // namespace

TEST_CASE("per-object fullness") {
  SUBCASE("identity adjunction: everything splits") {
    auto adj = scalars_adjunction(identity_morphism(field_algebra(3)));
    PerObjectReport rep = per_object_fullness(*adj, true, adj->source_family(1));
    CHECK(rep.all_solvable);
  }
  SUBCASE("extension along the triangular projection is full per object") {
    auto [r, phi] = build_triangular_example(2);
    auto adj = scalars_adjunction(phi);
    PerObjectReport rep = per_object_fullness(*adj, true, adj->source_family(1));
    CHECK(rep.all_solvable);
  }
  SUBCASE("extension along F_2 -> F_4 fails at the regular module") {
    auto adj = scalars_adjunction(fix_f4());
    PerObjectReport rep = per_object_fullness(*adj, true, adj->source_family(1));
    CHECK_FALSE(rep.all_solvable);
    bool regular_fails = false;
    for (const auto& [label, ok] : rep.objects) {
      if (label == "R regular" && !ok) regular_fails = true;
    }
    CHECK(regular_fails);
  }
}

TEST_CASE("natural splittings from criterion witnesses") {
  SUBCASE("extension witness of FIX-PROJ") {
    AlgebraMorphism phi = fix_proj();
    ScalarsFamily fam = default_scalars_family(phi);
    ExtensionReport ext = analyze_extension(phi, fam);
    REQUIRE(ext.naturally_full);
    auto adj = scalars_adjunction(phi);
    auto nu = scalars_nu_from_E(phi, *ext.witness_E);
    SplittingWitness w = natural_splitting_from_witness(*adj, true, *nu, "Prop 3.1 (2)", 1);
    CHECK(w.kind == "nu");
    CHECK(w.components.size() >= 4);
  }
  SUBCASE("restriction witness of an epimorphism") {
    auto [r, phi] = build_triangular_example(3);
    ScalarsFamily fam = default_scalars_family(phi);
    RestrictionReport rest = analyze_restriction(phi, fam);
    REQUIRE(rest.naturally_full);
    auto adj = scalars_adjunction(phi);
    auto xi = scalars_xi_from_e(phi, *rest.witness_e);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, false, *xi, "Thm 1.1 (4)", 1));
  }
  SUBCASE("trivial coring z-witness, both sides") {
    Coring c = trivial_coring(product_algebra(field_algebra(2), field_algebra(2)));
    auto cot = analyze_cotensor_functor(c);
    REQUIRE(cot.naturally_full);
    auto adj = coring_adjunction(c);
    auto xi = coring_xi_from_z(c, *cot.witness_z);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, false, *xi, "Prop 3.12 (1)", 1));
    auto der = derived_checks(c);
    auto nu = coring_nu_from_theta(c, *der.coseparability_chi);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, true, *nu, "Prop 3.12 (2)", 1));
  }
  SUBCASE("coinduction witness on the identity bimodule") {
    Module m = bimodule_regular(field_algebra(2));
    CoinductionReport co = analyze_coinduction(m);
    REQUIRE(co.naturally_full);
    auto adj = bimodule_adjunction(m);
    auto xi = bimodule_xi_from_z(m, *co.witness_z);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, false, *xi, "Thm 3.8 (1)", 1));
    InductionReport ind = analyze_induction(m);
    REQUIRE(ind.naturally_full);
    auto nu = bimodule_nu_from_E(m, *ind.witness_E);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, true, *nu, "Thm 3.8 (2)", 1));
  }
  SUBCASE("cormor witnesses on an identity coring morphism") {
    Coring c = sweedler_coring(fix_proj());
    CoringMorphism id{c, c, identity_morphism(c.base), Mat::identity(c.base.field, c.dim())};
    FNatFullReport fr = analyze_F_naturally_full(id);
    REQUIRE(fr.naturally_full);
    auto adj = cormor_adjunction(id);
    auto nu = cormor_nu_from_nuC(id, *fr.witness_nu);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, true, *nu, "Thm 3.20", 1));
    GNatFullReport gr = analyze_G_naturally_full(id);
    REQUIRE(gr.naturally_full);
    auto xi = cormor_xi_from_Psi(id, *gr.witness_Psi);
    CHECK_NOTHROW(natural_splitting_from_witness(*adj, false, *xi, "Thm 3.21", 1));
  }
}

TEST_CASE("composition checks run clean") {
  CompositionReport rep = composition_checks(7, 8, 2, 3);
  CHECK(rep.chains == 8);
  CHECK(rep.violations.empty());
}

TEST_CASE("equivalence suite") {
  SUBCASE("empty run") {
    SuiteReport rep = equivalence_suite(1, 0, 2, 3);
    CHECK(rep.morphisms == 1);  // the triangular fixture is always included
    CHECK(rep.violations.empty());
    CHECK(rep.contains_full_not_naturally_full);
  }
  SUBCASE("small seeded run has zero violations") {
    SuiteReport rep = equivalence_suite(1, 5, 2, 3);
    for (const auto& v : rep.violations) {
      CAPTURE(v.instance);
      CAPTURE(v.check);
      CHECK(false);
    }
    CHECK(rep.violations.empty());
    CHECK(rep.morphisms == 6);
    CHECK(rep.bimodules == 5);
    CHECK(rep.corings == 5);
    CHECK(rep.coring_morphisms == 5);
    CHECK(rep.witnesses_verified > 0);
  }
  SUBCASE("determinism of the counters") {
    SuiteReport a = equivalence_suite(42, 3, 2, 3);
    SuiteReport b = equivalence_suite(42, 3, 2, 3);
    CHECK(a.restriction_naturally_full == b.restriction_naturally_full);
    CHECK(a.extension_naturally_full == b.extension_naturally_full);
    CHECK(a.coinduction_naturally_full == b.coinduction_naturally_full);
    CHECK(a.cotensor_naturally_full == b.cotensor_naturally_full);
    CHECK(a.f_naturally_full == b.f_naturally_full);
    CHECK(a.witnesses_verified == b.witnesses_verified);
    CHECK(a.grouplikes_found == b.grouplikes_found);
    CHECK(a.violations.size() == b.violations.size());
  }
}
