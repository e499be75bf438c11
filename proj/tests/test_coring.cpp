#include <doctest.h>

#include "natfull/bimodule_functors.hpp"
#include "natfull/coring.hpp"
#include "natfull/scalars.hpp"

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

Module fix_mat2_bimodule() {
  FDAlgebra r2 = field_algebra(2);
  Module m = free_left_module(r2, 2);
  m.right = r2;
  m.right_action = {Mat::identity(PrimeField(2), 2)};
  return m;
}

Coring zero_coring() {
  FDAlgebra r2 = field_algebra(2);
  PrimeField f2(2);
  Module carrier{f2, 0, r2, r2, {Mat(f2, 0, 0)}, {Mat(f2, 0, 0)}};
  return Coring{r2, carrier, Mat(f2, 0, 0), Mat(f2, 1, 0)};
}

}  // namespace

TEST_CASE("coring validation") {
  SUBCASE("trivial corings") {
    CHECK(validate_coring(trivial_coring(field_algebra(2))).empty());
    CHECK(validate_coring(trivial_coring(product_algebra(field_algebra(3), field_algebra(3)))).empty());
    auto [tri, phi] = build_triangular_example(2);
    CHECK(validate_coring(trivial_coring(tri)).empty());
  }
  SUBCASE("Sweedler corings") {
    CHECK(validate_coring(sweedler_coring(fix_f4())).empty());
    CHECK(validate_coring(sweedler_coring(fix_proj())).empty());
    CHECK(validate_coring(sweedler_coring(build_triangular_example(3).second)).empty());
  }
  SUBCASE("comatrix coring") {
    CHECK(validate_coring(comatrix_coring(fix_mat2_bimodule())).empty());
  }
  SUBCASE("zero comultiplication breaks the counit law") {
    Coring c = trivial_coring(field_algebra(2));
    c.delta = Mat(PrimeField(2), 1, 1);
    auto bad = validate_coring(c);
    CHECK_FALSE(bad.empty());
  }
  SUBCASE("zero-dimensional coring is valid") {
    CHECK(validate_coring(zero_coring()).empty());
  }
}

TEST_CASE("comodule validation and constructors") {
  Coring c = sweedler_coring(fix_proj());
  CHECK(validate_comodule(c, regular_comodule(c)).empty());
  CHECK(validate_comodule(c, induced_comodule(c, right_regular(c.base))).empty());
  auto gs = grouplikes(c);
  REQUIRE_FALSE(gs.empty());
  CHECK(validate_comodule(c, grouplike_base_comodule(c, gs.front())).empty());
}

TEST_CASE("cotensor functor analyzer (G = - (x)_R C)") {
  SUBCASE("trivial coring: naturally full with z = 1") {
    for (std::uint32_t p : {2u, 3u}) {
      Coring c = trivial_coring(field_algebra(p));
      auto rep = analyze_cotensor_functor(c);
      CHECK(rep.naturally_full);
      REQUIRE(rep.witness_z.has_value());
      CHECK(*rep.witness_z == Vec{1});
    }
  }
  SUBCASE("FIX-MAT2: not naturally full (dim C > dim R)") {
    Coring c = comatrix_coring(fix_mat2_bimodule());
    REQUIRE(c.dim() == 4);
    auto rep = analyze_cotensor_functor(c);
    CHECK_FALSE(rep.naturally_full);
  }
  SUBCASE("Sweedler coring of FIX-PROJ: naturally full") {
    Coring c = sweedler_coring(fix_proj());
    REQUIRE(c.dim() == 1);
    auto rep = analyze_cotensor_functor(c);
    CHECK(rep.naturally_full);
  }
}

TEST_CASE("forgetful functor analyzer") {
  SUBCASE("trivial coring: naturally full") {
    Coring c = trivial_coring(product_algebra(field_algebra(2), field_algebra(2)));
    auto rep = analyze_forgetful_functor(c);
    CHECK(rep.naturally_full);
    CHECK(rep.delta_surjective);
  }
  SUBCASE("Sweedler coring verdict equals the ring-epimorphism verdict") {
    for (AlgebraMorphism phi : {identity_morphism(field_algebra(2)), fix_f4(), fix_proj(),
                                build_triangular_example(2).second}) {
      Coring c = sweedler_coring(phi);
      auto rep = analyze_forgetful_functor(c);
      CHECK(rep.naturally_full == is_ring_epimorphism(phi).is_epi);
    }
  }
  SUBCASE("FIX-MAT2: not naturally full") {
    Coring c = comatrix_coring(fix_mat2_bimodule());
    CHECK_FALSE(analyze_forgetful_functor(c).naturally_full);
  }
}

TEST_CASE("coring-ring bijection (Cor 3.12)") {
  SUBCASE("trivial coring corresponds to R itself") {
    FDAlgebra r = product_algebra(field_algebra(2), field_algebra(2));
    CoringRingSide rs = coring_to_ring(trivial_coring(r));
    CHECK(rs.ring.mul == r.mul);
    CHECK(rs.ring.unit == r.unit);
    CHECK(rs.xi.matrix.is_identity());
  }
  SUBCASE("round trip coring -> ring -> coring is the identity") {
    for (Coring c : {trivial_coring(field_algebra(3)), sweedler_coring(fix_proj()),
                     trivial_coring(build_triangular_example(2).first)}) {
      CoringRingSide rs = coring_to_ring(c);
      Coring back = ring_to_coring(rs);
      CHECK(back.epsilon == c.epsilon);
      CoringParts p1 = coring_parts(c);
      CoringParts p2 = coring_parts(back);
      CHECK(p1.delta_q == p2.delta_q);
    }
  }
  SUBCASE("round trip ring -> coring -> ring is the identity") {
    Coring c = sweedler_coring(fix_proj());
    CoringRingSide rs = coring_to_ring(c);
    Coring mid = ring_to_coring(rs);
    CoringRingSide back = coring_to_ring(mid);
    CHECK(back.ring.mul == rs.ring.mul);
    CHECK(back.ring.unit == rs.ring.unit);
    CHECK(back.xi.matrix == rs.xi.matrix);
    CHECK(back.section_E == rs.section_E);
  }
  SUBCASE("criterion failure is reported") {
    CHECK_THROWS_AS(coring_to_ring(comatrix_coring(fix_mat2_bimodule())), CriterionNotMet);
  }
}

TEST_CASE("derived checks (Cor 3.13)") {
  SUBCASE("trivial coring") {
    auto rep = derived_checks(trivial_coring(field_algebra(2)));
    CHECK(rep.g_side_applicable);
    CHECK(rep.fgp_left);
    CHECK(rep.fgp_right);
    CHECK(rep.frobenius_phi_bijective);
    CHECK(rep.f_side_applicable);
    CHECK(rep.coseparability_identity);
  }
  SUBCASE("Sweedler coring of FIX-PROJ") {
    auto rep = derived_checks(sweedler_coring(fix_proj()));
    CHECK(rep.g_side_applicable);
    CHECK(rep.fgp_left);
    CHECK(rep.fgp_right);
    CHECK(rep.frobenius_phi_bijective);
  }
  SUBCASE("F naturally full alone still yields the cointegral") {
    // Sweedler coring of the triangular example: phi is epi, so F is
    // naturally full; G is not (eps: S (x)_R S -> S is iso, but z = eps^{-1}(1)
    // must satisfy eps(c) z = c, which fails when dim C != dim R... here it
    // reduces to the ring side). Just exercise the F side flags.
    auto rep = derived_checks(sweedler_coring(build_triangular_example(2).second));
    CHECK(rep.f_side_applicable);
    CHECK(rep.coseparability_identity);
  }
}

TEST_CASE("grouplikes") {
  SUBCASE("trivial coring over F_2 has exactly one grouplike, 1") {
    auto gs = grouplikes(trivial_coring(field_algebra(2)));
    REQUIRE(gs.size() == 1);
    CHECK(gs[0] == Vec{1});
  }
  SUBCASE("Sweedler coring of FIX-F4 contains the class of 1 (x) 1") {
    AlgebraMorphism phi = fix_f4();
    Coring c = sweedler_coring(phi);
    ScalarExtensionParts parts = scalar_extension_parts(phi);
    auto gs = grouplikes(c);
    CHECK(std::find(gs.begin(), gs.end(), parts.one_tensor_one) != gs.end());
  }
  SUBCASE("zero coring has none") {
    CHECK(grouplikes(zero_coring()).empty());
  }
}

TEST_CASE("coinvariants") {
  SUBCASE("trivial coring, g = 1: B = R and the regular comodule is all-coinvariant") {
    FDAlgebra r = product_algebra(field_algebra(2), field_algebra(2));
    Coring c = trivial_coring(r);
    auto gs = grouplikes(c);
    REQUIRE(gs.size() >= 1);
    Vec g = r.unit;
    BaseCoinvariants bc = coinvariants_base(c, g);
    CHECK(bc.b.dim == r.dim);
    Subspace s = coinvariants(c, g, regular_comodule(c));
    CHECK(s.dim() == r.dim);
  }
  SUBCASE("Sweedler coring of FIX-F4 at g = 1 (x) 1: B = F_2") {
    AlgebraMorphism phi = fix_f4();
    Coring c = sweedler_coring(phi);
    Vec g = scalar_extension_parts(phi).one_tensor_one;
    BaseCoinvariants bc = coinvariants_base(c, g);
    CHECK(bc.b.dim == 1);
    CHECK(bc.b.validate().empty());
  }
}

TEST_CASE("Prop 3.15 chi condition") {
  SUBCASE("trivial coring with the canonical cointegral") {
    Coring c = trivial_coring(field_algebra(2));
    auto der = derived_checks(c);
    REQUIRE(der.coseparability_chi.has_value());
    auto rep = check_chi_condition(c, Vec{1}, *der.coseparability_chi);
    CHECK(rep.hypotheses_met);
    REQUIRE(rep.alpha_bijective.has_value());
    CHECK(*rep.alpha_bijective);
  }
  SUBCASE("chi = 0 fails the normalization") {
    Coring c = trivial_coring(field_algebra(2));
    Mat zero(PrimeField(2), 1, coring_parts(c).cc.result.dim);
    auto rep = check_chi_condition(c, Vec{1}, zero);
    CHECK_FALSE(rep.hypotheses_met);
  }
  SUBCASE("Sweedler coring of FIX-PROJ with the derived cointegral") {
    AlgebraMorphism phi = fix_proj();
    Coring c = sweedler_coring(phi);
    auto der = derived_checks(c);
    REQUIRE(der.coseparability_chi.has_value());
    auto gs = grouplikes(c);
    REQUIRE_FALSE(gs.empty());
    auto rep = check_chi_condition(c, gs.front(), *der.coseparability_chi);
    CHECK(rep.hypotheses_met);
    REQUIRE(rep.alpha_bijective.has_value());
    CHECK(*rep.alpha_bijective);
  }
}

TEST_CASE("constructor identities") {
  SUBCASE("sweedler(id) is the trivial coring up to the canonical identification") {
    FDAlgebra r = product_algebra(field_algebra(2), field_algebra(2));
    Coring c = sweedler_coring(identity_morphism(r));
    CHECK(c.dim() == r.dim);
    CHECK(validate_coring(c).empty());
    CHECK(analyze_cotensor_functor(c).naturally_full);
    CHECK(analyze_forgetful_functor(c).naturally_full);
  }
  SUBCASE("comatrix of the regular bimodule is trivial-like") {
    FDAlgebra s = product_algebra(field_algebra(2), field_algebra(2));
    Coring c = comatrix_coring(bimodule_regular(s));
    CHECK(c.dim() == s.dim);
    CHECK(validate_coring(c).empty());
    CHECK(analyze_cotensor_functor(c).naturally_full);
  }
}

TEST_CASE("bridge: comatrix coring analyzers match the bimodule analyzers") {
  std::vector<Module> bimodules;
  bimodules.push_back(bimodule_regular(field_algebra(2)));
  bimodules.push_back(fix_mat2_bimodule());
  {
    AlgebraMorphism proj = fix_proj();
    bimodules.push_back(right_module_via(bimodule_regular(proj.target), proj));
    AlgebraMorphism incl = fix_f4();
    bimodules.push_back(right_module_via(bimodule_regular(incl.target), incl));
  }
  for (const Module& m : bimodules) {
    Coring c = comatrix_coring(m);
    CHECK(validate_coring(c).empty());
    CHECK(analyze_cotensor_functor(c).naturally_full == analyze_coinduction(m).naturally_full);
    EndAlgebra ea = endomorphism_algebra(m);
    ScalarsFamily fam = default_scalars_family(*ea.chi);
    CHECK(analyze_induction(m).naturally_full == analyze_extension(*ea.chi, fam).naturally_full);
  }
}
