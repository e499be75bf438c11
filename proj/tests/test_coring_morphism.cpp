#include <doctest.h>

#include "natfull/coring_morphism.hpp"
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

AlgebraMorphism fix_diag() {
  FDAlgebra r2 = field_algebra(2);
  FDAlgebra rr = product_algebra(r2, r2);
  return AlgebraMorphism{r2, rr, Mat::from_columns(PrimeField(2), {{1, 1}}, 2)};
}

Module fix_mat2_bimodule() {
  FDAlgebra r2 = field_algebra(2);
  Module m = free_left_module(r2, 2);
  m.right = r2;
  m.right_action = {Mat::identity(PrimeField(2), 2)};
  return m;
}

CoringMorphism identity_coring_morphism(const Coring& c) {
  return CoringMorphism{c, c, identity_morphism(c.base), Mat::identity(c.base.field, c.dim())};
}

// F on morphisms: f (x)_R S.
Mat f_on_map(const CoringMorphism& m, const InducedDComodule& fsrc, const InducedDComodule& ftgt,
             const Mat& f) {
  std::size_t sd = m.phi.target.dim;
  return ftgt.chain.projection * Mat::kronecker(f, Mat::identity(m.phi.target.field, sd)) *
         fsrc.chain.section;
}

// G on morphisms: restriction of u (x)_S L to the equalizers.
Mat g_on_map(const CoringMorphism& m, const CotensorSpace& gsrc, const CotensorSpace& gtgt,
             const Mat& u) {
  const PrimeField& f = m.phi.target.field;
  std::size_t ld = gsrc.x.factor_dims[1];
  Mat big = gtgt.x.projection * Mat::kronecker(u, Mat::identity(f, ld)) * gsrc.x.section *
            gsrc.inclusion;
  auto coords = solve_affine_columns(gtgt.inclusion, big);
  REQUIRE(coords.has_value());
  return *coords;
}

void check_triangles(const CoringMorphism& m, const Comodule& obj_c, const Comodule& obj_d) {
  // triangle 2: eps_{FM} . F(eta_M) = id_{FM}
  InducedDComodule fm = apply_F(m, obj_c);
  CotensorSpace gfm = cotensor(m, fm.comodule);
  Mat eta = cormor_unit(m, obj_c, fm, gfm);
  InducedDComodule fgfm = apply_F(m, Comodule{gfm.module, gfm.rho});
  Mat f_eta = f_on_map(m, fm, fgfm, eta);
  Mat eps_fm = cormor_counit(m, fm.comodule, gfm, fgfm);
  CHECK((eps_fm * f_eta).is_identity());

  // triangle 1: G(eps_N) . eta_{GN} = id_{GN}
  CotensorSpace gn = cotensor(m, obj_d);
  Comodule gn_com{gn.module, gn.rho};
  InducedDComodule fgn = apply_F(m, gn_com);
  Mat eps_n = cormor_counit(m, obj_d, gn, fgn);
  CotensorSpace gfgn = cotensor(m, fgn.comodule);
  Mat g_eps = g_on_map(m, gfgn, gn, eps_n);
  Mat eta_gn = cormor_unit(m, gn_com, fgn, gfgn);
  CHECK((g_eps * eta_gn).is_identity());
}

}  // namespace

TEST_CASE("coring morphism validation") {
  SUBCASE("(eps_C, id) is a morphism into the trivial coring") {
    for (Coring c : {sweedler_coring(fix_f4()), sweedler_coring(fix_proj()),
                     comatrix_coring(fix_mat2_bimodule())}) {
      CHECK(validate_coring_morphism(counit_morphism(c)).empty());
    }
  }
  SUBCASE("(phi, phi) between trivial corings") {
    for (AlgebraMorphism phi : {identity_morphism(field_algebra(3)), fix_f4(), fix_proj(),
                                build_triangular_example(2).second, fix_diag()}) {
      CHECK(validate_coring_morphism(trivial_morphism_pair(phi)).empty());
    }
  }
  SUBCASE("a broken Phi is rejected") {
    Coring c = sweedler_coring(fix_f4());
    CoringMorphism m = counit_morphism(c);
    m.Phi = Mat(PrimeField(2), m.target.dim(), c.dim());  // zero map
    CHECK_FALSE(validate_coring_morphism(m).empty());
  }
}

TEST_CASE("cotensor over the identity morphism recovers the comodule") {
  for (Coring c : {trivial_coring(product_algebra(field_algebra(2), field_algebra(2))),
                   sweedler_coring(fix_f4())}) {
    CoringMorphism id = identity_coring_morphism(c);
    REQUIRE(validate_coring_morphism(id).empty());
    Comodule reg = regular_comodule(c);
    CotensorSpace k = cotensor(id, reg);
    CHECK(k.module.dim == reg.module.dim);
  }
}

TEST_CASE("cotensor over (phi, phi) has the dimension of the restriction") {
  for (AlgebraMorphism phi : {fix_f4(), fix_proj(), fix_diag()}) {
    CoringMorphism m = trivial_morphism_pair(phi);
    Comodule reg = regular_comodule(m.target);  // S as a comodule over itself
    CotensorSpace k = cotensor(m, reg);
    CHECK(k.module.dim == phi.target.dim);
  }
}

TEST_CASE("Thm 3.20 reduction: F over (phi, phi) matches the extension analyzer") {
  for (AlgebraMorphism phi : {identity_morphism(field_algebra(2)), fix_f4(), fix_proj(),
                              build_triangular_example(2).second, fix_diag()}) {
    CoringMorphism m = trivial_morphism_pair(phi);
    FNatFullReport f = analyze_F_naturally_full(m);
    ScalarsFamily fam = default_scalars_family(phi);
    ExtensionReport ext = analyze_extension(phi, fam);
    CHECK(f.naturally_full == ext.naturally_full);
  }
}

TEST_CASE("Thm 3.21 reduction: G over (phi, phi) matches the epimorphism test") {
  for (AlgebraMorphism phi : {identity_morphism(field_algebra(2)), fix_f4(), fix_proj(),
                              build_triangular_example(2).second, fix_diag()}) {
    CoringMorphism m = trivial_morphism_pair(phi);
    GNatFullReport g = analyze_G_naturally_full(m);
    CHECK(g.naturally_full == is_ring_epimorphism(phi).is_epi);
  }
}

TEST_CASE("reductions over (eps_C, id) match the coring analyzers") {
  std::vector<Coring> corings;
  corings.push_back(trivial_coring(product_algebra(field_algebra(2), field_algebra(2))));
  corings.push_back(sweedler_coring(fix_proj()));
  corings.push_back(sweedler_coring(fix_f4()));
  corings.push_back(comatrix_coring(fix_mat2_bimodule()));
  for (const Coring& c : corings) {
    CoringMorphism m = counit_morphism(c);
    REQUIRE(validate_coring_morphism(m).empty());
    CHECK(analyze_F_naturally_full(m).naturally_full == analyze_forgetful_functor(c).naturally_full);
    CHECK(analyze_G_naturally_full(m).naturally_full == analyze_cotensor_functor(c).naturally_full);
  }
}

TEST_CASE("identity coring morphism is naturally full on both sides") {
  Coring c = sweedler_coring(fix_proj());
  CoringMorphism id = identity_coring_morphism(c);
  CHECK(analyze_F_naturally_full(id).naturally_full);
  CHECK(analyze_G_naturally_full(id).naturally_full);
}

TEST_CASE("triangle identities hold for the (F, G) adjunction") {
  SUBCASE("(phi, phi) instances") {
    for (AlgebraMorphism phi : {fix_proj(), fix_f4()}) {
      CoringMorphism m = trivial_morphism_pair(phi);
      Comodule obj_c = regular_comodule(m.source);
      Comodule obj_d = regular_comodule(m.target);
      check_triangles(m, obj_c, obj_d);
    }
  }
  SUBCASE("(eps_C, id) instances") {
    for (Coring c : {sweedler_coring(fix_proj()), sweedler_coring(fix_f4())}) {
      CoringMorphism m = counit_morphism(c);
      check_triangles(m, regular_comodule(c), regular_comodule(m.target));
    }
  }
}
