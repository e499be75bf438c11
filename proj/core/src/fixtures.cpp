#include "natfull/fixtures.hpp"

namespace natfull {

namespace {

Json morphism_fixture_doc(const AlgebraMorphism& phi, const std::string& source_id,
                          const std::string& target_id, const std::string& morphism_id) {
  Json doc;
  doc["version"] = "natfull/1";
  doc["algebras"] = Json::object();
  doc["algebras"][source_id] = algebra_to_json(phi.source);
  doc["algebras"][target_id] = algebra_to_json(phi.target);
  doc["morphisms"] = Json::object();
  doc["morphisms"][morphism_id] = morphism_to_json(phi, source_id, target_id);
  return doc;
}

AlgebraMorphism fix_id_morphism(std::uint32_t p) {
  return identity_morphism(field_algebra(p));
}

AlgebraMorphism fix_proj_morphism(std::uint32_t p) {
  FDAlgebra s = field_algebra(p);
  FDAlgebra r = product_algebra(s, s);
  Mat m(s.field, 1, 2);
  m.at(0, 0) = 1;
  return AlgebraMorphism{r, s, m};
}

AlgebraMorphism fix_f4_morphism() {
  FDAlgebra r2 = field_algebra(2);
  FDAlgebra f4 = polynomial_quotient_algebra(2, {1, 1});
  return AlgebraMorphism{r2, f4, Mat::from_columns(PrimeField(2), {{1, 0}}, 2)};
}

AlgebraMorphism fixture_morphism(const std::string& id, std::uint32_t p) {
  if (id == "FIX-ID") return fix_id_morphism(p);
  if (id == "FIX-PROJ") return fix_proj_morphism(p);
  if (id == "FIX-TRI") return build_triangular_example(p).second;
  if (id == "FIX-F4") {
    if (p != 2) throw Error("FIX-F4 is defined over F_2");
    return fix_f4_morphism();
  }
  throw Error("fixture " + id + " is not a morphism fixture");
}

Json coring_fixture_doc(const Coring& c, const std::string& base_id, const std::string& coring_id) {
  Json doc;
  doc["version"] = "natfull/1";
  doc["algebras"] = Json::object();
  doc["algebras"][base_id] = algebra_to_json(c.base);
  Json carrier = bimodule_to_json(c.carrier, base_id, base_id);
  doc["corings"] = Json::object();
  doc["corings"][coring_id] = coring_to_json(c, base_id, carrier);
  return doc;
}

Module mat2_bimodule(std::uint32_t p) {
  FDAlgebra s = field_algebra(p);
  Module m = free_left_module(s, 2);
  m.right = s;
  m.right_action = {Mat::identity(s.field, 2)};
  return m;
}

}  // namespace

std::vector<FixtureInfo> fixture_catalog() {
  return {
      {"FIX-ID", "identity morphism on F_p", true, false},
      {"FIX-PROJ", "projection F_p x F_p ->> F_p (extension naturally full, e = (1,0))", true, false},
      {"FIX-TRI", "triangular corner projection (extension full but not naturally full)", true,
       false},
      {"FIX-F4", "unit embedding F_2 -> F_4 (nothing is full)", false, false},
      {"FIX-MAT2", "2x2 comatrix coring over F_p", true, false},
      {"FIX-SWE", "Sweedler coring of a morphism fixture (--of, default FIX-PROJ)", true, true},
      {"FIX-TRIV", "trivial coring over F_p", true, false},
  };
}

Json emit_fixture(const std::string& id, std::uint32_t p, const std::string& of) {
  if (id == "FIX-ID") return morphism_fixture_doc(fixture_morphism(id, p), "R", "R", "phi");
  if (id == "FIX-PROJ" || id == "FIX-TRI" || id == "FIX-F4") {
    return morphism_fixture_doc(fixture_morphism(id, p), "R", "S", "phi");
  }
  if (id == "FIX-MAT2") {
    Coring c = comatrix_coring(mat2_bimodule(p));
    return coring_fixture_doc(c, "R", "C");
  }
  if (id == "FIX-SWE") {
    AlgebraMorphism phi = fixture_morphism(of, p);
    Coring c = sweedler_coring(phi);
    Json doc = coring_fixture_doc(c, "S", "C");
    // include the generating morphism for provenance
    doc["algebras"]["R"] = algebra_to_json(phi.source);
    doc["morphisms"] = Json::object();
    doc["morphisms"]["phi"] = morphism_to_json(phi, "R", "S");
    return doc;
  }
  if (id == "FIX-TRIV") {
    Coring c = trivial_coring(field_algebra(p));
    return coring_fixture_doc(c, "R", "C");
  }
  throw Error("unknown fixture id: " + id);
}

}  // namespace natfull
