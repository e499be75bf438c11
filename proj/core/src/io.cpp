#include "natfull/io.hpp"

#include <fstream>
#include <sstream>

namespace natfull {

namespace {

std::uint32_t reduced(const PrimeField& f, std::int64_t v) {
  return f.reduce(v);
}

Mat json_to_matrix(const PrimeField& f, const Json& j, std::size_t rows, std::size_t cols,
                   const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  }
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                       " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = reduced(f, row[k].get<std::int64_t>());
  }
  return m;
}

Vec json_to_vec(const PrimeField& f, const Json& j, std::size_t len, const std::string& what) {
  if (!j.is_array() || j.size() != len) {
    throw ParseError(what + ": expected a vector of length " + std::to_string(len));
  }
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = reduced(f, j[i].get<std::int64_t>());
  return v;
}

std::vector<Mat> json_to_action(const PrimeField& f, const Json& j, std::size_t alg_dim,
                                std::size_t mod_dim, const std::string& what) {
  if (!j.is_array() || j.size() != alg_dim) {
    throw ParseError(what + ": expected one matrix per algebra basis element");
  }
  std::vector<Mat> act;
  for (std::size_t a = 0; a < alg_dim; ++a) {
    act.push_back(json_to_matrix(f, j[a], mod_dim, mod_dim, what));
  }
  return act;
}

Module parse_bimodule(const InstanceFile& file, const Json& j, const std::string& id) {
  std::optional<FDAlgebra> left, right;
  if (j.contains("left_algebra") && !j["left_algebra"].is_null()) {
    std::string lid = j["left_algebra"].get<std::string>();
    auto it = file.algebras.find(lid);
    if (it == file.algebras.end()) throw ParseError("bimodule " + id + ": unknown algebra " + lid);
    left = it->second;
  }
  if (j.contains("right_algebra") && !j["right_algebra"].is_null()) {
    std::string rid = j["right_algebra"].get<std::string>();
    auto it = file.algebras.find(rid);
    if (it == file.algebras.end()) throw ParseError("bimodule " + id + ": unknown algebra " + rid);
    right = it->second;
  }
  if (!left && !right) throw ParseError("bimodule " + id + ": no algebra on either side");
  PrimeField f = left ? left->field : right->field;
  std::size_t dim = j.at("dim").get<std::size_t>();
  Module m{f, dim, left, right, {}, {}};
  if (left) m.left_action = json_to_action(f, j.at("left_action"), left->dim, dim, "bimodule " + id);
  if (right)
    m.right_action = json_to_action(f, j.at("right_action"), right->dim, dim, "bimodule " + id);
  return m;
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (std::uint32_t x : v) a.push_back(x);
  return a;
}

Json algebra_to_json(const FDAlgebra& a) {
  Json j;
  j["p"] = a.field.modulus();
  j["dim"] = a.dim;
  Json mul = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim; ++k) row.push_back(vec_to_json(a.basis_product(i, k)));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["unit"] = vec_to_json(a.unit);
  return j;
}

Json morphism_to_json(const AlgebraMorphism& m, const std::string& source_id,
                      const std::string& target_id) {
  Json j;
  j["source"] = source_id;
  j["target"] = target_id;
  j["matrix"] = matrix_to_json(m.matrix);
  return j;
}

Json bimodule_to_json(const Module& m, const std::optional<std::string>& left_id,
                      const std::optional<std::string>& right_id) {
  Json j;
  j["left_algebra"] = left_id ? Json(*left_id) : Json(nullptr);
  j["right_algebra"] = right_id ? Json(*right_id) : Json(nullptr);
  j["dim"] = m.dim;
  if (m.left) {
    Json act = Json::array();
    for (const Mat& a : m.left_action) act.push_back(matrix_to_json(a));
    j["left_action"] = std::move(act);
  }
  if (m.right) {
    Json act = Json::array();
    for (const Mat& a : m.right_action) act.push_back(matrix_to_json(a));
    j["right_action"] = std::move(act);
  }
  return j;
}

Json coring_to_json(const Coring& c, const std::string& base_id, const Json& carrier) {
  Json j;
  j["base"] = base_id;
  j["carrier"] = carrier;
  j["delta"] = matrix_to_json(c.delta);
  j["epsilon"] = matrix_to_json(c.epsilon);
  return j;
}

InstanceFile parse_instance_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (doc.value("version", "") != std::string("natfull/1")) {
    throw ParseError("missing or unsupported version tag (expected \"natfull/1\")");
  }

  InstanceFile file;
  file.raw = doc;
  std::vector<std::string> violations;

  if (doc.contains("algebras")) {
    for (auto& [id, j] : doc["algebras"].items()) {
      std::uint32_t p = j.at("p").get<std::uint32_t>();
      PrimeField f(p);
      std::size_t dim = j.at("dim").get<std::size_t>();
      FDAlgebra a{f, dim, {}, {}};
      const Json& mul = j.at("mul");
      if (!mul.is_array() || mul.size() != dim) throw ParseError("algebra " + id + ": bad mul table");
      a.mul.resize(dim * dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!mul[i].is_array() || mul[i].size() != dim)
          throw ParseError("algebra " + id + ": bad mul row");
        for (std::size_t k = 0; k < dim; ++k)
          a.mul[i * dim + k] = json_to_vec(f, mul[i][k], dim, "algebra " + id);
      }
      a.unit = json_to_vec(f, j.at("unit"), dim, "algebra " + id);
      for (const std::string& v : a.validate()) violations.push_back("algebra " + id + ": " + v);
      file.algebras.emplace(id, std::move(a));
    }
  }

  if (doc.contains("morphisms")) {
    for (auto& [id, j] : doc["morphisms"].items()) {
      std::string sid = j.at("source").get<std::string>();
      std::string tid = j.at("target").get<std::string>();
      auto si = file.algebras.find(sid);
      auto ti = file.algebras.find(tid);
      if (si == file.algebras.end() || ti == file.algebras.end()) {
        throw ParseError("morphism " + id + ": unresolved algebra reference");
      }
      Mat m = json_to_matrix(si->second.field, j.at("matrix"), ti->second.dim, si->second.dim,
                             "morphism " + id);
      AlgebraMorphism phi{si->second, ti->second, std::move(m)};
      for (const std::string& v : phi.validate()) violations.push_back("morphism " + id + ": " + v);
      file.morphisms.emplace(id, std::move(phi));
    }
  }

  if (doc.contains("bimodules")) {
    for (auto& [id, j] : doc["bimodules"].items()) {
      Module m = parse_bimodule(file, j, id);
      for (const std::string& v : m.validate()) violations.push_back("bimodule " + id + ": " + v);
      file.bimodules.emplace(id, std::move(m));
    }
  }

  if (doc.contains("corings")) {
    for (auto& [id, j] : doc["corings"].items()) {
      std::string bid = j.at("base").get<std::string>();
      auto bi = file.algebras.find(bid);
      if (bi == file.algebras.end()) throw ParseError("coring " + id + ": unknown base " + bid);
      Module carrier{bi->second.field, 0, std::nullopt, std::nullopt, {}, {}};
      const Json& cj = j.at("carrier");
      if (cj.is_string()) {
        auto mi = file.bimodules.find(cj.get<std::string>());
        if (mi == file.bimodules.end())
          throw ParseError("coring " + id + ": unknown carrier " + cj.get<std::string>());
        carrier = mi->second;
      } else {
        carrier = parse_bimodule(file, cj, id + ".carrier");
      }
      std::size_t d = carrier.dim;
      Mat delta = json_to_matrix(bi->second.field, j.at("delta"), d * d, d, "coring " + id);
      Mat eps = json_to_matrix(bi->second.field, j.at("epsilon"), bi->second.dim, d, "coring " + id);
      Coring c{bi->second, std::move(carrier), std::move(delta), std::move(eps)};
      for (const std::string& v : validate_coring(c)) violations.push_back("coring " + id + ": " + v);
      file.corings.emplace(id, std::move(c));
    }
  }

  if (doc.contains("comodules")) {
    for (auto& [id, j] : doc["comodules"].items()) {
      std::string cid = j.at("coring").get<std::string>();
      auto ci = file.corings.find(cid);
      if (ci == file.corings.end()) throw ParseError("comodule " + id + ": unknown coring " + cid);
      const Coring& c = ci->second;
      const PrimeField& f = c.base.field;
      std::size_t dim = j.at("dim").get<std::size_t>();
      Module m{f, dim, std::nullopt, c.base, {}, {}};
      m.right_action = json_to_action(f, j.at("right_action"), c.base.dim, dim, "comodule " + id);
      Mat rho = json_to_matrix(f, j.at("rho"), dim * c.dim(), dim, "comodule " + id);
      Comodule com{std::move(m), std::move(rho)};
      for (const std::string& v : validate_comodule(c, com))
        violations.push_back("comodule " + id + ": " + v);
      file.comodules.emplace(id, std::make_pair(cid, std::move(com)));
    }
  }

  if (doc.contains("coring_morphisms")) {
    for (auto& [id, j] : doc["coring_morphisms"].items()) {
      std::string sid = j.at("source_coring").get<std::string>();
      std::string tid = j.at("target_coring").get<std::string>();
      std::string pid = j.at("phi").get<std::string>();
      auto si = file.corings.find(sid);
      auto ti = file.corings.find(tid);
      auto pi = file.morphisms.find(pid);
      if (si == file.corings.end() || ti == file.corings.end() || pi == file.morphisms.end()) {
        throw ParseError("coring morphism " + id + ": unresolved reference");
      }
      Mat Phi = json_to_matrix(si->second.base.field, j.at("Phi"), ti->second.dim(), si->second.dim(),
                               "coring morphism " + id);
      CoringMorphism cm{si->second, ti->second, pi->second, std::move(Phi)};
      for (const std::string& v : validate_coring_morphism(cm))
        violations.push_back("coring morphism " + id + ": " + v);
      file.coring_morphisms.emplace(id, std::move(cm));
    }
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

// ----------------------------------------------------------------- reports

namespace {

Json provenance(const char* verdict, bool value, const char* criterion) {
  Json j;
  j["verdict"] = verdict;
  j["value"] = value;
  j["criterion"] = criterion;
  return j;
}

}  // namespace

Json scalars_report_json(const std::string& instance, const ScalarsReport& rep) {
  Json j;
  j["version"] = "natfull/1";
  j["instance"] = instance;
  j["analyzer"] = "scalars";
  Json verdicts;
  verdicts["restriction"] = Json{{"full", rep.restriction.full},
                                 {"naturally_full", rep.restriction.naturally_full},
                                 {"epi_verdict", rep.restriction.epi_verdict},
                                 {"eps_kernel_dim", rep.restriction.eps_kernel_dim}};
  verdicts["extension"] = Json{{"full_on_family", rep.extension.full_on_family},
                               {"naturally_full", rep.extension.naturally_full}};
  j["verdicts"] = std::move(verdicts);
  Json witnesses = Json::object();
  if (rep.restriction.witness_e) witnesses["restriction_e"] = vec_to_json(*rep.restriction.witness_e);
  if (rep.extension.witness_E) witnesses["extension_E"] = matrix_to_json(*rep.extension.witness_E);
  if (rep.extension.central_idempotent_e)
    witnesses["extension_central_idempotent"] = vec_to_json(*rep.extension.central_idempotent_e);
  j["witnesses"] = std::move(witnesses);
  Json prov = Json::array();
  prov.push_back(provenance("restriction.epi", rep.restriction.epi_verdict, "Thm 1.1 (2)"));
  prov.push_back(provenance("restriction.separability_idempotent",
                            rep.restriction.cond4_separability_idempotent, "Thm 1.1 (4)"));
  prov.push_back(
      provenance("restriction.eps_injective", rep.restriction.cond5_eps_injective, "Thm 1.1 (5)"));
  prov.push_back(provenance("restriction.counits_bijective_on_family",
                            rep.restriction.cond6_counits_bijective_on_family, "Thm 1.1 (6)"));
  prov.push_back(provenance("restriction.hom_agreement_on_family",
                            rep.restriction.cond1_hom_agreement_on_family, "Thm 1.1 (1)"));
  prov.push_back(provenance("restriction.invariants_agreement_on_family",
                            rep.restriction.cond3_invariants_agreement_on_family, "Thm 1.1 (3)"));
  prov.push_back(provenance("extension.naturally_full", rep.extension.naturally_full, "Prop 3.1 (2)"));
  prov.push_back(
      provenance("extension.full_on_family", rep.extension.full_on_family, "Prop 2.5 (2)"));
  j["provenance"] = std::move(prov);
  return j;
}

std::string scalars_report_text(const std::string& instance, const ScalarsReport& rep) {
  std::ostringstream os;
  os << "instance " << instance << " (scalars)\n";
  if (rep.restriction.full) {
    os << "  restriction: naturally full (Thm 1.1 (5): ker eps_S = 0)\n";
  } else {
    os << "  restriction: not full (Thm 1.1 (5): ker eps_S has dim "
       << rep.restriction.eps_kernel_dim << ")\n";
  }
  if (rep.extension.naturally_full) {
    os << "  extension: naturally full (Prop 3.1 (2): bimodule section E found)\n";
  } else if (rep.extension.full_on_family) {
    os << "  extension: full on family; naturally full: NO (Prop 3.1 (2) system infeasible)\n";
  } else {
    os << "  extension: not full on family (Prop 2.5 (2) cosplitting infeasible)\n";
  }
  return os.str();
}

Json bimodule_report_json(const std::string& instance, const BimoduleFunctorReport& rep) {
  Json j;
  j["version"] = "natfull/1";
  j["instance"] = instance;
  j["analyzer"] = "bimodule";
  Json verdicts;
  verdicts["coinduction"] = Json{{"naturally_full", rep.coinduction.naturally_full}};
  verdicts["induction"] =
      rep.induction_applicable
          ? Json{{"naturally_full", rep.induction.naturally_full}}
          : Json{{"skipped", "M is not finitely generated projective over S"}};
  Json structure;
  structure["chi_epi"] = rep.structure.chi_epi;
  structure["M_generator"] = rep.structure.M_generator;
  if (rep.structure.M_generator_over_eSe)
    structure["M_generator_over_eSe"] = *rep.structure.M_generator_over_eSe;
  if (rep.structure.fully_faithful_G) structure["fully_faithful_G"] = *rep.structure.fully_faithful_G;
  verdicts["structure"] = std::move(structure);
  j["verdicts"] = std::move(verdicts);
  Json witnesses = Json::object();
  if (rep.coinduction.witness_z) witnesses["coinduction_z"] = vec_to_json(*rep.coinduction.witness_z);
  if (rep.induction.witness_E) witnesses["induction_E"] = matrix_to_json(*rep.induction.witness_E);
  if (rep.structure.central_idempotent_e_of_S)
    witnesses["central_idempotent_e_of_S"] = vec_to_json(*rep.structure.central_idempotent_e_of_S);
  j["witnesses"] = std::move(witnesses);
  Json prov = Json::array();
  prov.push_back(provenance("coinduction.naturally_full", rep.coinduction.naturally_full,
                            "Thm 3.8 (1) via (4.14)"));
  if (rep.induction_applicable) {
    prov.push_back(
        provenance("induction.naturally_full", rep.induction.naturally_full, "Thm 3.8 (2)"));
  }
  prov.push_back(provenance("structure.chi_epi", rep.structure.chi_epi, "Prop 3.10 hypothesis"));
  prov.push_back(provenance("structure.M_generator", rep.structure.M_generator, "Prop 3.9/3.10"));
  j["provenance"] = std::move(prov);
  return j;
}

std::string bimodule_report_text(const std::string& instance, const BimoduleFunctorReport& rep) {
  std::ostringstream os;
  os << "instance " << instance << " (bimodule)\n";
  os << "  coinduction: " << (rep.coinduction.naturally_full ? "naturally full" : "not naturally full")
     << " (Thm 3.8 (1), condition (4.14))\n";
  if (rep.induction_applicable) {
    os << "  induction: " << (rep.induction.naturally_full ? "naturally full" : "not naturally full")
       << " (Thm 3.8 (2))\n";
  } else {
    os << "  induction: skipped, M is not fgp over S (Thm 3.8 hypothesis)\n";
  }
  return os.str();
}

CoringAnalysis analyze_coring_full(const Coring& c) {
  CoringAnalysis a;
  a.cotensor = analyze_cotensor_functor(c);
  a.forgetful = analyze_forgetful_functor(c);
  a.derived = derived_checks(c);
  try {
    a.grouplike_elements = grouplikes(c);
  } catch (const TooLargeToEnumerate&) {
    a.grouplike_elements.clear();
  }
  return a;
}

Json coring_report_json(const std::string& instance, const CoringAnalysis& rep) {
  Json j;
  j["version"] = "natfull/1";
  j["instance"] = instance;
  j["analyzer"] = "coring";
  Json verdicts;
  verdicts["cotensor_naturally_full"] = rep.cotensor.naturally_full;
  verdicts["forgetful_naturally_full"] = rep.forgetful.naturally_full;
  verdicts["delta_surjective"] = rep.forgetful.delta_surjective;
  if (rep.derived.g_side_applicable) {
    verdicts["fgp_left"] = rep.derived.fgp_left;
    verdicts["fgp_right"] = rep.derived.fgp_right;
    verdicts["frobenius_phi_bijective"] = rep.derived.frobenius_phi_bijective;
  }
  if (rep.derived.f_side_applicable) {
    verdicts["coseparability_identity"] = rep.derived.coseparability_identity;
  }
  verdicts["grouplike_count"] = rep.grouplike_elements.size();
  j["verdicts"] = std::move(verdicts);
  Json witnesses = Json::object();
  if (rep.cotensor.witness_z) witnesses["cotensor_z"] = vec_to_json(*rep.cotensor.witness_z);
  if (rep.cotensor.xi) witnesses["cotensor_xi"] = matrix_to_json(*rep.cotensor.xi);
  if (rep.derived.coseparability_chi)
    witnesses["coseparability_chi"] = matrix_to_json(*rep.derived.coseparability_chi);
  Json gs = Json::array();
  for (const Vec& g : rep.grouplike_elements) gs.push_back(vec_to_json(g));
  witnesses["grouplikes"] = std::move(gs);
  j["witnesses"] = std::move(witnesses);
  Json prov = Json::array();
  prov.push_back(
      provenance("cotensor_naturally_full", rep.cotensor.naturally_full, "Prop 3.12 (1)"));
  prov.push_back(
      provenance("forgetful_naturally_full", rep.forgetful.naturally_full, "Prop 3.12 (2)"));
  if (rep.derived.g_side_applicable) {
    prov.push_back(provenance("frobenius_phi_bijective", rep.derived.frobenius_phi_bijective,
                              "Cor 3.13 1(3)"));
  }
  if (rep.derived.f_side_applicable) {
    prov.push_back(provenance("coseparability_identity", rep.derived.coseparability_identity,
                              "Cor 3.13 (2)"));
  }
  j["provenance"] = std::move(prov);
  return j;
}

std::string coring_report_text(const std::string& instance, const CoringAnalysis& rep) {
  std::ostringstream os;
  os << "instance " << instance << " (coring)\n";
  os << "  G = -(x)C: " << (rep.cotensor.naturally_full ? "naturally full" : "not naturally full")
     << " (Prop 3.12 (1): z with eps(c) z = c)\n";
  os << "  F forgetful: " << (rep.forgetful.naturally_full ? "naturally full" : "not naturally full")
     << " (Prop 3.12 (2): c eps(d) = eps(c) d)\n";
  os << "  grouplikes: " << rep.grouplike_elements.size() << "\n";
  return os.str();
}

Json cormor_report_json(const std::string& instance, const CormorAnalysis& rep) {
  Json j;
  j["version"] = "natfull/1";
  j["instance"] = instance;
  j["analyzer"] = "coring-morphism";
  j["verdicts"] = Json{{"F_naturally_full", rep.f_side.naturally_full},
                       {"G_naturally_full", rep.g_side.naturally_full}};
  Json witnesses = Json::object();
  if (rep.f_side.witness_nu) witnesses["nu"] = matrix_to_json(*rep.f_side.witness_nu);
  if (rep.g_side.witness_Psi) witnesses["Psi"] = matrix_to_json(*rep.g_side.witness_Psi);
  j["witnesses"] = std::move(witnesses);
  Json prov = Json::array();
  prov.push_back(provenance("F_naturally_full", rep.f_side.naturally_full, "Thm 3.20"));
  prov.push_back(provenance("G_naturally_full", rep.g_side.naturally_full, "Thm 3.21"));
  j["provenance"] = std::move(prov);
  return j;
}

std::string cormor_report_text(const std::string& instance, const CormorAnalysis& rep) {
  std::ostringstream os;
  os << "instance " << instance << " (coring morphism)\n";
  os << "  F = -(x)S: " << (rep.f_side.naturally_full ? "naturally full" : "not naturally full")
     << " (Thm 3.20: eta_C cosplits by a bicomodule map)\n";
  os << "  G = cotensor: " << (rep.g_side.naturally_full ? "naturally full" : "not naturally full")
     << " (Thm 3.21: Phi-hat splits by a bicomodule map)\n";
  return os.str();
}

Json suite_report_json(const SuiteReport& rep) {
  Json j;
  j["version"] = "natfull/1";
  j["analyzer"] = "suite";
  j["seed"] = rep.seed;
  j["count"] = rep.count;
  j["p"] = rep.p;
  j["maxdim"] = rep.maxdim;
  Json counters;
  counters["morphisms"] = rep.morphisms;
  counters["restriction_naturally_full"] = rep.restriction_naturally_full;
  counters["extension_naturally_full"] = rep.extension_naturally_full;
  counters["extension_full_on_family"] = rep.extension_full_on_family;
  counters["bimodules"] = rep.bimodules;
  counters["coinduction_naturally_full"] = rep.coinduction_naturally_full;
  counters["induction_checked"] = rep.induction_checked;
  counters["induction_naturally_full"] = rep.induction_naturally_full;
  counters["induction_skipped_not_projective"] = rep.induction_skipped_not_projective;
  counters["corings"] = rep.corings;
  counters["cotensor_naturally_full"] = rep.cotensor_naturally_full;
  counters["forgetful_naturally_full"] = rep.forgetful_naturally_full;
  counters["coring_morphisms"] = rep.coring_morphisms;
  counters["F_naturally_full"] = rep.f_naturally_full;
  counters["G_naturally_full"] = rep.g_naturally_full;
  counters["witnesses_verified"] = rep.witnesses_verified;
  counters["family_consistent_false_criteria"] = rep.family_consistent_false_criteria;
  counters["composition_chains"] = rep.composition_chains;
  counters["grouplikes_found"] = rep.grouplikes_found;
  j["counters"] = std::move(counters);
  j["contains_full_not_naturally_full"] = rep.contains_full_not_naturally_full;
  Json viol = Json::array();
  for (const SuiteViolation& v : rep.violations) {
    viol.push_back(Json{{"instance", v.instance}, {"check", v.check}});
  }
  j["violations"] = std::move(viol);
  return j;
}

std::string suite_report_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite: seed=" << rep.seed << " count=" << rep.count << " p=" << rep.p
     << " maxdim=" << rep.maxdim << "\n";
  os << "  morphisms analyzed: " << rep.morphisms << " (restriction nf: "
     << rep.restriction_naturally_full << ", extension nf: " << rep.extension_naturally_full << ")\n";
  os << "  bimodules analyzed: " << rep.bimodules
     << " (coinduction nf: " << rep.coinduction_naturally_full
     << ", induction nf: " << rep.induction_naturally_full << "/" << rep.induction_checked
     << ", skipped not projective: " << rep.induction_skipped_not_projective << ")\n";
  os << "  corings analyzed: " << rep.corings << " (cotensor nf: " << rep.cotensor_naturally_full
     << ", forgetful nf: " << rep.forgetful_naturally_full << ")\n";
  os << "  coring morphisms analyzed: " << rep.coring_morphisms
     << " (F nf: " << rep.f_naturally_full << ", G nf: " << rep.g_naturally_full << ")\n";
  os << "  splitting witnesses verified: " << rep.witnesses_verified << "\n";
  os << "  composition chains: " << rep.composition_chains << "\n";
  os << "  full-but-not-naturally-full example present: "
     << (rep.contains_full_not_naturally_full ? "yes" : "no") << "\n";
  os << "  violations: " << rep.violations.size() << "\n";
  for (const SuiteViolation& v : rep.violations) {
    os << "    [" << v.instance << "] " << v.check << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------ reverify

namespace {

Vec json_vec_mod(const PrimeField& f, const Json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(f.reduce(x.get<std::int64_t>()));
  return v;
}

Mat json_mat_mod(const PrimeField& f, const Json& j) {
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = f.reduce(j[i][k].get<std::int64_t>());
  return m;
}

}  // namespace

std::vector<std::string> reverify_report(const InstanceFile& file, const Json& report) {
  std::vector<std::string> failures;
  std::string analyzer = report.value("analyzer", "");
  std::string instance = report.value("instance", "");
  const Json& witnesses = report.contains("witnesses") ? report["witnesses"] : Json::object();

  if (analyzer == "scalars") {
    auto it = file.morphisms.find(instance);
    if (it == file.morphisms.end()) return {"instance " + instance + " not found"};
    const AlgebraMorphism& phi = it->second;
    const PrimeField& f = phi.target.field;
    if (witnesses.contains("extension_E")) {
      Mat e = json_mat_mod(f, witnesses["extension_E"]);
      if (!(phi.matrix * e).is_identity()) failures.push_back("extension E: phi . E != id");
      if (witnesses.contains("extension_central_idempotent")) {
        Vec ce = json_vec_mod(f, witnesses["extension_central_idempotent"]);
        if (e.apply(phi.target.unit) != ce) failures.push_back("extension e != E(1)");
        if (phi.source.product(ce, ce) != ce) failures.push_back("extension e not idempotent");
      }
    }
    if (witnesses.contains("restriction_e")) {
      Vec e = json_vec_mod(f, witnesses["restriction_e"]);
      try {
        if (!xi_splitting_check(phi, e)) failures.push_back("restriction e does not split eps");
      } catch (const Error& err) {
        failures.push_back(std::string("restriction e: ") + err.what());
      }
    }
  } else if (analyzer == "bimodule") {
    auto it = file.bimodules.find(instance);
    if (it == file.bimodules.end()) return {"instance " + instance + " not found"};
    const Module& m = it->second;
    if (witnesses.contains("coinduction_z")) {
      Vec z = json_vec_mod(m.field, witnesses["coinduction_z"]);
      CoinductionParts parts = coinduction_parts(m);
      if (!invariants(parts.tensor.result).contains(m.field, z))
        failures.push_back("coinduction z not invariant");
      if (!holds_414(m, parts, z)) failures.push_back("coinduction z fails (4.14)");
    }
    if (witnesses.contains("induction_E")) {
      EndAlgebra ea = endomorphism_algebra(m);
      Mat e = json_mat_mod(m.field, witnesses["induction_E"]);
      if (!(ea.chi->matrix * e).is_identity()) failures.push_back("induction E: chi . E != id");
    }
  } else if (analyzer == "coring") {
    auto it = file.corings.find(instance);
    if (it == file.corings.end()) return {"instance " + instance + " not found"};
    const Coring& c = it->second;
    const PrimeField& f = c.base.field;
    if (witnesses.contains("cotensor_z")) {
      Vec z = json_vec_mod(f, witnesses["cotensor_z"]);
      for (std::size_t b = 0; b < c.dim(); ++b) {
        Vec xb(c.dim(), 0);
        xb[b] = 1;
        if (c.carrier.left_act(c.epsilon.column(b)).apply(z) != xb) {
          failures.push_back("cotensor z fails eps(c) z = c");
          break;
        }
      }
    }
    if (witnesses.contains("cotensor_xi")) {
      Mat xi = json_mat_mod(f, witnesses["cotensor_xi"]);
      if (!(xi * c.epsilon).is_identity()) failures.push_back("cotensor xi: xi . eps != id");
    }
    if (witnesses.contains("coseparability_chi")) {
      Mat chi = json_mat_mod(f, witnesses["coseparability_chi"]);
      CoringParts parts = coring_parts(c);
      if (!(chi * parts.delta_q == c.epsilon)) failures.push_back("chi . Delta != eps");
      if (!chi_balance_identity(c, parts, chi)) failures.push_back("chi fails the balance identity");
    }
    if (witnesses.contains("grouplikes")) {
      CoringParts parts = coring_parts(c);
      for (const auto& gj : witnesses["grouplikes"]) {
        Vec g = json_vec_mod(f, gj);
        Vec lhs = parts.delta_q.apply(g);
        Vec gg(c.dim() * c.dim(), 0);
        for (std::size_t i = 0; i < c.dim(); ++i)
          for (std::size_t k = 0; k < c.dim(); ++k) gg[i * c.dim() + k] = f.mul(g[i], g[k]);
        if (lhs != parts.cc.projection.apply(gg) || c.epsilon.apply(g) != c.base.unit) {
          failures.push_back("grouplike fails its defining equations");
        }
      }
    }
  } else if (analyzer == "coring-morphism") {
    auto it = file.coring_morphisms.find(instance);
    if (it == file.coring_morphisms.end()) return {"instance " + instance + " not found"};
    const CoringMorphism& m = it->second;
    const PrimeField& f = m.phi.target.field;
    if (witnesses.contains("nu")) {
      Mat nu = json_mat_mod(f, witnesses["nu"]);
      Comodule creg{m.source.carrier, m.source.delta};
      InducedDComodule fc = apply_F(m, creg);
      CotensorSpace gfc = cotensor(m, fc.comodule);
      Mat eta = cormor_unit(m, creg, fc, gfc);
      if (!(eta * nu).is_identity()) failures.push_back("cormor nu: eta . nu != id");
    }
    if (witnesses.contains("Psi")) {
      Mat psi = json_mat_mod(f, witnesses["Psi"]);
      // Psi-hat . Phi-hat = id on S (x) C (x) S
      const FDAlgebra& s = m.phi.target;
      Module s_sr = right_module_via(bimodule_regular(s), m.phi);
      Module s_rs = left_module_via(bimodule_regular(s), m.phi);
      TensorChain t = tensor_chain({&s_sr, &m.source.carrier, &s_rs});
      Mat hat(f, m.target.dim(), s.dim * m.source.dim() * s.dim);
      for (std::size_t a = 0; a < s.dim; ++a) {
        Vec ea(s.dim, 0);
        ea[a] = 1;
        Mat la = m.target.carrier.left_act(ea);
        for (std::size_t i = 0; i < m.source.dim(); ++i)
          for (std::size_t b = 0; b < s.dim; ++b) {
            Vec eb(s.dim, 0);
            eb[b] = 1;
            hat.set_column((a * m.source.dim() + i) * s.dim + b,
                           la.apply(m.target.carrier.right_act(eb).apply(m.Phi.column(i))));
          }
      }
      Mat phihat = hat * t.section;
      if (!(psi * phihat).is_identity()) failures.push_back("cormor Psi: Psi . Phi-hat != id");
    }
  } else {
    failures.push_back("unknown analyzer: " + analyzer);
  }
  return failures;
}

}  // namespace natfull
