#pragma once

// The self-describing "natfull/1" JSON instance format, the fixture catalog,
// and report rendering. All matrices are row-major integer arrays, reduced
// mod p on load; ids are strings; loading validates every object and reports
// all violations at once.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "natfull/bimodule_functors.hpp"
#include "natfull/coring.hpp"
#include "natfull/coring_morphism.hpp"
#include "natfull/oracle.hpp"
#include "natfull/scalars.hpp"

namespace natfull {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  Json raw;
  std::map<std::string, FDAlgebra> algebras;
  std::map<std::string, AlgebraMorphism> morphisms;
  std::map<std::string, Module> bimodules;
  std::map<std::string, Coring> corings;
  std::map<std::string, std::pair<std::string, Comodule>> comodules;  // coring id, data
  std::map<std::string, CoringMorphism> coring_morphisms;
};

// Throws ParseError (malformed JSON / schema) or ValidationError (objects
// that fail their structural laws, all collected).
InstanceFile parse_instance_text(const std::string& text);
InstanceFile load_instance_file(const std::string& path);

Json algebra_to_json(const FDAlgebra& a);
Json morphism_to_json(const AlgebraMorphism& m, const std::string& source_id,
                      const std::string& target_id);
Json bimodule_to_json(const Module& m, const std::optional<std::string>& left_id,
                      const std::optional<std::string>& right_id);
Json coring_to_json(const Coring& c, const std::string& base_id, const Json& carrier);
Json matrix_to_json(const Mat& m);
Json vec_to_json(const Vec& v);

// ----------------------------------------------------------------- reports

Json scalars_report_json(const std::string& instance, const ScalarsReport& rep);
std::string scalars_report_text(const std::string& instance, const ScalarsReport& rep);

Json bimodule_report_json(const std::string& instance, const BimoduleFunctorReport& rep);
std::string bimodule_report_text(const std::string& instance, const BimoduleFunctorReport& rep);

struct CoringAnalysis {
  CotensorFunctorReport cotensor;
  ForgetfulFunctorReport forgetful;
  DerivedChecksReport derived;
  std::vector<Vec> grouplike_elements;
};
CoringAnalysis analyze_coring_full(const Coring& c);
Json coring_report_json(const std::string& instance, const CoringAnalysis& rep);
std::string coring_report_text(const std::string& instance, const CoringAnalysis& rep);

struct CormorAnalysis {
  FNatFullReport f_side;
  GNatFullReport g_side;
};
Json cormor_report_json(const std::string& instance, const CormorAnalysis& rep);
std::string cormor_report_text(const std::string& instance, const CormorAnalysis& rep);

Json suite_report_json(const SuiteReport& rep);
std::string suite_report_text(const SuiteReport& rep);

// Re-checks every witness embedded in a report against the named instance.
// Returns the list of failures (empty = all witnesses re-verify).
std::vector<std::string> reverify_report(const InstanceFile& file, const Json& report);

}  // namespace natfull
