// natfull command line: validate instance files, run the analyzers, emit
// fixtures, and drive the randomized equivalence suite.
//
// Exit codes: 0 success, 1 validation failure, 2 parse/usage failure,
// 3 equivalence violation in a suite run.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "natfull/fixtures.hpp"
#include "natfull/io.hpp"

using namespace natfull;

namespace {

struct AnalyzeOptions {
  std::string file;
  std::string id;
  std::string family_file;
  bool as_json = false;
  std::string out;
};

template <typename M>
std::string pick_id(const M& map, const std::string& requested, const std::string& kind) {
  if (!requested.empty()) {
    if (map.find(requested) == map.end()) {
      throw ParseError("no " + kind + " with id '" + requested + "' in the file");
    }
    return requested;
  }
  if (map.size() == 1) return map.begin()->first;
  throw ParseError("file contains " + std::to_string(map.size()) + " " + kind +
                   "s; pick one with --id");
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out);
    f << text;
  }
}

int emit_report(const AnalyzeOptions& opt, const Json& j, const std::string& text,
                double elapsed_ms) {
  if (opt.as_json) {
    Json out = j;
    out["timing_ms"] = elapsed_ms;
    write_output(opt.out, out.dump(2));
  } else {
    write_output(opt.out, text + "  elapsed: " + std::to_string(elapsed_ms) + " ms\n");
  }
  return 0;
}

ScalarsFamily family_from_file(const AlgebraMorphism& phi, const std::string& path,
                               std::uint64_t seed) {
  ScalarsFamily fam = default_scalars_family(phi, seed);
  if (path.empty()) return fam;
  InstanceFile extra = load_instance_file(path);
  for (const auto& [id, m] : extra.bimodules) {
    if (m.left && *m.left == phi.source && !m.right) fam.r_modules.emplace_back(id, m);
    if (m.left && *m.left == phi.target && !m.right) fam.s_modules.emplace_back(id, m);
    if (m.left && m.right && *m.left == phi.target && *m.right == phi.target) {
      fam.s_bimodules.emplace_back(id, m);
    }
  }
  return fam;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"natfull: natural fullness analyzers for functors between module and comodule "
               "categories over F_p"};
  app.require_subcommand(1);

  // ---- validate
  std::string validate_file;
  auto* cmd_validate = app.add_subcommand("validate", "validate a natfull/1 instance file");
  cmd_validate->add_option("file", validate_file, "instance file")->required();

  // ---- analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "run an analyzer on an instance");
  cmd_analyze->require_subcommand(1);
  AnalyzeOptions sc_opt, bi_opt, co_opt, cm_opt;

  auto* a_scalars = cmd_analyze->add_subcommand("scalars", "restriction/extension of scalars");
  a_scalars->add_option("--morphism", sc_opt.file, "instance file with the morphism")->required();
  a_scalars->add_option("--id", sc_opt.id, "morphism id (default: the only one)");
  a_scalars->add_option("--family", sc_opt.family_file, "extra test modules (instance file)");
  a_scalars->add_flag("--json", sc_opt.as_json, "emit a JSON report");
  a_scalars->add_option("--out", sc_opt.out, "write the report to a file");

  auto* a_bimod = cmd_analyze->add_subcommand("bimodule", "induction/coinduction along a bimodule");
  a_bimod->add_option("--bimodule", bi_opt.file, "instance file with the bimodule")->required();
  a_bimod->add_option("--id", bi_opt.id, "bimodule id");
  a_bimod->add_flag("--json", bi_opt.as_json, "emit a JSON report");
  a_bimod->add_option("--out", bi_opt.out, "write the report to a file");

  auto* a_coring = cmd_analyze->add_subcommand("coring", "forgetful/cotensor functors of a coring");
  a_coring->add_option("--coring", co_opt.file, "instance file with the coring")->required();
  a_coring->add_option("--id", co_opt.id, "coring id");
  a_coring->add_flag("--json", co_opt.as_json, "emit a JSON report");
  a_coring->add_option("--out", co_opt.out, "write the report to a file");

  auto* a_cormor =
      cmd_analyze->add_subcommand("coring-morphism", "the adjunction induced by a coring morphism");
  a_cormor->add_option("--input", cm_opt.file, "instance file with the coring morphism")->required();
  a_cormor->add_option("--id", cm_opt.id, "coring morphism id");
  a_cormor->add_flag("--json", cm_opt.as_json, "emit a JSON report");
  a_cormor->add_option("--out", cm_opt.out, "write the report to a file");

  // ---- fixtures
  auto* cmd_fixtures = app.add_subcommand("fixtures", "built-in fixture catalog");
  auto* f_list = cmd_fixtures->add_subcommand("list", "list the catalog");
  std::string emit_id, emit_of = "FIX-PROJ", emit_out;
  std::uint32_t emit_p = 2;
  auto* f_emit = cmd_fixtures->add_subcommand("emit", "emit a fixture as an instance file");
  f_emit->add_option("id", emit_id, "fixture id")->required();
  f_emit->add_option("--p", emit_p, "prime parameter (default 2)");
  f_emit->add_option("--of", emit_of, "morphism fixture wrapped by FIX-SWE");
  f_emit->add_option("--out", emit_out, "output path (default stdout)");

  // ---- suite
  auto* cmd_suite = app.add_subcommand("suite", "randomized equivalence suite");
  auto* s_run = cmd_suite->add_subcommand("run", "run the suite");
  std::uint64_t seed = 1;
  std::size_t count = 50, maxdim = 3;
  std::uint32_t p = 2;
  std::string suite_json_out;
  s_run->add_option("--seed", seed, "seed (env NATFULL_SEED overrides)");
  s_run->add_option("--count", count, "instances per kind");
  s_run->add_option("--p", p, "prime");
  s_run->add_option("--maxdim", maxdim, "dimension cap for generated algebras");
  s_run->add_option("--json", suite_json_out, "write the JSON report to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_validate) {
      InstanceFile file = load_instance_file(validate_file);
      std::cout << "ok: " << file.algebras.size() << " algebras, " << file.morphisms.size()
                << " morphisms, " << file.bimodules.size() << " bimodules, " << file.corings.size()
                << " corings, " << file.comodules.size() << " comodules, "
                << file.coring_morphisms.size() << " coring morphisms\n";
      return 0;
    }

    auto timed = [](auto&& fn) {
      auto t0 = std::chrono::steady_clock::now();
      auto result = fn();
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      return std::make_pair(std::move(result), ms);
    };

    if (*a_scalars) {
      InstanceFile file = load_instance_file(sc_opt.file);
      std::string id = pick_id(file.morphisms, sc_opt.id, "morphism");
      const AlgebraMorphism& phi = file.morphisms.at(id);
      ScalarsFamily fam = family_from_file(phi, sc_opt.family_file, 1);
      auto [rep, ms] = timed([&] { return analyze_scalars(phi, fam); });
      return emit_report(sc_opt, scalars_report_json(id, rep), scalars_report_text(id, rep), ms);
    }
    if (*a_bimod) {
      InstanceFile file = load_instance_file(bi_opt.file);
      std::string id = pick_id(file.bimodules, bi_opt.id, "bimodule");
      const Module& m = file.bimodules.at(id);
      auto [rep, ms] = timed([&] { return analyze_bimodule(m); });
      return emit_report(bi_opt, bimodule_report_json(id, rep), bimodule_report_text(id, rep), ms);
    }
    if (*a_coring) {
      InstanceFile file = load_instance_file(co_opt.file);
      std::string id = pick_id(file.corings, co_opt.id, "coring");
      const Coring& c = file.corings.at(id);
      auto [rep, ms] = timed([&] { return analyze_coring_full(c); });
      return emit_report(co_opt, coring_report_json(id, rep), coring_report_text(id, rep), ms);
    }
    if (*a_cormor) {
      InstanceFile file = load_instance_file(cm_opt.file);
      std::string id = pick_id(file.coring_morphisms, cm_opt.id, "coring morphism");
      const CoringMorphism& m = file.coring_morphisms.at(id);
      auto [rep, ms] = timed([&] {
        CormorAnalysis a;
        a.f_side = analyze_F_naturally_full(m);
        a.g_side = analyze_G_naturally_full(m);
        return a;
      });
      return emit_report(cm_opt, cormor_report_json(id, rep), cormor_report_text(id, rep), ms);
    }

    if (*f_list) {
      for (const FixtureInfo& fi : fixture_catalog()) {
        std::cout << fi.id << "  " << fi.description << "\n";
      }
      return 0;
    }
    if (*f_emit) {
      Json doc = emit_fixture(emit_id, emit_p, emit_of);
      write_output(emit_out, doc.dump(2));
      return 0;
    }

    if (*s_run) {
      if (const char* env = std::getenv("NATFULL_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
      }
      SuiteReport rep = equivalence_suite(seed, count, p, maxdim);
      std::cout << suite_report_text(rep);
      if (!suite_json_out.empty()) {
        std::ofstream out(suite_json_out);
        out << suite_report_json(rep).dump(2) << "\n";
      }
      return rep.violations.empty() ? 0 : 3;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
