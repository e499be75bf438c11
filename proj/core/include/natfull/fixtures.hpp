#pragma once

// The built-in fixture catalog. Each entry can be emitted as a standalone
// natfull/1 instance file; the worked examples from the source material are
// all here (the triangular full-but-not-naturally-full extension, the
// projection with central idempotent witness, the field extension that fails
// every fullness condition, the 2x2 comatrix coring).

#include <string>
#include <vector>

#include "natfull/io.hpp"

namespace natfull {

struct FixtureInfo {
  std::string id;
  std::string description;
  bool takes_p = false;
  bool takes_of = false;  // FIX-SWE wraps another fixture's morphism
};

std::vector<FixtureInfo> fixture_catalog();

// Emits the fixture with the given id as a natfull/1 document.
// - p parameterizes FIX-TRI / FIX-TRIV (and is accepted elsewhere when the
//   fixture is defined over F_2 only, in which case it must be 2).
// - of names the morphism fixture wrapped by FIX-SWE (default FIX-PROJ).
Json emit_fixture(const std::string& id, std::uint32_t p = 2, const std::string& of = "FIX-PROJ");

}  // namespace natfull
