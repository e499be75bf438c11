#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace natfull {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bound on an enumeration (center, grouplikes) was exceeded.
struct CenterTooLarge : Error {
  using Error::Error;
};
struct TooLargeToEnumerate : Error {
  using Error::Error;
};

// An analyzer was asked to run outside its theorem's hypotheses.
struct NotProjective : Error {
  using Error::Error;
};
struct CriterionNotMet : Error {
  using Error::Error;
};

// Bug traps. These fire only if a paper-guaranteed equivalence is violated,
// which indicates a defect in the implementation, never in the input.
struct InconsistentCriteria : Error {
  using Error::Error;
};
struct WitnessViolation : Error {
  using Error::Error;
};

// The equalizer of a cotensor failed to inherit a coaction. Cannot occur for
// the reduction shapes the analyzers target; surfaced rather than silently
// mended if a pathological instance reaches it.
struct CoactionNotInduced : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v)
      : Error(join(v)), violations(std::move(v)) {}

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "validation failed:";
    for (const auto& x : v) {
      s += "\n  - " + x;
    }
    return s;
  }
};

}  // namespace natfull
