#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "entropic/concretize.hpp"
#include "entropic/spec_io.hpp"

namespace entropic {

struct VerifyOptions {
  bool polymatroid = true;
  bool symbolic = true;
  bool concretize = false;
  bool sim = false;  // implies concretize
  long long cap = kDefaultStateCap;
  int sim_samples = 64;
  std::uint64_t seed = 0;
};

struct StageResult {
  std::string name;
  bool ran = false;
  bool pass = true;
  bool capacity_limited = false;  // skipped or cut short by the state cap
  std::string detail;
};

struct VerificationReport {
  std::string family;
  int n = 0;
  std::vector<StageResult> stages;
  std::optional<PolymatroidReport> polymatroid;
  std::optional<SubsetMask> first_mismatch;  // symbolic-equality failure, if any
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  bool overall_pass = true;
  bool capacity_limited = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Runs the verification stages against `spec`: zoo tabulation, polymatroid
// check, realization build (or the provided one, when re-verifying a
// certificate), exhaustive symbolic equality, and optionally pmf
// concretization and SIM/Shannon spot checks.
VerificationReport run_verification(const FunctionSpec& spec,
                                    const std::optional<Realization>& provided,
                                    const VerifyOptions& options);

}  // namespace entropic
