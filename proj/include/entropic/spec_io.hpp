#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "entropic/atoms.hpp"
#include "entropic/linear.hpp"
#include "entropic/mixture.hpp"
#include "entropic/setfn.hpp"
#include "entropic/zoo.hpp"

namespace entropic {

inline constexpr const char* kBuilderVersion = "0.1.0";

// A function given directly as its dense value table (no construction;
// verify-only, used for negative controls).
struct ExplicitTableSpec {
  int n = 0;
  std::vector<Rat> values;
};

void validate(const ExplicitTableSpec& spec);
SetFunctionTable tabulate(const ExplicitTableSpec& spec);

using FunctionSpec = std::variant<ModularSpec, CoverageSpec, FacilityLocationSpec, TruncationSpec,
                                  ConcaveSpec, SaturatedCoverageSpec, GraphCutSpec,
                                  ExplicitTableSpec>;

std::string family_name(const FunctionSpec& spec);
int ground_size(const FunctionSpec& spec);
void validate(const FunctionSpec& spec);
SetFunctionTable tabulate(const FunctionSpec& spec);

using Realization = std::variant<AtomSystem, LinearSystem, MixtureRealization>;

// Builds the family's realization: atom systems for modular, coverage,
// facility location and graph cut; linear systems for truncations and
// saturated coverage; truncation mixtures for concave-over-modular.
// Explicit tables have no construction and are rejected.
Realization realize(const FunctionSpec& spec);

std::string realization_kind(const Realization& realization);
SetFunctionTable tabulate(const Realization& realization);

// Exact rationals in documents: integers, strings ("3/4", "0.75"), or
// {"num": int, "den": int}. Non-integer bare JSON numbers are rejected since
// they were already rounded to binary.
Rat rational_from_json(const nlohmann::json& value);
nlohmann::json rational_to_json(const Rat& value);

FunctionSpec spec_from_json(const nlohmann::json& document);
nlohmann::json spec_to_json(const FunctionSpec& spec);

struct Certificate {
  std::string builder_version;
  FunctionSpec spec;
  Realization realization;
};

nlohmann::json certificate_to_json(const FunctionSpec& spec, const Realization& realization);
Certificate certificate_from_json(const nlohmann::json& document);

// True when the document carries a "kind" discriminator (certificate) rather
// than a "family" one (spec).
bool is_certificate_document(const nlohmann::json& document);

// Canonical serialization: sorted keys (nlohmann's default object ordering),
// two-space indent, trailing newline. Byte-identical across runs.
std::string canonical_dump(const nlohmann::json& document);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

struct AutoScaleResult {
  nlohmann::json document;  // rescaled spec document
  BigInt factor;            // multiply values by this to recover scaled units
};

// Integerizes weighted_truncation, saturated_coverage and concave_over_modular
// documents by the least common multiple of the weight (and level/cap)
// denominators; the scaled function equals factor * original. Other families
// pass through unchanged with factor 1. Concave tables are stretched to the
// scaled domain by linear interpolation, which preserves concavity.
AutoScaleResult auto_scale(const nlohmann::json& document);

}  // namespace entropic
