#include "entropic/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

using nlohmann::json;

std::string witness_text(const ViolationWitness& witness) {
  std::ostringstream out;
  switch (witness.kind) {
    case ViolationWitness::Kind::kNormalization:
      out << "f(empty) != 0";
      break;
    case ViolationWitness::Kind::kMonotonicity:
      out << "f(A+" << witness.i << ") < f(A) at A=" << witness.subset;
      break;
    case ViolationWitness::Kind::kSubmodularity:
      out << "elemental inequality fails at A=" << witness.subset << ", i=" << witness.i
          << ", j=" << witness.j;
      break;
  }
  return out.str();
}

json witness_to_json(const ViolationWitness& witness) {
  const char* kind = witness.kind == ViolationWitness::Kind::kNormalization ? "normalization"
                     : witness.kind == ViolationWitness::Kind::kMonotonicity ? "monotonicity"
                                                                             : "submodularity";
  return json{{"kind", kind}, {"subset", witness.subset}, {"i", witness.i}, {"j", witness.j}};
}

// Concretizes one realization body and checks it against its own symbolic
// table. `label` prefixes stage detail lines (mixtures verify per block).
struct ConcretizeOutcome {
  bool pass = true;
  bool capacity_limited = false;
  double max_diff = 0.0;
  std::string detail;
  // Populated for single-model realizations so the SIM stage can reuse them.
  std::optional<JointModel> model;
  std::vector<double> numeric;
  double bits_per_unit = 1.0;
};

ConcretizeOutcome concretize_atoms(const AtomSystem& sys, long long cap,
                                   const std::string& label) {
  ConcretizeOutcome out;
  try {
    const long long scale = default_atom_scale(sys);
    JointModel model = instantiate_atoms(sys, scale, cap);
    EntropyReport report =
        verify_model(model, tabulate(sys), static_cast<double>(scale));
    out.pass = report.pass;
    out.max_diff = report.max_abs_diff;
    out.numeric.reserve(report.entries.size());
    for (const auto& entry : report.entries) out.numeric.push_back(entry.numeric_bits);
    out.bits_per_unit = static_cast<double>(scale);
    out.model = std::move(model);
    std::ostringstream detail;
    detail << label << "scale " << scale << ", max |pmf - symbolic| = " << report.max_abs_diff;
    out.detail = detail.str();
  } catch (const capacity_error& e) {
    out.capacity_limited = true;
    out.detail = label + e.what();
  }
  return out;
}

ConcretizeOutcome concretize_linear(const LinearSystem& sys, long long cap,
                                    const std::string& label) {
  ConcretizeOutcome out;
  try {
    JointModel model = instantiate_linear(sys, cap);
    EntropyReport report = verify_model(model, tabulate(sys), std::log2(static_cast<double>(sys.q)));
    out.pass = report.pass;
    out.max_diff = report.max_abs_diff;
    out.numeric.reserve(report.entries.size());
    for (const auto& entry : report.entries) out.numeric.push_back(entry.numeric_bits);
    out.bits_per_unit = std::log2(static_cast<double>(sys.q));
    out.model = std::move(model);
    std::ostringstream detail;
    detail << label << "q=" << sys.q << " k=" << sys.k
           << ", max |pmf - rank*log2(q)| = " << report.max_abs_diff;
    out.detail = detail.str();
  } catch (const capacity_error& e) {
    out.capacity_limited = true;
    out.detail = label + e.what();
  }
  return out;
}

}  // namespace

VerificationReport run_verification(const FunctionSpec& spec,
                                    const std::optional<Realization>& provided,
                                    const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.family = family_name(spec);
  report.n = ground_size(spec);
  report.seed = options.seed;

  // Stage 1: zoo tabulation (always runs; parse already validated the spec).
  SetFunctionTable table = tabulate(spec);
  {
    StageResult stage{"tabulate", true, true, false,
                      std::to_string(table.ground.subset_count()) + " subsets"};
    report.stages.push_back(stage);
  }

  // Stage 2: polymatroid gate.
  if (options.polymatroid) {
    PolymatroidReport poly = check_polymatroid(table);
    report.polymatroid = poly;
    StageResult stage{"polymatroid", true, poly.ok(), false, ""};
    if (!poly.ok()) {
      stage.detail = witness_text(*poly.witness);
    } else {
      stage.detail = "normalized, monotone, submodular";
    }
    report.stages.push_back(stage);
  }

  // Stage 3: realization build. Explicit tables have no construction; the
  // remaining stages are skipped for them.
  std::optional<Realization> realization = provided;
  const bool constructible = !std::holds_alternative<ExplicitTableSpec>(spec);
  if (constructible && !realization) {
    realization = realize(spec);
  }
  {
    StageResult stage{"build", constructible, true, false,
                      constructible ? (provided ? "loaded from certificate" : "constructed")
                                    : "explicit tables have no construction"};
    if (constructible) stage.detail += " (" + realization_kind(*realization) + ")";
    report.stages.push_back(stage);
  }

  // Stage 4: exhaustive symbolic equality against the zoo table.
  if (options.symbolic && realization) {
    SetFunctionTable realized = tabulate(*realization);
    StageResult stage{"symbolic", true, true, false, ""};
    if (realized.n() != table.n()) {
      stage.pass = false;
      stage.detail = "realization ground size mismatch";
    } else {
      for (SubsetMask a = 0; a < table.ground.subset_count(); ++a) {
        if (realized.values[a] != table.values[a]) {
          stage.pass = false;
          report.first_mismatch = a;
          stage.detail = "f(A) != realization entropy at A=" + std::to_string(a) + " (" +
                         rational_to_string(table.values[a]) + " vs " +
                         rational_to_string(realized.values[a]) + ")";
          break;
        }
      }
      if (stage.pass) {
        stage.detail = "equal on all " + std::to_string(table.ground.subset_count()) + " subsets";
      }
    }
    report.stages.push_back(stage);
  }

  // Stage 5: pmf oracle.
  const bool want_concretize = options.concretize || options.sim;
  ConcretizeOutcome concretized;
  if (want_concretize && realization) {
    StageResult stage{"concretize", true, true, false, ""};
    if (const auto* atoms = std::get_if<AtomSystem>(&*realization)) {
      concretized = concretize_atoms(*atoms, options.cap, "");
    } else if (const auto* linear = std::get_if<LinearSystem>(&*realization)) {
      concretized = concretize_linear(*linear, options.cap, "");
    } else {
      // Mixture blocks are independent; each is checked against its own
      // symbolic table. Scales enter only the exact symbolic stage.
      const auto& mixture = std::get<MixtureRealization>(*realization);
      std::ostringstream detail;
      for (std::size_t b = 0; b < mixture.blocks.size(); ++b) {
        const std::string label = "block " + std::to_string(b) + ": ";
        ConcretizeOutcome block_outcome =
            std::holds_alternative<AtomSystem>(mixture.blocks[b].block)
                ? concretize_atoms(std::get<AtomSystem>(mixture.blocks[b].block), options.cap,
                                   label)
                : concretize_linear(std::get<LinearSystem>(mixture.blocks[b].block), options.cap,
                                    label);
        concretized.pass = concretized.pass && block_outcome.pass;
        concretized.capacity_limited =
            concretized.capacity_limited || block_outcome.capacity_limited;
        concretized.max_diff = std::max(concretized.max_diff, block_outcome.max_diff);
        if (b > 0) detail << "; ";
        detail << block_outcome.detail;
      }
      concretized.model.reset();  // no single joint model for mixtures
      concretized.detail =
          mixture.blocks.empty() ? "empty mixture" : detail.str();
    }
    stage.pass = concretized.pass;
    stage.capacity_limited = concretized.capacity_limited;
    stage.detail = concretized.detail;
    report.stages.push_back(stage);
  }

  // Stage 6: SIM vs Shannon spot checks on random disjoint triples.
  if (options.sim && realization) {
    StageResult stage{"sim", false, true, false, ""};
    if (!concretized.model) {
      stage.capacity_limited = concretized.capacity_limited;
      stage.detail = concretized.capacity_limited
                         ? "model exceeds the state cap"
                         : "spot checks need a single joint model (not available for mixtures)";
    } else {
      stage.ran = true;
      std::mt19937_64 rng(options.seed);
      double max_diff = 0.0;
      int checked = 0;
      for (int s = 0; s < options.sim_samples; ++s) {
        SubsetMask a = 0, b = 0, c = 0;
        for (int i = 0; i < report.n; ++i) {
          switch (rng() % 4) {
            case 0: a |= 1u << i; break;
            case 1: b |= 1u << i; break;
            case 2: c |= 1u << i; break;
            default: break;
          }
        }
        SimShannonComparison comparison = shannon_cross_check_cached(
            concretized.numeric, table, a, b, c, concretized.bits_per_unit);
        max_diff = std::max(max_diff, comparison.max_abs_diff);
        ++checked;
      }
      stage.pass = max_diff <= kEntropyTolerance;
      std::ostringstream detail;
      detail << checked << " triples, max |SIM - Shannon| = " << max_diff;
      stage.detail = detail.str();
    }
    report.stages.push_back(stage);
  }

  for (const StageResult& stage : report.stages) {
    if (stage.ran && !stage.pass) report.overall_pass = false;
    if (stage.capacity_limited) report.capacity_limited = true;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json VerificationReport::to_json() const {
  json stages_json = json::array();
  for (const StageResult& stage : stages) {
    stages_json.push_back(json{{"name", stage.name},
                               {"ran", stage.ran},
                               {"pass", stage.pass},
                               {"capacity_limited", stage.capacity_limited},
                               {"detail", stage.detail}});
  }
  json out{{"family", family},
           {"n", n},
           {"stages", stages_json},
           {"seed", seed},
           {"wall_seconds", wall_seconds},
           {"overall_pass", overall_pass},
           {"capacity_limited", capacity_limited}};
  if (polymatroid) {
    json poly{{"normalized", polymatroid->normalized},
              {"monotone", polymatroid->monotone},
              {"submodular", polymatroid->submodular}};
    if (polymatroid->witness) poly["witness"] = witness_to_json(*polymatroid->witness);
    out["polymatroid"] = poly;
  }
  if (first_mismatch) out["first_mismatch"] = *first_mismatch;
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "family " << family << ", n=" << n << "\n";
  for (const StageResult& stage : stages) {
    out << "  [" << (stage.ran ? (stage.pass ? "pass" : "FAIL") : "skip") << "] " << stage.name;
    if (!stage.detail.empty()) out << ": " << stage.detail;
    out << "\n";
  }
  out << (overall_pass ? "PASS" : "FAIL") << " (" << wall_seconds << " s)\n";
  return out.str();
}

}  // namespace entropic
