#include <cmath>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entropic/concretize.hpp"
#include "entropic/errors.hpp"
#include "entropic/spec_io.hpp"
#include "entropic/verify.hpp"

namespace {

using namespace entropic;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

SubsetMask mask_from_elements(const std::vector<int>& elements, int n, const std::string& name) {
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw usage_error(name + " lists element " + std::to_string(e) +
                        " outside the ground set [0, " + std::to_string(n) + ")");
    }
    mask |= 1u << e;
  }
  return mask;
}

int run_realize(const std::string& spec_path, const std::string& output_path) {
  FunctionSpec spec = spec_from_json(load_json_file(spec_path));
  Realization realization = realize(spec);
  write_text_file(output_path, canonical_dump(certificate_to_json(spec, realization)));
  std::cout << "wrote " << realization_kind(realization) << " certificate to " << output_path
            << "\n";
  return kExitPass;
}

int run_verify(const std::string& input_path, const std::set<std::string>& stages,
               bool concretize, long long cap, int sim_samples, std::uint64_t seed,
               const std::string& output_path, const std::string& format) {
  nlohmann::json document = load_json_file(input_path);

  FunctionSpec spec;
  std::optional<Realization> provided;
  if (is_certificate_document(document)) {
    Certificate certificate = certificate_from_json(document);
    spec = std::move(certificate.spec);
    provided = std::move(certificate.realization);
  } else {
    spec = spec_from_json(document);
  }

  VerifyOptions options;
  options.cap = cap;
  options.seed = seed;
  options.concretize = concretize;
  options.sim = sim_samples > 0;
  if (!stages.empty()) {
    options.polymatroid = stages.count("polymatroid") > 0;
    options.symbolic = stages.count("symbolic") > 0;
    options.concretize = concretize || stages.count("concretize") > 0;
    options.sim = options.sim || stages.count("sim") > 0;
  }
  options.sim_samples = options.sim && sim_samples == 0 ? 64 : sim_samples;

  VerificationReport report = run_verification(spec, provided, options);

  const std::string rendered =
      format == "json" ? canonical_dump(report.to_json()) : report.to_text();
  if (output_path.empty()) {
    std::cout << rendered;
  } else {
    write_text_file(output_path, rendered);
  }

  if (!report.overall_pass) return kExitVerificationFailure;
  if (report.capacity_limited) return kExitCapacity;
  return kExitPass;
}

int run_sim(const std::string& spec_path, const std::vector<int>& a_elements,
            const std::vector<int>& b_elements, const std::vector<int>& c_elements,
            bool concretize, long long cap) {
  FunctionSpec spec = spec_from_json(load_json_file(spec_path));
  SetFunctionTable table = tabulate(spec);
  const int n = table.n();
  const SubsetMask a = mask_from_elements(a_elements, n, "--a");
  const SubsetMask b = mask_from_elements(b_elements, n, "--b");
  const SubsetMask c = mask_from_elements(c_elements, n, "--c");

  const Rat smi = mutual_information(table, a, b);
  const Rat gain = conditional_gain(table, a, b);
  const Rat scmi = conditional_mutual_information(table, a, b, c);
  std::cout << "I_f(A;B)   = " << rational_to_string(smi) << "\n";
  std::cout << "H_f(A|B)   = " << rational_to_string(gain) << "\n";
  std::cout << "I_f(A;B|C) = " << rational_to_string(scmi) << "\n";

  if (!concretize) return kExitPass;

  Realization realization = realize(spec);
  JointModel model;
  double bits_per_unit = 1.0;
  if (const auto* atoms = std::get_if<AtomSystem>(&realization)) {
    const long long scale = default_atom_scale(*atoms);
    model = instantiate_atoms(*atoms, scale, cap);
    bits_per_unit = static_cast<double>(scale);
  } else if (const auto* linear = std::get_if<LinearSystem>(&realization)) {
    model = instantiate_linear(*linear, cap);
    bits_per_unit = std::log2(static_cast<double>(linear->q));
  } else {
    throw usage_error("--concretize is not available for mixture realizations; "
                      "verify checks their blocks independently");
  }

  SimShannonComparison cmp = shannon_cross_check(model, table, a, b, c, bits_per_unit);
  std::cout << "in model bits (1 function unit = " << bits_per_unit << " bits):\n";
  std::cout << "I(X_A;X_B)     = " << cmp.mi_bits << "  (combinatorial " << cmp.smi_bits
            << ", diff " << std::fabs(cmp.mi_bits - cmp.smi_bits) << ")\n";
  std::cout << "H(X_A|X_B)     = " << cmp.cond_entropy_bits << "  (combinatorial "
            << cmp.cond_gain_bits << ", diff "
            << std::fabs(cmp.cond_entropy_bits - cmp.cond_gain_bits) << ")\n";
  std::cout << "I(X_A;X_B|X_C) = " << cmp.cmi_bits << "  (combinatorial " << cmp.scmi_bits
            << ", diff " << std::fabs(cmp.cmi_bits - cmp.scmi_bits) << ")\n";
  return cmp.max_abs_diff <= kEntropyTolerance ? kExitPass : kExitVerificationFailure;
}

int run_auto_scale(const std::string& spec_path, const std::string& output_path) {
  AutoScaleResult result = auto_scale(load_json_file(spec_path));
  const std::string rendered = canonical_dump(result.document);
  if (output_path.empty()) {
    std::cout << rendered;
  } else {
    write_text_file(output_path, rendered);
  }
  std::cout << "scale_factor " << result.factor.str() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic realizations of submodular functions: build certificates, "
               "verify them exhaustively, and cross-check information measures"};
  app.require_subcommand(1);

  std::string spec_path, output_path, format = "text";
  std::set<std::string> stages;
  bool concretize = false;
  long long cap = kDefaultStateCap;
  int sim_samples = 0;
  std::uint64_t seed = 0;
  std::vector<int> a_elements, b_elements, c_elements;

  CLI::App* realize_cmd = app.add_subcommand("realize", "build a realization certificate");
  realize_cmd->add_option("spec", spec_path, "function spec document")->required();
  realize_cmd->add_option("-o,--output", output_path, "certificate path")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify a spec or certificate, stage by stage");
  verify_cmd->add_option("input", spec_path, "spec or certificate document")->required();
  verify_cmd
      ->add_option("--stages", stages, "subset of {polymatroid,symbolic,concretize,sim} to run")
      ->delimiter(',');
  verify_cmd->add_flag("--concretize", concretize, "run the pmf oracle stage");
  verify_cmd->add_option("--cap", cap, "base state-space cap for concretization");
  verify_cmd->add_option("--sim-samples", sim_samples, "random disjoint triples to spot-check");
  verify_cmd->add_option("--seed", seed, "seed for the triple sampler");
  verify_cmd->add_option("--output", output_path, "write the report here instead of stdout");
  verify_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* sim_cmd =
      app.add_subcommand("sim", "evaluate the submodular information measures on a spec");
  sim_cmd->add_option("spec", spec_path, "function spec document")->required();
  sim_cmd->add_option("--a", a_elements, "elements of A")->delimiter(',')->required();
  sim_cmd->add_option("--b", b_elements, "elements of B")->delimiter(',')->required();
  sim_cmd->add_option("--c", c_elements, "elements of C")->delimiter(',');
  sim_cmd->add_flag("--concretize", concretize, "also report pmf-derived Shannon values");
  sim_cmd->add_option("--cap", cap, "base state-space cap for concretization");

  CLI::App* scale_cmd =
      app.add_subcommand("auto-scale", "integerize weighted documents by the denominator lcm");
  scale_cmd->add_option("spec", spec_path, "function spec document")->required();
  scale_cmd->add_option("-o,--output", output_path, "write the scaled spec here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (realize_cmd->parsed()) return run_realize(spec_path, output_path);
    if (verify_cmd->parsed()) {
      return run_verify(spec_path, stages, concretize, cap, sim_samples, seed, output_path,
                        format);
    }
    if (sim_cmd->parsed()) {
      return run_sim(spec_path, a_elements, b_elements, c_elements, concretize, cap);
    }
    if (scale_cmd->parsed()) return run_auto_scale(spec_path, output_path);
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
