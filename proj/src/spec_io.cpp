#include "entropic/spec_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* field, const std::string& context) {
  auto it = doc.find(field);
  if (it == doc.end()) {
    throw usage_error(context + " is missing field '" + field + "'");
  }
  return *it;
}

BigInt bigint_from_json(const json& value, const std::string& context) {
  if (value.is_number_integer()) {
    return BigInt(value.get<long long>());
  }
  if (value.is_number_unsigned()) {
    return BigInt(value.get<unsigned long long>());
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    try {
      return BigInt(text);
    } catch (const std::exception&) {
      throw usage_error(context + ": malformed integer '" + text + "'");
    }
  }
  throw usage_error(context + ": expected an integer");
}

json bigint_to_json(const BigInt& value) {
  if (value <= std::numeric_limits<long long>::max() &&
      value >= std::numeric_limits<long long>::min()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

long long int_from_json(const json& value, const std::string& context) {
  const BigInt big = bigint_from_json(value, context);
  if (big > std::numeric_limits<long long>::max() || big < std::numeric_limits<long long>::min()) {
    throw usage_error(context + ": integer out of range");
  }
  return big.convert_to<long long>();
}

std::vector<Rat> rational_list(const json& value, const std::string& context) {
  if (!value.is_array()) throw usage_error(context + " must be an array");
  std::vector<Rat> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    try {
      out.push_back(rational_from_json(value[i]));
    } catch (const usage_error& e) {
      throw usage_error(context + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

std::vector<long long> integer_list(const json& value, const std::string& context) {
  if (!value.is_array()) throw usage_error(context + " must be an array");
  std::vector<long long> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    const Rat r = rational_from_json(value[i]);
    if (!is_integer(r)) {
      throw usage_error(context + "[" + std::to_string(i) + "] must be an integer, got " +
                        rational_to_string(r) + " (run auto-scale first)");
    }
    out.push_back(to_int64(r));
  }
  return out;
}

std::vector<std::vector<Rat>> rational_matrix(const json& value, const std::string& context) {
  if (!value.is_array()) throw usage_error(context + " must be an array of rows");
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_list(value[i], context + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int>> covers_from_json(const json& value, const std::string& context) {
  if (!value.is_array()) throw usage_error(context + " must be an array of covers");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& cover = value[i];
    if (!cover.is_array()) {
      throw usage_error(context + "[" + std::to_string(i) + "] must be an array of elements");
    }
    std::vector<int> elements;
    for (const json& u : cover) {
      elements.push_back(
          static_cast<int>(int_from_json(u, context + "[" + std::to_string(i) + "]")));
    }
    out.push_back(std::move(elements));
  }
  return out;
}

json rational_list_to_json(const std::vector<Rat>& values) {
  json out = json::array();
  for (const Rat& v : values) out.push_back(rational_to_json(v));
  return out;
}

json rational_matrix_to_json(const std::vector<std::vector<Rat>>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(rational_list_to_json(row));
  return out;
}

json atoms_to_json(const AtomSystem& sys) {
  json atoms = json::array();
  for (std::size_t id = 0; id < sys.atoms.size(); ++id) {
    atoms.push_back(json{{"id", id},
                         {"weight", rational_to_json(sys.atoms[id].weight)},
                         {"provenance", sys.atoms[id].provenance}});
  }
  return json{{"n", sys.n}, {"atoms", atoms}, {"vars", sys.vars}};
}

AtomSystem atoms_from_json(const json& body) {
  AtomSystem sys;
  sys.n = static_cast<int>(int_from_json(require_field(body, "n", "atoms realization"),
                                         "atoms realization n"));
  for (const json& entry : require_field(body, "atoms", "atoms realization")) {
    sys.atoms.push_back(Atom{rational_from_json(require_field(entry, "weight", "atom")),
                             require_field(entry, "provenance", "atom").get<std::string>()});
  }
  sys.vars = require_field(body, "vars", "atoms realization").get<std::vector<std::vector<int>>>();
  if (sys.vars.size() != static_cast<std::size_t>(sys.n)) {
    throw usage_error("atoms realization has " + std::to_string(sys.vars.size()) +
                      " variables for ground size " + std::to_string(sys.n));
  }
  for (const auto& var : sys.vars) {
    for (int id : var) {
      if (id < 0 || static_cast<std::size_t>(id) >= sys.atoms.size()) {
        throw usage_error("atoms realization references missing atom " + std::to_string(id));
      }
    }
  }
  return sys;
}

json linear_to_json(const LinearSystem& sys) {
  json rows = json::array();
  for (const PoolRow& row : sys.rows) {
    rows.push_back(json{{"alpha", row.alpha}, {"provenance", row.provenance}});
  }
  return json{{"n", sys.n}, {"q", sys.q}, {"k", sys.k}, {"rows", rows}, {"vars", sys.vars}};
}

LinearSystem linear_from_json(const json& body) {
  LinearSystem sys;
  sys.n = static_cast<int>(int_from_json(require_field(body, "n", "linear realization"),
                                         "linear realization n"));
  sys.q = int_from_json(require_field(body, "q", "linear realization"), "linear realization q");
  sys.k = static_cast<int>(int_from_json(require_field(body, "k", "linear realization"),
                                         "linear realization k"));
  if (!is_prime(sys.q)) {
    throw usage_error("linear realization field size must be prime, got " + std::to_string(sys.q));
  }
  for (const json& entry : require_field(body, "rows", "linear realization")) {
    sys.rows.push_back(PoolRow{int_from_json(require_field(entry, "alpha", "pool row"), "alpha"),
                               require_field(entry, "provenance", "pool row").get<std::string>()});
  }
  sys.vars = require_field(body, "vars", "linear realization").get<std::vector<std::vector<int>>>();
  if (sys.vars.size() != static_cast<std::size_t>(sys.n)) {
    throw usage_error("linear realization has " + std::to_string(sys.vars.size()) +
                      " variables for ground size " + std::to_string(sys.n));
  }
  for (const auto& var : sys.vars) {
    for (int id : var) {
      if (id < 0 || static_cast<std::size_t>(id) >= sys.rows.size()) {
        throw usage_error("linear realization references missing row " + std::to_string(id));
      }
    }
  }
  return sys;
}

json realization_to_json(const Realization& realization);

json mixture_to_json(const MixtureRealization& mixture) {
  json blocks = json::array();
  for (const ScaledBlock& block : mixture.blocks) {
    json entry{{"scale", rational_to_json(block.scale)}};
    if (const auto* atoms = std::get_if<AtomSystem>(&block.block)) {
      entry["unit"] = "bits";
      entry["atoms"] = atoms_to_json(*atoms);
    } else {
      entry["unit"] = "log_q";
      entry["linear"] = linear_to_json(std::get<LinearSystem>(block.block));
    }
    blocks.push_back(std::move(entry));
  }
  return json{{"n", mixture.n}, {"blocks", blocks}};
}

MixtureRealization mixture_from_json(const json& body) {
  MixtureRealization mixture;
  mixture.n = static_cast<int>(int_from_json(require_field(body, "n", "mixture realization"),
                                             "mixture realization n"));
  for (const json& entry : require_field(body, "blocks", "mixture realization")) {
    ScaledBlock block;
    block.scale = rational_from_json(require_field(entry, "scale", "mixture block"));
    if (block.scale < 0) throw usage_error("mixture block scale must be nonnegative");
    if (entry.contains("atoms")) {
      block.block = atoms_from_json(entry["atoms"]);
    } else if (entry.contains("linear")) {
      block.block = linear_from_json(entry["linear"]);
    } else {
      throw usage_error("mixture block carries neither 'atoms' nor 'linear'");
    }
    mixture.blocks.push_back(std::move(block));
  }
  return mixture;
}

json realization_to_json(const Realization& realization) {
  if (const auto* atoms = std::get_if<AtomSystem>(&realization)) {
    return atoms_to_json(*atoms);
  }
  if (const auto* linear = std::get_if<LinearSystem>(&realization)) {
    return linear_to_json(*linear);
  }
  return mixture_to_json(std::get<MixtureRealization>(realization));
}

}  // namespace

void validate(const ExplicitTableSpec& spec) {
  make_table(spec.n, spec.values);  // size and range checks
}

SetFunctionTable tabulate(const ExplicitTableSpec& spec) {
  return make_table(spec.n, spec.values);
}

std::string family_name(const FunctionSpec& spec) {
  struct Namer {
    std::string operator()(const ModularSpec&) const { return "modular"; }
    std::string operator()(const CoverageSpec&) const { return "coverage"; }
    std::string operator()(const FacilityLocationSpec&) const { return "facility_location"; }
    std::string operator()(const TruncationSpec& s) const {
      return s.weighted() ? "weighted_truncation" : "truncation";
    }
    std::string operator()(const ConcaveSpec&) const { return "concave_over_modular"; }
    std::string operator()(const SaturatedCoverageSpec&) const { return "saturated_coverage"; }
    std::string operator()(const GraphCutSpec&) const { return "graph_cut"; }
    std::string operator()(const ExplicitTableSpec&) const { return "explicit_table"; }
  };
  return std::visit(Namer{}, spec);
}

int ground_size(const FunctionSpec& spec) {
  struct Sizer {
    int operator()(const ModularSpec& s) const { return static_cast<int>(s.weights.size()); }
    int operator()(const CoverageSpec& s) const { return static_cast<int>(s.covers.size()); }
    int operator()(const FacilityLocationSpec& s) const { return s.facility_count(); }
    int operator()(const TruncationSpec& s) const { return s.n; }
    int operator()(const ConcaveSpec& s) const { return static_cast<int>(s.weights.size()); }
    int operator()(const SaturatedCoverageSpec& s) const { return static_cast<int>(s.covers.size()); }
    int operator()(const GraphCutSpec& s) const { return static_cast<int>(s.similarity.size()); }
    int operator()(const ExplicitTableSpec& s) const { return s.n; }
  };
  return std::visit(Sizer{}, spec);
}

void validate(const FunctionSpec& spec) {
  std::visit([](const auto& s) { validate(s); }, spec);
}

SetFunctionTable tabulate(const FunctionSpec& spec) {
  return std::visit([](const auto& s) { return tabulate(s); }, spec);
}

Realization realize(const FunctionSpec& spec) {
  struct Builder {
    Realization operator()(const ModularSpec& s) const { return build_modular(s.weights); }
    Realization operator()(const CoverageSpec& s) const { return build_coverage(s); }
    Realization operator()(const FacilityLocationSpec& s) const {
      return build_facility_location(s);
    }
    Realization operator()(const TruncationSpec& s) const {
      if (s.weighted()) return build_weighted_truncation(s.weights, s.k);
      return build_card_truncation(s.n, static_cast<int>(s.k));
    }
    Realization operator()(const ConcaveSpec& s) const { return build_concave_over_modular(s); }
    Realization operator()(const SaturatedCoverageSpec& s) const {
      return build_saturated_coverage(s);
    }
    Realization operator()(const GraphCutSpec& s) const { return build_graph_cut(s); }
    Realization operator()(const ExplicitTableSpec&) const {
      throw usage_error("explicit tables have no realization construction; they can only be "
                        "tabulated and checked");
    }
  };
  return std::visit(Builder{}, spec);
}

std::string realization_kind(const Realization& realization) {
  if (std::holds_alternative<AtomSystem>(realization)) return "atoms";
  if (std::holds_alternative<LinearSystem>(realization)) return "linear";
  return "mixture";
}

SetFunctionTable tabulate(const Realization& realization) {
  return std::visit([](const auto& r) { return tabulate(r); }, realization);
}

Rat rational_from_json(const nlohmann::json& value) {
  if (value.is_number_integer() || value.is_number_unsigned()) {
    return Rat(bigint_from_json(value, "rational"));
  }
  if (value.is_number_float()) {
    throw usage_error("non-integer numeric literals lose exactness; encode rationals as "
                      "\"p/q\" strings, decimal strings, or {\"num\", \"den\"} objects");
  }
  if (value.is_string()) {
    return parse_rational(value.get<std::string>());
  }
  if (value.is_object()) {
    const BigInt num = bigint_from_json(require_field(value, "num", "rational"), "numerator");
    const BigInt den = bigint_from_json(require_field(value, "den", "rational"), "denominator");
    if (den == 0) throw usage_error("rational with zero denominator");
    return Rat(num, den);
  }
  throw usage_error("expected a rational value");
}

nlohmann::json rational_to_json(const Rat& value) {
  return json{{"num", bigint_to_json(numerator(value))},
              {"den", bigint_to_json(denominator(value))}};
}

FunctionSpec spec_from_json(const nlohmann::json& document) {
  if (!document.is_object()) throw usage_error("spec document must be a JSON object");
  const std::string family =
      require_field(document, "family", "spec document").get<std::string>();

  FunctionSpec spec;
  if (family == "modular") {
    spec = ModularSpec{rational_list(require_field(document, "weights", family), "weights")};
  } else if (family == "coverage") {
    spec = CoverageSpec{
        rational_list(require_field(document, "universe_weights", family), "universe_weights"),
        covers_from_json(require_field(document, "covers", family), "covers")};
  } else if (family == "facility_location") {
    spec = FacilityLocationSpec{
        rational_matrix(require_field(document, "similarity", family), "similarity")};
  } else if (family == "truncation") {
    TruncationSpec trunc;
    trunc.n = static_cast<int>(int_from_json(require_field(document, "n", family), "n"));
    trunc.k = int_from_json(require_field(document, "k", family), "k");
    spec = trunc;
  } else if (family == "weighted_truncation") {
    TruncationSpec trunc;
    trunc.weights = integer_list(require_field(document, "weights", family), "weights");
    trunc.n = static_cast<int>(trunc.weights.size());
    trunc.k = int_from_json(require_field(document, "k", family), "k");
    if (trunc.weights.empty()) {
      throw usage_error("weighted_truncation needs at least one weight");
    }
    spec = trunc;
  } else if (family == "concave_over_modular") {
    spec = ConcaveSpec{integer_list(require_field(document, "weights", family), "weights"),
                       rational_list(require_field(document, "g", family), "g")};
  } else if (family == "saturated_coverage") {
    spec = SaturatedCoverageSpec{
        integer_list(require_field(document, "universe_weights", family), "universe_weights"),
        covers_from_json(require_field(document, "covers", family), "covers"),
        int_from_json(require_field(document, "kappa", family), "kappa")};
  } else if (family == "graph_cut") {
    spec = GraphCutSpec{rational_matrix(require_field(document, "similarity", family), "similarity"),
                        rational_from_json(require_field(document, "lambda", family))};
  } else if (family == "explicit_table") {
    ExplicitTableSpec table;
    table.n = static_cast<int>(int_from_json(require_field(document, "n", family), "n"));
    table.values = rational_list(require_field(document, "values", family), "values");
    spec = table;
  } else {
    throw usage_error("unknown family '" + family + "'");
  }

  validate(spec);
  if (ground_size(spec) > kMaxGroundSize) {
    throw usage_error("ground set larger than " + std::to_string(kMaxGroundSize));
  }
  return spec;
}

nlohmann::json spec_to_json(const FunctionSpec& spec) {
  json out{{"family", family_name(spec)}};
  struct Writer {
    json& out;
    void operator()(const ModularSpec& s) const { out["weights"] = rational_list_to_json(s.weights); }
    void operator()(const CoverageSpec& s) const {
      out["universe_weights"] = rational_list_to_json(s.universe_weights);
      out["covers"] = s.covers;
    }
    void operator()(const FacilityLocationSpec& s) const {
      out["similarity"] = rational_matrix_to_json(s.similarity);
    }
    void operator()(const TruncationSpec& s) const {
      out["k"] = s.k;
      if (s.weighted()) {
        out["weights"] = s.weights;
      } else {
        out["n"] = s.n;
      }
    }
    void operator()(const ConcaveSpec& s) const {
      out["weights"] = s.weights;
      out["g"] = rational_list_to_json(s.g);
    }
    void operator()(const SaturatedCoverageSpec& s) const {
      out["universe_weights"] = s.universe_weights;
      out["covers"] = s.covers;
      out["kappa"] = s.cap;
    }
    void operator()(const GraphCutSpec& s) const {
      out["similarity"] = rational_matrix_to_json(s.similarity);
      out["lambda"] = rational_to_json(s.lambda);
    }
    void operator()(const ExplicitTableSpec& s) const {
      out["n"] = s.n;
      out["values"] = rational_list_to_json(s.values);
    }
  };
  std::visit(Writer{out}, spec);
  return out;
}

nlohmann::json certificate_to_json(const FunctionSpec& spec, const Realization& realization) {
  json units;
  if (std::holds_alternative<AtomSystem>(realization)) {
    units = "bits";
  } else if (std::holds_alternative<LinearSystem>(realization)) {
    units = "log_q";
  } else {
    units = "mixed";
  }
  return json{{"builder_version", kBuilderVersion},
              {"kind", realization_kind(realization)},
              {"units", units},
              {"spec", spec_to_json(spec)},
              {"realization", realization_to_json(realization)}};
}

Certificate certificate_from_json(const nlohmann::json& document) {
  if (!document.is_object()) throw usage_error("certificate must be a JSON object");
  Certificate certificate;
  certificate.builder_version =
      require_field(document, "builder_version", "certificate").get<std::string>();
  certificate.spec = spec_from_json(require_field(document, "spec", "certificate"));
  const std::string kind = require_field(document, "kind", "certificate").get<std::string>();
  const json& body = require_field(document, "realization", "certificate");
  if (kind == "atoms") {
    certificate.realization = atoms_from_json(body);
  } else if (kind == "linear") {
    certificate.realization = linear_from_json(body);
  } else if (kind == "mixture") {
    certificate.realization = mixture_from_json(body);
  } else {
    throw usage_error("unknown realization kind '" + kind + "'");
  }
  return certificate;
}

bool is_certificate_document(const nlohmann::json& document) {
  return document.is_object() && document.contains("kind") && document.contains("realization");
}

std::string canonical_dump(const nlohmann::json& document) {
  return document.dump(2) + "\n";
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  json document;
  try {
    in >> document;
  } catch (const json::parse_error& e) {
    throw usage_error("parse error in '" + path + "': " + e.what());
  }
  return document;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << content;
}

namespace {

// Least common multiple of the denominators of every entry that must become
// an integer.
BigInt scale_factor(const std::vector<Rat>& values) { return denominator_lcm(values); }

json scale_integer_list(const std::vector<Rat>& values, const BigInt& factor) {
  json out = json::array();
  for (const Rat& v : values) {
    out.push_back(bigint_to_json(numerator(v * Rat(factor))));
  }
  return out;
}

}  // namespace

AutoScaleResult auto_scale(const nlohmann::json& document) {
  if (!document.is_object()) throw usage_error("spec document must be a JSON object");
  const std::string family =
      require_field(document, "family", "spec document").get<std::string>();
  AutoScaleResult result{document, BigInt(1)};

  if (family == "weighted_truncation") {
    std::vector<Rat> weights =
        rational_list(require_field(document, "weights", family), "weights");
    const Rat level = rational_from_json(require_field(document, "k", family));
    std::vector<Rat> all = weights;
    all.push_back(level);
    result.factor = scale_factor(all);
    result.document["weights"] = scale_integer_list(weights, result.factor);
    result.document["k"] = bigint_to_json(numerator(level * Rat(result.factor)));
  } else if (family == "saturated_coverage") {
    std::vector<Rat> weights =
        rational_list(require_field(document, "universe_weights", family), "universe_weights");
    const Rat cap = rational_from_json(require_field(document, "kappa", family));
    std::vector<Rat> all = weights;
    all.push_back(cap);
    result.factor = scale_factor(all);
    result.document["universe_weights"] = scale_integer_list(weights, result.factor);
    result.document["kappa"] = bigint_to_json(numerator(cap * Rat(result.factor)));
  } else if (family == "concave_over_modular") {
    std::vector<Rat> weights =
        rational_list(require_field(document, "weights", family), "weights");
    std::vector<Rat> g = rational_list(require_field(document, "g", family), "g");
    result.factor = scale_factor(weights);
    const BigInt& factor = result.factor;

    Rat total = 0;
    for (const Rat& w : weights) {
      if (w < 0) throw usage_error("item weights must be nonnegative");
      total += w;
    }
    const BigInt scaled_total = numerator(total * Rat(factor));
    if (Rat(static_cast<long long>(g.size()) - 1) < total) {
      throw usage_error("concave table must cover the total weight " + rational_to_string(total));
    }
    if (scaled_total > 1'000'000 || factor > 1'000'000) {
      throw capacity_error("scaled concave domain too large: " + scaled_total.str());
    }

    // Stretch g to the scaled domain by linear interpolation and multiply the
    // values by the factor, so the scaled function is factor * original.
    const long long top = scaled_total.convert_to<long long>();
    const long long factor_int = factor.convert_to<long long>();
    std::vector<Rat> scaled_g;
    scaled_g.reserve(top + 1);
    for (long long y = 0; y <= top; ++y) {
      const long long base = y / factor_int;
      const long long rem = y % factor_int;
      Rat value = Rat(factor) * g[base];
      if (rem != 0) value += Rat(rem) * (g[base + 1] - g[base]);
      scaled_g.push_back(std::move(value));
    }
    result.document["weights"] = scale_integer_list(weights, factor);
    result.document["g"] = rational_list_to_json(scaled_g);
  }

  return result;
}

}  // namespace entropic
