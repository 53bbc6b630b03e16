#include "entropic/concretize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

long long checked_product(long long a, long long b, long long limit) {
  if (a > limit / b) {
    throw capacity_error("joint state space exceeds the enumeration cap");
  }
  return a * b;
}

// Alphabet of one instantiated atom: 2^exponent, guarded against the cap.
long long atom_alphabet(const Rat& scaled_weight, long long cap) {
  if (!is_integer(scaled_weight) || scaled_weight < 0) {
    throw usage_error("scaled atom weight must be a nonnegative integer, got " +
                      rational_to_string(scaled_weight));
  }
  const long long exponent = to_int64(scaled_weight);
  if (exponent >= 62 || (1LL << exponent) > cap) {
    throw capacity_error("atom alphabet 2^" + std::to_string(exponent) +
                         " exceeds the enumeration cap");
  }
  return 1LL << exponent;
}

}  // namespace

long long JointModel::total_states() const {
  long long total = 1;
  for (long long a : alphabets) {
    total = checked_product(total, a, std::numeric_limits<long long>::max() / 2);
  }
  return total;
}

JointModel instantiate_atoms(const AtomSystem& sys, long long scale, long long cap) {
  if (scale < 1) throw usage_error("atom scale must be a positive integer");
  JointModel model;
  model.n = sys.n;
  model.alphabets.reserve(sys.atoms.size());
  long long states = 1;
  for (const Atom& atom : sys.atoms) {
    const long long alphabet = atom_alphabet(Rat(scale) * atom.weight, cap);
    states = checked_product(states, alphabet, cap);
    model.alphabets.push_back(alphabet);
  }
  model.observables.resize(sys.n);
  for (int i = 0; i < sys.n; ++i) {
    for (int atom_id : sys.vars[i]) {
      model.observables[i].push_back(
          JointModel::Slot{{{atom_id, 1}}, model.alphabets[atom_id]});
    }
  }
  return model;
}

long long default_atom_scale(const AtomSystem& sys) {
  std::vector<Rat> weights;
  weights.reserve(sys.atoms.size());
  for (const Atom& atom : sys.atoms) weights.push_back(atom.weight);
  const BigInt lcm = denominator_lcm(weights);
  if (lcm > std::numeric_limits<long long>::max()) {
    throw capacity_error("atom weight denominators too large to instantiate");
  }
  return lcm.convert_to<long long>();
}

JointModel instantiate_linear(const LinearSystem& sys, long long cap) {
  JointModel model;
  model.n = sys.n;
  long long states = 1;
  for (int j = 0; j < sys.k; ++j) {
    states = checked_product(states, sys.q, cap);
    model.alphabets.push_back(sys.q);
  }
  model.observables.resize(sys.n);
  for (int i = 0; i < sys.n; ++i) {
    for (int row_id : sys.vars[i]) {
      const std::vector<long long> row = vandermonde_row(sys.rows[row_id].alpha, sys.k, sys.q);
      JointModel::Slot slot;
      slot.mod = sys.q;
      for (int j = 0; j < sys.k; ++j) {
        if (row[j] != 0) slot.terms.emplace_back(j, row[j]);
      }
      model.observables[i].push_back(std::move(slot));
    }
  }
  return model;
}

double exact_entropy(const JointModel& model, SubsetMask subset) {
  if (subset > make_ground_set(model.n).full_mask()) {
    throw usage_error("subset bitmask out of range for joint model");
  }

  // Only base variables referenced by the selected observables matter; the
  // rest marginalize out of the uniform product exactly.
  std::vector<char> referenced(model.alphabets.size(), 0);
  std::vector<int> elements;
  for (int i = 0; i < model.n; ++i) {
    if (!(subset & (1u << i))) continue;
    elements.push_back(i);
    for (const auto& slot : model.observables[i]) {
      for (const auto& [base, coeff] : slot.terms) referenced[base] = 1;
    }
  }

  std::vector<int> support;
  long long states = 1;
  for (std::size_t b = 0; b < model.alphabets.size(); ++b) {
    if (referenced[b] && model.alphabets[b] > 1) {
      support.push_back(static_cast<int>(b));
      states = checked_product(states, model.alphabets[b],
                               std::numeric_limits<long long>::max() / 2);
    }
  }

  std::vector<long long> outcome(model.alphabets.size(), 0);
  std::map<std::vector<long long>, long long> counts;
  std::vector<long long> key;
  for (long long state = 0; state < states; ++state) {
    key.clear();
    for (int i : elements) {
      for (const auto& slot : model.observables[i]) {
        long long value = 0;
        for (const auto& [base, coeff] : slot.terms) {
          value = (value + coeff * outcome[base]) % slot.mod;
        }
        key.push_back(value);
      }
    }
    ++counts[key];

    for (int b : support) {  // mixed-radix increment
      if (++outcome[b] < model.alphabets[b]) break;
      outcome[b] = 0;
    }
  }

  double plogp_sum = 0.0;
  for (const auto& [tuple, count] : counts) {
    plogp_sum += static_cast<double>(count) * std::log2(static_cast<double>(count));
  }
  return std::log2(static_cast<double>(states)) -
         plogp_sum / static_cast<double>(states);
}

std::vector<double> entropy_table(const JointModel& model) {
  const GroundSet ground = make_ground_set(model.n);
  std::vector<double> values(ground.subset_count());
  for (SubsetMask a = 0; a < ground.subset_count(); ++a) {
    values[a] = exact_entropy(model, a);
  }
  return values;
}

EntropyReport verify_model(const JointModel& model, const SetFunctionTable& symbolic,
                           double bits_per_unit, double tolerance) {
  if (model.n != symbolic.n()) {
    throw usage_error("joint model and symbolic table have mismatched ground sets");
  }
  EntropyReport report;
  report.bits_per_unit = bits_per_unit;
  report.tolerance = tolerance;
  for (SubsetMask a = 0; a < symbolic.ground.subset_count(); ++a) {
    EntropyReport::Entry entry;
    entry.subset = a;
    entry.symbolic = symbolic.values[a];
    entry.numeric_bits = exact_entropy(model, a);
    entry.abs_diff = std::fabs(entry.numeric_bits - to_double(entry.symbolic) * bits_per_unit);
    report.max_abs_diff = std::max(report.max_abs_diff, entry.abs_diff);
    report.entries.push_back(std::move(entry));
  }
  report.pass = report.max_abs_diff <= tolerance;
  return report;
}

SimShannonComparison shannon_cross_check_cached(const std::vector<double>& numeric,
                                                const SetFunctionTable& f, SubsetMask a,
                                                SubsetMask b, SubsetMask c,
                                                double bits_per_unit) {
  SimShannonComparison out;
  out.smi_bits = to_double(mutual_information(f, a, b)) * bits_per_unit;
  out.cond_gain_bits = to_double(conditional_gain(f, a, b)) * bits_per_unit;
  out.scmi_bits = to_double(conditional_mutual_information(f, a, b, c)) * bits_per_unit;

  out.mi_bits = numeric[a] + numeric[b] - numeric[a | b];
  out.cond_entropy_bits = numeric[a | b] - numeric[b];
  out.cmi_bits = numeric[a | c] + numeric[b | c] - numeric[c] - numeric[a | b | c];

  out.max_abs_diff = std::max({std::fabs(out.smi_bits - out.mi_bits),
                               std::fabs(out.cond_gain_bits - out.cond_entropy_bits),
                               std::fabs(out.scmi_bits - out.cmi_bits)});
  return out;
}

SimShannonComparison shannon_cross_check(const JointModel& model, const SetFunctionTable& f,
                                         SubsetMask a, SubsetMask b, SubsetMask c,
                                         double bits_per_unit) {
  // Validates disjointness up front (the table operations repeat the check).
  conditional_mutual_information(f, a, b, c);

  std::vector<double> numeric(f.ground.subset_count(), 0.0);
  for (SubsetMask s : {a, b, c, a | b, a | c, b | c, SubsetMask(a | b | c)}) {
    numeric[s] = exact_entropy(model, s);
  }
  return shannon_cross_check_cached(numeric, f, a, b, c, bits_per_unit);
}

}  // namespace entropic
