#include "entropic/setfn.hpp"

#include <string>

#include "entropic/errors.hpp"

namespace entropic {

GroundSet make_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw usage_error("ground set size must be between 0 and " + std::to_string(kMaxGroundSize) +
                      ", got " + std::to_string(n));
  }
  return GroundSet{n};
}

SetFunctionTable make_table(int n, std::vector<Rat> values) {
  GroundSet ground = make_ground_set(n);
  if (values.size() != ground.subset_count()) {
    throw usage_error("table for n=" + std::to_string(n) + " needs " +
                      std::to_string(ground.subset_count()) + " values, got " +
                      std::to_string(values.size()));
  }
  return SetFunctionTable{ground, std::move(values)};
}

namespace {

void require_in_range(const SetFunctionTable& f, SubsetMask subset) {
  if (subset > f.ground.full_mask()) {
    throw usage_error("subset bitmask " + std::to_string(subset) +
                      " out of range for ground set of size " + std::to_string(f.n()));
  }
}

void require_disjoint(SubsetMask a, SubsetMask b) {
  if ((a & b) != 0) {
    throw usage_error("arguments must be disjoint subsets");
  }
}

}  // namespace

const Rat& eval(const SetFunctionTable& f, SubsetMask subset) {
  require_in_range(f, subset);
  return f.values[subset];
}

PolymatroidReport check_polymatroid(const SetFunctionTable& f) {
  PolymatroidReport report;
  const int n = f.n();
  const std::uint32_t count = f.ground.subset_count();

  report.normalized = f.values[0] == 0;
  if (!report.normalized) {
    report.witness = ViolationWitness{ViolationWitness::Kind::kNormalization, 0, -1, -1};
  }

  report.monotone = true;
  for (SubsetMask a = 0; a < count && report.monotone; ++a) {
    for (int i = 0; i < n; ++i) {
      if (a & (1u << i)) continue;
      if (f.values[a | (1u << i)] < f.values[a]) {
        report.monotone = false;
        if (!report.witness) {
          report.witness = ViolationWitness{ViolationWitness::Kind::kMonotonicity, a, i, -1};
        }
        break;
      }
    }
  }

  report.submodular = true;
  for (SubsetMask a = 0; a < count && report.submodular; ++a) {
    for (int i = 0; i < n && report.submodular; ++i) {
      if (a & (1u << i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (a & (1u << j)) continue;
        const SubsetMask ai = a | (1u << i);
        const SubsetMask aj = a | (1u << j);
        if (f.values[ai] + f.values[aj] < f.values[ai | aj] + f.values[a]) {
          report.submodular = false;
          if (!report.witness) {
            report.witness = ViolationWitness{ViolationWitness::Kind::kSubmodularity, a, i, j};
          }
          break;
        }
      }
    }
  }

  return report;
}

bool witness_is_violation(const SetFunctionTable& f, const ViolationWitness& witness) {
  switch (witness.kind) {
    case ViolationWitness::Kind::kNormalization:
      return f.values[0] != 0;
    case ViolationWitness::Kind::kMonotonicity: {
      const SubsetMask a = witness.subset;
      if (witness.i < 0 || witness.i >= f.n() || (a & (1u << witness.i))) return false;
      return f.values[a | (1u << witness.i)] < f.values[a];
    }
    case ViolationWitness::Kind::kSubmodularity: {
      const SubsetMask a = witness.subset;
      if (witness.i < 0 || witness.j < 0 || witness.i == witness.j) return false;
      if (witness.i >= f.n() || witness.j >= f.n()) return false;
      if ((a & (1u << witness.i)) || (a & (1u << witness.j))) return false;
      const SubsetMask ai = a | (1u << witness.i);
      const SubsetMask aj = a | (1u << witness.j);
      return f.values[ai] + f.values[aj] < f.values[ai | aj] + f.values[a];
    }
  }
  return false;
}

bool is_submodular_lattice(const SetFunctionTable& f) {
  const std::uint32_t count = f.ground.subset_count();
  for (SubsetMask a = 0; a < count; ++a) {
    for (SubsetMask b = a; b < count; ++b) {
      if (f.values[a] + f.values[b] < f.values[a | b] + f.values[a & b]) {
        return false;
      }
    }
  }
  return true;
}

Rat mutual_information(const SetFunctionTable& f, SubsetMask a, SubsetMask b) {
  require_in_range(f, a);
  require_in_range(f, b);
  require_disjoint(a, b);
  return f.values[a] + f.values[b] - f.values[a | b];
}

Rat conditional_gain(const SetFunctionTable& f, SubsetMask a, SubsetMask b) {
  require_in_range(f, a);
  require_in_range(f, b);
  require_disjoint(a, b);
  return f.values[a | b] - f.values[b];
}

Rat conditional_mutual_information(const SetFunctionTable& f, SubsetMask a, SubsetMask b,
                                   SubsetMask c) {
  require_in_range(f, a);
  require_in_range(f, b);
  require_in_range(f, c);
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
  return f.values[a | c] + f.values[b | c] - f.values[c] - f.values[a | b | c];
}

}  // namespace entropic
