#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entropic/rational.hpp"

namespace entropic {

using SubsetMask = std::uint32_t;

// Dense 2^n tables are the verification strategy, so the ground set is capped.
inline constexpr int kMaxGroundSize = 20;

// Ground set {0, ..., n-1}; subsets are bitmasks of width n.
struct GroundSet {
  int n = 0;

  SubsetMask full_mask() const { return n == 0 ? 0u : ((1u << n) - 1u); }
  std::uint32_t subset_count() const { return 1u << n; }
};

GroundSet make_ground_set(int n);

// Exact table of f(A) for every A, indexed by bitmask. The universal
// comparison target: every realization is checked against one of these.
struct SetFunctionTable {
  GroundSet ground;
  std::vector<Rat> values;

  int n() const { return ground.n; }
};

SetFunctionTable make_table(int n, std::vector<Rat> values);

const Rat& eval(const SetFunctionTable& f, SubsetMask subset);

struct ViolationWitness {
  enum class Kind { kNormalization, kMonotonicity, kSubmodularity };

  Kind kind = Kind::kNormalization;
  SubsetMask subset = 0;  // the base set A
  int i = -1;             // element added to A (monotonicity, submodularity)
  int j = -1;             // second added element (submodularity only)
};

struct PolymatroidReport {
  bool normalized = false;
  bool monotone = false;
  bool submodular = false;
  std::optional<ViolationWitness> witness;

  bool ok() const { return normalized && monotone && submodular; }
};

// Scans normalization, monotonicity, and the elemental submodularity
// inequalities f(A+i) + f(A+j) >= f(A+i+j) + f(A). Each scan runs in
// lexicographic bitmask order; the reported witness is the first violation of
// the first failing check (checks ordered as listed above).
PolymatroidReport check_polymatroid(const SetFunctionTable& f);

// Recomputes the inequality named by the witness; true iff it really fails.
bool witness_is_violation(const SetFunctionTable& f, const ViolationWitness& witness);

// Submodularity over the full lattice: f(A) + f(B) >= f(A|B) + f(A&B) for all
// pairs. Quadratic in table size; cross-validates the elemental scan.
bool is_submodular_lattice(const SetFunctionTable& f);

// Submodular information measures. All arguments must be pairwise disjoint.
Rat mutual_information(const SetFunctionTable& f, SubsetMask a, SubsetMask b);
Rat conditional_gain(const SetFunctionTable& f, SubsetMask a, SubsetMask b);
Rat conditional_mutual_information(const SetFunctionTable& f, SubsetMask a, SubsetMask b,
                                   SubsetMask c);

}  // namespace entropic
