#pragma once

#include <utility>
#include <vector>

#include "entropic/atoms.hpp"
#include "entropic/linear.hpp"
#include "entropic/setfn.hpp"

namespace entropic {

// Instantiates realizations as explicit finite joint distributions and
// recomputes every entropy from the probability mass function. This is the
// independent numeric oracle: probabilities are exact reciprocals of the base
// state count, so the only error is floating log rounding.

inline constexpr long long kDefaultStateCap = 1 << 20;
inline constexpr double kEntropyTolerance = 1e-9;  // bits

struct JointModel {
  int n = 0;

  // Independent uniform base variables, one per alphabet entry.
  std::vector<long long> alphabets;

  // An observable is a tuple of slots; a slot maps a base outcome to
  // sum(coeff * symbol) mod `mod`. Projections are single-term slots.
  struct Slot {
    std::vector<std::pair<int, long long>> terms;
    long long mod = 2;
  };
  std::vector<std::vector<Slot>> observables;  // per ground element

  long long total_states() const;
};

// Atoms become independent uniform variables on alphabets of size
// 2^(scale * weight); ground element i observes the tuple of its atoms.
// scale * weight must be a nonnegative integer for every atom.
JointModel instantiate_atoms(const AtomSystem& sys, long long scale,
                             long long cap = kDefaultStateCap);

// Smallest scale that makes every atom weight integral.
long long default_atom_scale(const AtomSystem& sys);

// Base = k i.i.d. uniform GF(q) symbols; ground element i observes the inner
// products of its Vandermonde rows with the source.
JointModel instantiate_linear(const LinearSystem& sys, long long cap = kDefaultStateCap);

// Shannon entropy of the observable tuple of `subset`, in bits, by exhaustive
// enumeration of the base outcomes that the tuple depends on.
double exact_entropy(const JointModel& model, SubsetMask subset);

// exact_entropy for every subset of the ground set.
std::vector<double> entropy_table(const JointModel& model);

struct EntropyReport {
  struct Entry {
    SubsetMask subset = 0;
    Rat symbolic;        // realization value, in function units
    double numeric_bits = 0.0;
    double abs_diff = 0.0;
  };
  std::vector<Entry> entries;
  double bits_per_unit = 1.0;  // converts symbolic units to model bits
  double max_abs_diff = 0.0;
  double tolerance = kEntropyTolerance;
  bool pass = true;
};

// Compares pmf entropies against symbolic values on all subsets; passes iff
// the largest |numeric - symbolic * bits_per_unit| is within the tolerance.
EntropyReport verify_model(const JointModel& model, const SetFunctionTable& symbolic,
                           double bits_per_unit, double tolerance = kEntropyTolerance);

struct SimShannonComparison {
  double smi_bits = 0.0;        // I_f(A;B), scaled to bits
  double mi_bits = 0.0;         // I(X_A;X_B) from the pmf
  double cond_gain_bits = 0.0;  // H_f(A|B), scaled to bits
  double cond_entropy_bits = 0.0;
  double scmi_bits = 0.0;       // I_f(A;B|C), scaled to bits
  double cmi_bits = 0.0;
  double max_abs_diff = 0.0;
};

// Pairs the combinatorial measures of `f` with their Shannon counterparts
// computed from the model pmf. A, B, C must be pairwise disjoint.
SimShannonComparison shannon_cross_check(const JointModel& model, const SetFunctionTable& f,
                                         SubsetMask a, SubsetMask b, SubsetMask c,
                                         double bits_per_unit);

// Same comparison against a precomputed numeric entropy table (one entry per
// subset), for exhaustive triple scans.
SimShannonComparison shannon_cross_check_cached(const std::vector<double>& numeric,
                                                const SetFunctionTable& f, SubsetMask a,
                                                SubsetMask b, SubsetMask c, double bits_per_unit);

}  // namespace entropic
