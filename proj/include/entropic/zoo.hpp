#pragma once

#include <vector>

#include "entropic/rational.hpp"
#include "entropic/setfn.hpp"

namespace entropic {

// Direct evaluators for each submodular family. These are the brute-force
// oracles every realization is verified against.

struct ModularSpec {
  std::vector<Rat> weights;  // one nonnegative weight per ground element
};

struct CoverageSpec {
  std::vector<Rat> universe_weights;     // w_u >= 0, indexed by universe element
  std::vector<std::vector<int>> covers;  // covers[i] = sorted universe elements of U_i
};

struct FacilityLocationSpec {
  // Row = client, column = facility; the ground set is the facilities.
  std::vector<std::vector<Rat>> similarity;

  int facility_count() const { return similarity.empty() ? 0 : static_cast<int>(similarity[0].size()); }
  int client_count() const { return static_cast<int>(similarity.size()); }
};

struct TruncationSpec {
  int n = 0;
  long long k = 1;
  std::vector<long long> weights;  // empty = cardinality case

  bool weighted() const { return !weights.empty(); }
};

struct ConcaveSpec {
  std::vector<long long> weights;  // nonnegative integer item weights
  std::vector<Rat> g;              // g(0..T) with T = sum of weights

  long long total_weight() const;
};

struct SaturatedCoverageSpec {
  std::vector<long long> universe_weights;  // integer weights after common scaling
  std::vector<std::vector<int>> covers;
  long long cap = 0;  // saturation level kappa
};

struct GraphCutSpec {
  std::vector<std::vector<Rat>> similarity;  // symmetric, zero diagonal
  Rat lambda;                                // in [0, 1/2]
};

void validate(const ModularSpec& spec);
void validate(const CoverageSpec& spec);
void validate(const FacilityLocationSpec& spec);
void validate(const TruncationSpec& spec);
void validate(const ConcaveSpec& spec);
void validate(const SaturatedCoverageSpec& spec);
void validate(const GraphCutSpec& spec);

Rat modular_eval(const ModularSpec& spec, SubsetMask subset);
Rat coverage_eval(const CoverageSpec& spec, SubsetMask subset);
Rat facility_location_eval(const FacilityLocationSpec& spec, SubsetMask subset);
long long truncation_eval(const TruncationSpec& spec, SubsetMask subset);
Rat concave_eval(const ConcaveSpec& spec, SubsetMask subset);
long long saturated_coverage_eval(const SaturatedCoverageSpec& spec, SubsetMask subset);

// Double-sum form of the monotone cut objective.
Rat graph_cut_eval(const GraphCutSpec& spec, SubsetMask subset);
// Independent per-edge case analysis: w_e for one endpoint in A, 2(1-lambda)w_e
// for both. Kept separate so the two routes can be compared exhaustively.
Rat graph_cut_eval_by_edges(const GraphCutSpec& spec, SubsetMask subset);

SetFunctionTable tabulate(const ModularSpec& spec);
SetFunctionTable tabulate(const CoverageSpec& spec);
SetFunctionTable tabulate(const FacilityLocationSpec& spec);
SetFunctionTable tabulate(const TruncationSpec& spec);
SetFunctionTable tabulate(const ConcaveSpec& spec);
SetFunctionTable tabulate(const SaturatedCoverageSpec& spec);
SetFunctionTable tabulate(const GraphCutSpec& spec);

}  // namespace entropic
