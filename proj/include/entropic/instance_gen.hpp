#pragma once

#include <cstdint>
#include <random>

#include "entropic/spec_io.hpp"
#include "entropic/zoo.hpp"

namespace entropic {

// Seeded random instances for the acceptance suite and property tests.
// Weights use small numerators and denominators up to 8; the integer-demanding
// families draw small nonnegative integers directly.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, bound). mt19937_64 output is identical across platforms, so
  // generated instances are reproducible from the seed alone.
  std::uint64_t below(std::uint64_t bound);
  int size_between(int lo, int hi);
  Rat small_rational(int max_numerator = 8, int max_denominator = 8);

  ModularSpec modular(int n);
  CoverageSpec coverage(int n);
  FacilityLocationSpec facility_location(int n);
  TruncationSpec truncation(int n);           // cardinality case
  TruncationSpec weighted_truncation(int n);  // small integer weights
  ConcaveSpec concave_over_modular(int n);
  SaturatedCoverageSpec saturated_coverage(int n);
  GraphCutSpec graph_cut(int n);

  // A random instance of the named family with ground size n.
  FunctionSpec spec_for_family(const std::string& family, int n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace entropic
