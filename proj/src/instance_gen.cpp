#include "entropic/instance_gen.hpp"

#include <algorithm>

#include "entropic/errors.hpp"

namespace entropic {

std::uint64_t InstanceGen::below(std::uint64_t bound) {
  return bound == 0 ? 0 : rng_() % bound;
}

int InstanceGen::size_between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rat InstanceGen::small_rational(int max_numerator, int max_denominator) {
  const long long num = static_cast<long long>(below(max_numerator + 1));
  const long long den = 1 + static_cast<long long>(below(max_denominator));
  return Rat(num, den);
}

ModularSpec InstanceGen::modular(int n) {
  ModularSpec spec;
  for (int i = 0; i < n; ++i) spec.weights.push_back(small_rational());
  return spec;
}

CoverageSpec InstanceGen::coverage(int n) {
  CoverageSpec spec;
  const int universe = size_between(1, std::max(2, 2 * n));
  for (int u = 0; u < universe; ++u) spec.universe_weights.push_back(small_rational());
  for (int i = 0; i < n; ++i) {
    std::vector<int> cover;
    for (int u = 0; u < universe; ++u) {
      if (below(2)) cover.push_back(u);
    }
    spec.covers.push_back(std::move(cover));
  }
  return spec;
}

FacilityLocationSpec InstanceGen::facility_location(int n) {
  FacilityLocationSpec spec;
  const int clients = size_between(1, std::max(1, n + 2));
  for (int i = 0; i < clients; ++i) {
    std::vector<Rat> row;
    for (int a = 0; a < n; ++a) row.push_back(small_rational());
    spec.similarity.push_back(std::move(row));
  }
  return spec;
}

TruncationSpec InstanceGen::truncation(int n) {
  TruncationSpec spec;
  spec.n = n;
  spec.k = size_between(1, n);
  return spec;
}

TruncationSpec InstanceGen::weighted_truncation(int n) {
  TruncationSpec spec;
  spec.n = n;
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    spec.weights.push_back(static_cast<long long>(below(4)));
    total += spec.weights.back();
  }
  spec.k = size_between(1, static_cast<int>(std::max<long long>(total, 1)));
  return spec;
}

ConcaveSpec InstanceGen::concave_over_modular(int n) {
  ConcaveSpec spec;
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    spec.weights.push_back(static_cast<long long>(below(3)));
    total += spec.weights.back();
  }
  // Random nonincreasing nonnegative increments keep the table concave.
  std::vector<Rat> increments;
  for (long long t = 0; t < total; ++t) {
    increments.push_back(small_rational(6, 4));
  }
  std::sort(increments.begin(), increments.end(), std::greater<Rat>());
  spec.g.push_back(Rat(0));
  for (long long t = 0; t < total; ++t) {
    spec.g.push_back(spec.g.back() + increments[t]);
  }
  return spec;
}

SaturatedCoverageSpec InstanceGen::saturated_coverage(int n) {
  SaturatedCoverageSpec spec;
  const int universe = size_between(1, std::max(2, n + 2));
  long long total = 0;
  for (int u = 0; u < universe; ++u) {
    spec.universe_weights.push_back(static_cast<long long>(below(4)));
    total += spec.universe_weights.back();
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> cover;
    for (int u = 0; u < universe; ++u) {
      if (below(2)) cover.push_back(u);
    }
    spec.covers.push_back(std::move(cover));
  }
  spec.cap = static_cast<long long>(below(total + 2));
  return spec;
}

GraphCutSpec InstanceGen::graph_cut(int n) {
  GraphCutSpec spec;
  spec.similarity.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (below(3) == 0) continue;  // keep some edges absent
      Rat w = small_rational();
      spec.similarity[i][j] = w;
      spec.similarity[j][i] = w;
    }
  }
  // lambda = numerator / 16 with numerator in [0, 8], so it stays in [0, 1/2].
  spec.lambda = Rat(static_cast<long long>(below(9)), 16);
  return spec;
}

FunctionSpec InstanceGen::spec_for_family(const std::string& family, int n) {
  if (family == "modular") return modular(n);
  if (family == "coverage") return coverage(n);
  if (family == "facility_location") return facility_location(n);
  if (family == "truncation") return truncation(n);
  if (family == "weighted_truncation") return weighted_truncation(n);
  if (family == "concave_over_modular") return concave_over_modular(n);
  if (family == "saturated_coverage") return saturated_coverage(n);
  if (family == "graph_cut") return graph_cut(n);
  throw usage_error("unknown family '" + family + "'");
}

}  // namespace entropic
