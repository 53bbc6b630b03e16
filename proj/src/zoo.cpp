#include "entropic/zoo.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

void require_nonnegative(const std::vector<Rat>& weights, const char* what) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw usage_error(std::string(what) + " must be nonnegative, entry " + std::to_string(i) +
                        " is " + rational_to_string(weights[i]));
    }
  }
}

void require_nonnegative(const std::vector<long long>& weights, const char* what) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw usage_error(std::string(what) + " must be nonnegative, entry " + std::to_string(i) +
                        " is " + std::to_string(weights[i]));
    }
  }
}

void validate_covers(const std::vector<std::vector<int>>& covers, std::size_t universe_size) {
  for (std::size_t i = 0; i < covers.size(); ++i) {
    std::vector<int> seen;
    for (int u : covers[i]) {
      if (u < 0 || static_cast<std::size_t>(u) >= universe_size) {
        throw usage_error("cover " + std::to_string(i) + " references universe element " +
                          std::to_string(u) + " outside [0, " + std::to_string(universe_size) + ")");
      }
      if (std::find(seen.begin(), seen.end(), u) != seen.end()) {
        throw usage_error("cover " + std::to_string(i) + " lists universe element " +
                          std::to_string(u) + " twice");
      }
      seen.push_back(u);
    }
  }
}

// Union of the covers of the ground elements selected by `subset`.
std::vector<char> cover_union(const std::vector<std::vector<int>>& covers,
                              std::size_t universe_size, SubsetMask subset) {
  std::vector<char> in_union(universe_size, 0);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (!(subset & (1u << i))) continue;
    for (int u : covers[i]) in_union[u] = 1;
  }
  return in_union;
}

template <typename Spec, typename Eval>
SetFunctionTable tabulate_with(const Spec& spec, int n, Eval&& eval_fn) {
  validate(spec);
  GroundSet ground = make_ground_set(n);
  std::vector<Rat> values(ground.subset_count());
  for (SubsetMask a = 0; a < ground.subset_count(); ++a) {
    values[a] = eval_fn(spec, a);
  }
  return SetFunctionTable{ground, std::move(values)};
}

}  // namespace

long long ConcaveSpec::total_weight() const {
  long long total = 0;
  for (long long w : weights) total += w;
  return total;
}

void validate(const ModularSpec& spec) {
  require_nonnegative(spec.weights, "modular weights");
}

void validate(const CoverageSpec& spec) {
  require_nonnegative(spec.universe_weights, "universe weights");
  validate_covers(spec.covers, spec.universe_weights.size());
}

void validate(const FacilityLocationSpec& spec) {
  const std::size_t cols = spec.similarity.empty() ? 0 : spec.similarity[0].size();
  for (std::size_t i = 0; i < spec.similarity.size(); ++i) {
    if (spec.similarity[i].size() != cols) {
      throw usage_error("similarity matrix rows have inconsistent lengths");
    }
    require_nonnegative(spec.similarity[i], "similarities");
  }
}

void validate(const TruncationSpec& spec) {
  if (spec.n < 0 || spec.n > kMaxGroundSize) {
    throw usage_error("truncation ground size out of range: " + std::to_string(spec.n));
  }
  if (spec.k < 1) {
    throw usage_error("truncation level k must be >= 1, got " + std::to_string(spec.k));
  }
  if (spec.weighted() && static_cast<int>(spec.weights.size()) != spec.n) {
    throw usage_error("weighted truncation needs one weight per ground element");
  }
  require_nonnegative(spec.weights, "truncation weights");
}

void validate(const ConcaveSpec& spec) {
  require_nonnegative(spec.weights, "item weights");
  const long long total = spec.total_weight();
  if (spec.g.size() != static_cast<std::size_t>(total) + 1) {
    throw usage_error("concave table must have exactly w([n])+1 = " + std::to_string(total + 1) +
                      " entries, got " + std::to_string(spec.g.size()));
  }
  if (spec.g[0] != 0) {
    throw usage_error("concave table must have g(0) = 0, got " + rational_to_string(spec.g[0]));
  }
  for (long long t = 1; t <= total; ++t) {
    if (spec.g[t] < spec.g[t - 1]) {
      throw usage_error("concave table decreases at t = " + std::to_string(t));
    }
  }
  for (long long t = 1; t + 1 <= total; ++t) {
    if (spec.g[t + 1] - spec.g[t] > spec.g[t] - spec.g[t - 1]) {
      throw usage_error("table is not concave at t = " + std::to_string(t + 1) +
                        " (increment rises)");
    }
  }
}

void validate(const SaturatedCoverageSpec& spec) {
  require_nonnegative(spec.universe_weights, "universe weights");
  validate_covers(spec.covers, spec.universe_weights.size());
  if (spec.cap < 0) {
    throw usage_error("saturation cap must be nonnegative, got " + std::to_string(spec.cap));
  }
}

void validate(const GraphCutSpec& spec) {
  const std::size_t n = spec.similarity.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.similarity[i].size() != n) {
      throw usage_error("graph cut similarity matrix must be square");
    }
    if (spec.similarity[i][i] != 0) {
      throw usage_error("graph cut similarity matrix must have a zero diagonal");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.similarity[i][j] < 0) {
        throw usage_error("graph cut similarities must be nonnegative");
      }
      if (spec.similarity[i][j] != spec.similarity[j][i]) {
        throw usage_error("graph cut similarity matrix must be symmetric");
      }
    }
  }
  if (spec.lambda < 0 || spec.lambda > Rat(1, 2)) {
    throw usage_error("graph cut lambda must lie in [0, 1/2], got " +
                      rational_to_string(spec.lambda));
  }
}

Rat modular_eval(const ModularSpec& spec, SubsetMask subset) {
  Rat total = 0;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    if (subset & (1u << i)) total += spec.weights[i];
  }
  return total;
}

Rat coverage_eval(const CoverageSpec& spec, SubsetMask subset) {
  std::vector<char> in_union = cover_union(spec.covers, spec.universe_weights.size(), subset);
  Rat total = 0;
  for (std::size_t u = 0; u < spec.universe_weights.size(); ++u) {
    if (in_union[u]) total += spec.universe_weights[u];
  }
  return total;
}

Rat facility_location_eval(const FacilityLocationSpec& spec, SubsetMask subset) {
  Rat total = 0;
  for (const auto& row : spec.similarity) {
    Rat best = 0;  // max over the empty set is 0
    for (std::size_t a = 0; a < row.size(); ++a) {
      if ((subset & (1u << a)) && row[a] > best) best = row[a];
    }
    total += best;
  }
  return total;
}

long long truncation_eval(const TruncationSpec& spec, SubsetMask subset) {
  long long mass = 0;
  if (spec.weighted()) {
    for (int i = 0; i < spec.n; ++i) {
      if (subset & (1u << i)) mass += spec.weights[i];
    }
  } else {
    mass = std::popcount(subset);
  }
  return std::min(mass, spec.k);
}

Rat concave_eval(const ConcaveSpec& spec, SubsetMask subset) {
  long long mass = 0;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    if (subset & (1u << i)) mass += spec.weights[i];
  }
  if (mass >= static_cast<long long>(spec.g.size())) {
    throw std::logic_error("concave table shorter than reachable modular mass");
  }
  return spec.g[mass];
}

long long saturated_coverage_eval(const SaturatedCoverageSpec& spec, SubsetMask subset) {
  std::vector<char> in_union = cover_union(spec.covers, spec.universe_weights.size(), subset);
  long long covered = 0;
  for (std::size_t u = 0; u < spec.universe_weights.size(); ++u) {
    if (in_union[u]) covered += spec.universe_weights[u];
  }
  return std::min(covered, spec.cap);
}

Rat graph_cut_eval(const GraphCutSpec& spec, SubsetMask subset) {
  const std::size_t n = spec.similarity.size();
  Rat total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(subset & (1u << i))) continue;
    for (std::size_t j = 0; j < n; ++j) {
      total += spec.similarity[i][j];
      if (subset & (1u << j)) total -= spec.lambda * spec.similarity[i][j];
    }
  }
  return total;
}

Rat graph_cut_eval_by_edges(const GraphCutSpec& spec, SubsetMask subset) {
  const std::size_t n = spec.similarity.size();
  Rat total = 0;
  const Rat both_factor = Rat(2) * (Rat(1) - spec.lambda);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rat& w = spec.similarity[i][j];
      if (w == 0) continue;
      const bool has_i = subset & (1u << i);
      const bool has_j = subset & (1u << j);
      if (has_i && has_j) {
        total += both_factor * w;
      } else if (has_i || has_j) {
        total += w;
      }
    }
  }
  return total;
}

SetFunctionTable tabulate(const ModularSpec& spec) {
  return tabulate_with(spec, static_cast<int>(spec.weights.size()), modular_eval);
}

SetFunctionTable tabulate(const CoverageSpec& spec) {
  return tabulate_with(spec, static_cast<int>(spec.covers.size()), coverage_eval);
}

SetFunctionTable tabulate(const FacilityLocationSpec& spec) {
  return tabulate_with(spec, spec.facility_count(), facility_location_eval);
}

SetFunctionTable tabulate(const TruncationSpec& spec) {
  return tabulate_with(spec, spec.n,
                       [](const TruncationSpec& s, SubsetMask a) { return Rat(truncation_eval(s, a)); });
}

SetFunctionTable tabulate(const ConcaveSpec& spec) {
  return tabulate_with(spec, static_cast<int>(spec.weights.size()), concave_eval);
}

SetFunctionTable tabulate(const SaturatedCoverageSpec& spec) {
  return tabulate_with(spec, static_cast<int>(spec.covers.size()), [](const SaturatedCoverageSpec& s, SubsetMask a) {
    return Rat(saturated_coverage_eval(s, a));
  });
}

SetFunctionTable tabulate(const GraphCutSpec& spec) {
  return tabulate_with(spec, static_cast<int>(spec.similarity.size()), graph_cut_eval);
}

}  // namespace entropic
