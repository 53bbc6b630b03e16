#include "entropic/mixture.hpp"

#include <string>

#include "entropic/errors.hpp"

namespace entropic {

Rat block_value(const ScaledBlock& block, SubsetMask subset) {
  if (const auto* atoms = std::get_if<AtomSystem>(&block.block)) {
    return atom_entropy(*atoms, subset);
  }
  return Rat(linear_entropy(std::get<LinearSystem>(block.block), subset).rank);
}

Rat mixture_entropy(const MixtureRealization& mixture, SubsetMask subset) {
  if (subset > make_ground_set(mixture.n).full_mask()) {
    throw usage_error("subset bitmask out of range for mixture");
  }
  Rat total = 0;
  for (const ScaledBlock& block : mixture.blocks) {
    total += block.scale * block_value(block, subset);
  }
  return total;
}

SetFunctionTable tabulate(const MixtureRealization& mixture) {
  GroundSet ground = make_ground_set(mixture.n);
  std::vector<Rat> values(ground.subset_count());
  for (SubsetMask a = 0; a < ground.subset_count(); ++a) {
    values[a] = mixture_entropy(mixture, a);
  }
  return SetFunctionTable{ground, std::move(values)};
}

std::vector<std::pair<long long, Rat>> concave_coefficients(const std::vector<Rat>& g) {
  if (g.empty() || g[0] != 0) {
    throw usage_error("concave table must start with g(0) = 0");
  }
  const long long top = static_cast<long long>(g.size()) - 1;
  std::vector<Rat> increments(top + 2);  // dg(1..T), dg(T+1) = 0
  for (long long t = 1; t <= top; ++t) {
    increments[t] = g[t] - g[t - 1];
    if (increments[t] < 0) {
      throw usage_error("concave table decreases at t = " + std::to_string(t));
    }
    if (t > 1 && increments[t] > increments[t - 1]) {
      throw usage_error("table is not concave at t = " + std::to_string(t) + " (increment rises)");
    }
  }
  increments[top + 1] = 0;

  std::vector<std::pair<long long, Rat>> coefficients;
  for (long long t = 1; t <= top; ++t) {
    Rat c = increments[t] - increments[t + 1];
    if (c != 0) coefficients.emplace_back(t, std::move(c));
  }
  return coefficients;
}

MixtureRealization build_concave_over_modular(const ConcaveSpec& spec) {
  validate(spec);
  MixtureRealization mixture;
  mixture.n = static_cast<int>(spec.weights.size());
  for (auto& [level, coefficient] : concave_coefficients(spec.g)) {
    mixture.blocks.push_back(
        ScaledBlock{coefficient, build_weighted_truncation(spec.weights, level)});
  }
  return mixture;
}

}  // namespace entropic
