#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "entropic/atoms.hpp"
#include "entropic/linear.hpp"
#include "entropic/rational.hpp"
#include "entropic/zoo.hpp"

namespace entropic {

// Conic combinations of realizations: formally independent blocks, each
// contributing scale * block_value(A). Atom blocks are valued in bits, linear
// blocks in log q units; the certificate records the unit per block.

struct ScaledBlock {
  Rat scale;  // nonnegative
  std::variant<AtomSystem, LinearSystem> block;
};

struct MixtureRealization {
  int n = 0;
  std::vector<ScaledBlock> blocks;
};

// Unscaled value of one block: atom_entropy for atom blocks, rank for linear.
Rat block_value(const ScaledBlock& block, SubsetMask subset);

Rat mixture_entropy(const MixtureRealization& mixture, SubsetMask subset);

SetFunctionTable tabulate(const MixtureRealization& mixture);

// Decomposes a concave table into truncation coefficients:
// g(x) = sum_t c_t * min(x, t) with c_t = dg(t) - dg(t+1) >= 0, dg(T+1) = 0.
// Zero coefficients are dropped. Rejects tables that decrease or are not
// concave, naming the first violating position.
std::vector<std::pair<long long, Rat>> concave_coefficients(const std::vector<Rat>& g);

// One weighted-truncation block per nonzero coefficient.
MixtureRealization build_concave_over_modular(const ConcaveSpec& spec);

}  // namespace entropic
