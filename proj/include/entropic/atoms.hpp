#pragma once

#include <string>
#include <vector>

#include "entropic/rational.hpp"
#include "entropic/setfn.hpp"
#include "entropic/zoo.hpp"

namespace entropic {

// Realizations built from mutually independent weighted atoms. Each ground
// element owns a set of atoms; the entropy of a subset is the total weight of
// the union of its atom sets (duplicates counted once). Weights are in bits.

struct Atom {
  Rat weight;
  std::string provenance;  // construction role, e.g. "element(2)" or "suffix(1,0)"
};

struct AtomSystem {
  int n = 0;
  std::vector<Atom> atoms;
  std::vector<std::vector<int>> vars;  // per ground element, sorted atom ids
};

Rat atom_entropy(const AtomSystem& sys, SubsetMask subset);

SetFunctionTable tabulate(const AtomSystem& sys);

// Ordering of equal weights in the nested-suffix constructions. The default is
// deterministic (ties by ascending original index); the alternative exists so
// tests can show the realized values do not depend on the choice.
enum class TieBreak { kIndexAscending, kIndexDescending };

// One private atom per element.
AtomSystem build_modular(const std::vector<Rat>& weights);

// One atom per universe element, shared by every cover containing it.
AtomSystem build_coverage(const CoverageSpec& spec);

// Nested suffix atoms realizing max-of-weights: element of rank r owns atoms
// r..m-1, with atom r weighing w_(r) - w_(r+1) in the sorted order.
AtomSystem build_max(const std::vector<Rat>& weights,
                     TieBreak tie_break = TieBreak::kIndexAscending);

// An independent suffix block per client row; a facility owns, in each block,
// the suffix starting at its rank in that client's preference order.
AtomSystem build_facility_location(const FacilityLocationSpec& spec,
                                   TieBreak tie_break = TieBreak::kIndexAscending);

// Per edge: a shared atom of weight 2*lambda*w_e on both endpoints and a
// private atom of weight (1-2*lambda)*w_e on each.
AtomSystem build_graph_cut(const GraphCutSpec& spec);

}  // namespace entropic
