#include "entropic/atoms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

std::string paren(std::initializer_list<long long> args) {
  std::string out = "(";
  bool first = true;
  for (long long a : args) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + ")";
}

void check_system(const AtomSystem& sys) {
  for (const auto& var : sys.vars) {
    for (int id : var) {
      if (id < 0 || static_cast<std::size_t>(id) >= sys.atoms.size()) {
        throw std::logic_error("atom system references a missing atom");
      }
    }
  }
}

// Ranks element indices by nonincreasing weight; ties by original index
// (ascending or descending depending on the policy).
std::vector<int> rank_order(const std::vector<Rat>& weights, TieBreak tie_break) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return tie_break == TieBreak::kIndexAscending ? a < b : a > b;
  });
  return order;
}

// Appends the suffix-atom block for one weight row. label(rank) names the
// atom covering ranks <= rank; assign(element, atom_id) records ownership.
template <typename Label, typename Assign>
void append_suffix_block(AtomSystem& sys, const std::vector<Rat>& weights, TieBreak tie_break,
                         Label&& label, Assign&& assign) {
  const int m = static_cast<int>(weights.size());
  std::vector<int> order = rank_order(weights, tie_break);

  // delta_r = w_(r) - w_(r+1), with one past-the-end weight of zero.
  std::vector<int> atom_of_rank(m, -1);
  for (int r = 0; r < m; ++r) {
    Rat next = r + 1 < m ? weights[order[r + 1]] : Rat(0);
    Rat delta = weights[order[r]] - next;
    if (delta == 0) continue;
    atom_of_rank[r] = static_cast<int>(sys.atoms.size());
    sys.atoms.push_back(Atom{delta, label(r)});
  }
  for (int r = 0; r < m; ++r) {
    for (int t = r; t < m; ++t) {
      if (atom_of_rank[t] >= 0) assign(order[r], atom_of_rank[t]);
    }
  }
}

}  // namespace

Rat atom_entropy(const AtomSystem& sys, SubsetMask subset) {
  if (subset > make_ground_set(sys.n).full_mask()) {
    throw usage_error("subset bitmask out of range for atom system");
  }
  std::vector<char> seen(sys.atoms.size(), 0);
  Rat total = 0;
  for (int i = 0; i < sys.n; ++i) {
    if (!(subset & (1u << i))) continue;
    for (int id : sys.vars[i]) {
      if (!seen[id]) {
        seen[id] = 1;
        total += sys.atoms[id].weight;
      }
    }
  }
  return total;
}

SetFunctionTable tabulate(const AtomSystem& sys) {
  GroundSet ground = make_ground_set(sys.n);
  std::vector<Rat> values(ground.subset_count());
  for (SubsetMask a = 0; a < ground.subset_count(); ++a) {
    values[a] = atom_entropy(sys, a);
  }
  return SetFunctionTable{ground, std::move(values)};
}

AtomSystem build_modular(const std::vector<Rat>& weights) {
  validate(ModularSpec{weights});
  AtomSystem sys;
  sys.n = static_cast<int>(weights.size());
  sys.vars.resize(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;  // zero-weight atoms are omitted
    sys.vars[i].push_back(static_cast<int>(sys.atoms.size()));
    sys.atoms.push_back(Atom{weights[i], "item" + paren({static_cast<long long>(i)})});
  }
  check_system(sys);
  return sys;
}

AtomSystem build_coverage(const CoverageSpec& spec) {
  validate(spec);
  AtomSystem sys;
  sys.n = static_cast<int>(spec.covers.size());
  sys.vars.resize(sys.n);

  std::vector<int> atom_of_element(spec.universe_weights.size(), -1);
  for (std::size_t u = 0; u < spec.universe_weights.size(); ++u) {
    if (spec.universe_weights[u] == 0) continue;
    atom_of_element[u] = static_cast<int>(sys.atoms.size());
    sys.atoms.push_back(
        Atom{spec.universe_weights[u], "element" + paren({static_cast<long long>(u)})});
  }
  for (int i = 0; i < sys.n; ++i) {
    for (int u : spec.covers[i]) {
      if (atom_of_element[u] >= 0) sys.vars[i].push_back(atom_of_element[u]);
    }
    std::sort(sys.vars[i].begin(), sys.vars[i].end());
  }
  check_system(sys);
  return sys;
}

AtomSystem build_max(const std::vector<Rat>& weights, TieBreak tie_break) {
  for (const Rat& w : weights) {
    if (w < 0) throw usage_error("max weights must be nonnegative");
  }
  AtomSystem sys;
  sys.n = static_cast<int>(weights.size());
  sys.vars.resize(weights.size());
  append_suffix_block(
      sys, weights, tie_break, [](int rank) { return "suffix" + paren({rank}); },
      [&](int element, int atom_id) { sys.vars[element].push_back(atom_id); });
  for (auto& var : sys.vars) std::sort(var.begin(), var.end());
  check_system(sys);
  return sys;
}

AtomSystem build_facility_location(const FacilityLocationSpec& spec, TieBreak tie_break) {
  validate(spec);
  AtomSystem sys;
  sys.n = spec.facility_count();
  sys.vars.resize(sys.n);
  for (int client = 0; client < spec.client_count(); ++client) {
    append_suffix_block(
        sys, spec.similarity[client], tie_break,
        [&](int rank) { return "suffix" + paren({client, rank}); },
        [&](int facility, int atom_id) { sys.vars[facility].push_back(atom_id); });
  }
  for (auto& var : sys.vars) std::sort(var.begin(), var.end());
  check_system(sys);
  return sys;
}

AtomSystem build_graph_cut(const GraphCutSpec& spec) {
  validate(spec);
  AtomSystem sys;
  sys.n = static_cast<int>(spec.similarity.size());
  sys.vars.resize(sys.n);

  const Rat shared_factor = Rat(2) * spec.lambda;
  const Rat private_factor = Rat(1) - Rat(2) * spec.lambda;
  for (int i = 0; i < sys.n; ++i) {
    for (int j = i + 1; j < sys.n; ++j) {
      const Rat& w = spec.similarity[i][j];
      if (w == 0) continue;
      if (shared_factor != 0) {
        const int id = static_cast<int>(sys.atoms.size());
        sys.atoms.push_back(Atom{shared_factor * w, "shared" + paren({i, j})});
        sys.vars[i].push_back(id);
        sys.vars[j].push_back(id);
      }
      if (private_factor != 0) {
        for (int endpoint : {i, j}) {
          const int id = static_cast<int>(sys.atoms.size());
          sys.atoms.push_back(Atom{private_factor * w, "private" + paren({i, j, endpoint})});
          sys.vars[endpoint].push_back(id);
        }
      }
    }
  }
  for (auto& var : sys.vars) std::sort(var.begin(), var.end());
  check_system(sys);
  return sys;
}

}  // namespace entropic
