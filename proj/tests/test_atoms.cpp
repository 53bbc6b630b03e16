#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "entropic/atoms.hpp"
#include "entropic/errors.hpp"
#include "entropic/instance_gen.hpp"

#include <algorithm>

using namespace entropic;

TEST_CASE("atom entropy adds independent atoms and deduplicates shared ones") {
  AtomSystem disjoint;
  disjoint.n = 2;
  disjoint.atoms = {{Rat(1), "a"}, {Rat(2), "b"}};
  disjoint.vars = {{0}, {1}};
  CHECK(atom_entropy(disjoint, 0b11) == 3);
  CHECK(atom_entropy(disjoint, 0) == 0);

  AtomSystem shared;
  shared.n = 2;
  shared.atoms = {{Rat(5), "s"}};
  shared.vars = {{0}, {0}};
  CHECK(atom_entropy(shared, 0b11) == 5);
  CHECK(atom_entropy(shared, 0b01) == 5);
}

TEST_CASE("modular construction uses one private atom per element") {
  AtomSystem sys = build_modular({Rat(1), Rat(2)});
  CHECK(atom_entropy(sys, 0b11) == 3);

  AtomSystem zero = build_modular({Rat(0), Rat(0)});
  CHECK(zero.atoms.empty());  // zero-weight atoms are omitted
  CHECK(atom_entropy(zero, 0b11) == 0);

  AtomSystem fractional = build_modular({Rat(1, 2), Rat(1, 3)});
  CHECK(atom_entropy(fractional, 0b11) == Rat(5, 6));

  CHECK_THROWS_AS(build_modular({Rat(-1)}), usage_error);
}

TEST_CASE("coverage construction matches the union-sum oracle") {
  CoverageSpec spec{{Rat(1), Rat(2), Rat(3)}, {{0, 1}, {1, 2}}};
  AtomSystem sys = build_coverage(spec);
  CHECK(sys.atoms.size() == 3);
  for (SubsetMask a = 0; a < 4; ++a) {
    CHECK(atom_entropy(sys, a) == coverage_eval(spec, a));
  }
  CHECK(atom_entropy(sys, 0b01) == 3);

  AtomSystem empty_covers = build_coverage(CoverageSpec{{Rat(1)}, {{}, {}}});
  CHECK(atom_entropy(empty_covers, 0b11) == 0);
}

TEST_CASE("max construction realizes suffix telescoping") {
  AtomSystem sys = build_max({Rat(5), Rat(3), Rat(2)});
  // Singleton entropies recover the weights exactly.
  CHECK(atom_entropy(sys, 0b001) == 5);
  CHECK(atom_entropy(sys, 0b010) == 3);
  CHECK(atom_entropy(sys, 0b100) == 2);
  CHECK(atom_entropy(sys, 0b110) == 3);  // max(3, 2)
  CHECK(atom_entropy(sys, 0b111) == 5);

  // Ties: every nonempty subset carries the common weight.
  AtomSystem ties = build_max({Rat(4), Rat(4), Rat(4)});
  for (SubsetMask a = 1; a < 8; ++a) CHECK(atom_entropy(ties, a) == 4);

  CHECK_THROWS_AS(build_max({Rat(-1)}), usage_error);
}

TEST_CASE("max construction handles unsorted input") {
  InstanceGen gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = gen.size_between(1, 8);
    std::vector<Rat> weights;
    for (int i = 0; i < m; ++i) weights.push_back(gen.small_rational());
    AtomSystem sys = build_max(weights);
    for (SubsetMask a = 0; a < (1u << m); ++a) {
      Rat expected = 0;
      for (int i = 0; i < m; ++i) {
        if ((a & (1u << i)) && weights[i] > expected) expected = weights[i];
      }
      CHECK(atom_entropy(sys, a) == expected);
    }
  }
}

TEST_CASE("facility location construction matches the oracle") {
  FacilityLocationSpec spec{{{Rat(3), Rat(1)}, {Rat(0), Rat(2)}}};
  AtomSystem sys = build_facility_location(spec);
  CHECK(atom_entropy(sys, 0b11) == 5);
  for (SubsetMask a = 0; a < 4; ++a) {
    CHECK(atom_entropy(sys, a) == facility_location_eval(spec, a));
  }

  FacilityLocationSpec single_client{{{Rat(3), Rat(1)}}};
  CHECK(atom_entropy(build_facility_location(single_client), 0b10) == 1);

  FacilityLocationSpec zeros{{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}};
  AtomSystem zero_sys = build_facility_location(zeros);
  for (SubsetMask a = 0; a < 4; ++a) CHECK(atom_entropy(zero_sys, a) == 0);
}

TEST_CASE("facility location values do not depend on the tie-break policy") {
  InstanceGen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    FacilityLocationSpec spec = gen.facility_location(gen.size_between(1, 6));
    // Duplicate a column so ties actually occur.
    if (spec.facility_count() >= 2) {
      for (auto& row : spec.similarity) row[0] = row[1];
    }
    AtomSystem ascending = build_facility_location(spec, TieBreak::kIndexAscending);
    AtomSystem descending = build_facility_location(spec, TieBreak::kIndexDescending);
    for (SubsetMask a = 0; a < (1u << spec.facility_count()); ++a) {
      CHECK(atom_entropy(ascending, a) == atom_entropy(descending, a));
    }
  }
}

TEST_CASE("graph cut construction splits edges into shared and private atoms") {
  GraphCutSpec quarter{{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, Rat(1, 4)};
  AtomSystem sys = build_graph_cut(quarter);
  CHECK(atom_entropy(sys, 0b01) == 1);            // 1/2 shared + 1/2 private
  CHECK(atom_entropy(sys, 0b11) == Rat(3, 2));    // 2(1 - 1/4)

  GraphCutSpec zero_lambda{{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, Rat(0)};
  AtomSystem modular_sys = build_graph_cut(zero_lambda);
  for (const Atom& atom : modular_sys.atoms) {
    CHECK(atom.provenance.find("shared") == std::string::npos);
  }
  CHECK(atom_entropy(modular_sys, 0b11) == 2);

  GraphCutSpec half{{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, Rat(1, 2)};
  AtomSystem shared_only = build_graph_cut(half);
  for (const Atom& atom : shared_only.atoms) {
    CHECK(atom.provenance.find("private") == std::string::npos);
  }
  CHECK(atom_entropy(shared_only, 0b11) == 1);

  CHECK_THROWS_AS(build_graph_cut(GraphCutSpec{{{Rat(0)}}, Rat(3, 5)}), usage_error);
}

TEST_CASE("graph cut at lambda zero is the modular weighted-degree system") {
  InstanceGen gen(29);
  for (int trial = 0; trial < 10; ++trial) {
    GraphCutSpec spec = gen.graph_cut(gen.size_between(1, 6));
    spec.lambda = 0;
    const int n = static_cast<int>(spec.similarity.size());
    std::vector<Rat> degrees(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) degrees[i] += spec.similarity[i][j];
    }
    AtomSystem cut = build_graph_cut(spec);
    AtomSystem modular = build_modular(degrees);
    for (SubsetMask a = 0; a < (1u << n); ++a) {
      CHECK(atom_entropy(cut, a) == atom_entropy(modular, a));
    }
  }
}

TEST_CASE("every atom construction matches its family oracle exhaustively") {
  InstanceGen gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.size_between(1, 12);
    {
      CoverageSpec spec = gen.coverage(n);
      AtomSystem sys = build_coverage(spec);
      for (SubsetMask a = 0; a < (1u << n); ++a) {
        CHECK(atom_entropy(sys, a) == coverage_eval(spec, a));
      }
    }
    {
      FacilityLocationSpec spec = gen.facility_location(std::min(n, 8));
      AtomSystem sys = build_facility_location(spec);
      for (SubsetMask a = 0; a < (1u << spec.facility_count()); ++a) {
        CHECK(atom_entropy(sys, a) == facility_location_eval(spec, a));
      }
    }
    {
      GraphCutSpec spec = gen.graph_cut(std::min(n, 8));
      AtomSystem sys = build_graph_cut(spec);
      const int cut_n = static_cast<int>(spec.similarity.size());
      for (SubsetMask a = 0; a < (1u << cut_n); ++a) {
        CHECK(atom_entropy(sys, a) == graph_cut_eval(spec, a));
      }
    }
  }
}

TEST_CASE("atom systems are polymatroids") {
  InstanceGen gen(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = gen.size_between(1, 8);
    CHECK(check_polymatroid(tabulate(build_coverage(gen.coverage(n)))).ok());
    CHECK(check_polymatroid(tabulate(build_facility_location(gen.facility_location(n)))).ok());
    CHECK(check_polymatroid(tabulate(build_graph_cut(gen.graph_cut(n)))).ok());
  }
}
