#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "entropic/errors.hpp"
#include "entropic/setfn.hpp"

#include <vector>

using namespace entropic;

namespace {

// Independent union-sum oracle for coverage-style tables: element weights plus
// one cover per ground element, summed over the union of selected covers.
SetFunctionTable coverage_table(const std::vector<Rat>& weights,
                                const std::vector<std::vector<int>>& covers) {
  const int n = static_cast<int>(covers.size());
  std::vector<Rat> values(1u << n);
  for (SubsetMask a = 0; a < values.size(); ++a) {
    std::vector<char> in_union(weights.size(), 0);
    for (int i = 0; i < n; ++i) {
      if (!(a & (1u << i))) continue;
      for (int u : covers[i]) in_union[u] = 1;
    }
    Rat total = 0;
    for (std::size_t u = 0; u < weights.size(); ++u) {
      if (in_union[u]) total += weights[u];
    }
    values[a] = total;
  }
  return make_table(n, values);
}

SetFunctionTable modular_table(const std::vector<Rat>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<Rat> values(1u << n);
  for (SubsetMask a = 0; a < values.size(); ++a) {
    for (int i = 0; i < n; ++i) {
      if (a & (1u << i)) values[a] += weights[i];
    }
  }
  return make_table(n, values);
}

}  // namespace

TEST_CASE("eval looks up stored values and rejects out-of-range masks") {
  SetFunctionTable f = modular_table({Rat(1), Rat(2)});
  CHECK(eval(f, 0) == 0);
  CHECK(eval(f, 0b11) == 3);

  // Coverage example: universe weights (1,2,3), covers {0,1} and {1,2}.
  SetFunctionTable cov = coverage_table({Rat(1), Rat(2), Rat(3)}, {{0, 1}, {1, 2}});
  CHECK(eval(cov, 0b11) == 6);

  CHECK_THROWS_AS(eval(f, 0b100), usage_error);
}

TEST_CASE("make_table validates sizes") {
  CHECK_THROWS_AS(make_table(2, {Rat(0)}), usage_error);
  CHECK_THROWS_AS(make_table(21, {}), usage_error);
  CHECK_THROWS_AS(make_table(-1, {}), usage_error);
  SetFunctionTable empty_ground = make_table(0, {Rat(0)});
  CHECK(eval(empty_ground, 0) == 0);
}

TEST_CASE("check_polymatroid accepts a modular function") {
  PolymatroidReport report = check_polymatroid(modular_table({Rat(1), Rat(1)}));
  CHECK(report.normalized);
  CHECK(report.monotone);
  CHECK(report.submodular);
  CHECK(report.ok());
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("check_polymatroid reports the first submodularity violation") {
  // f({1,2}) = 1 with zero singletons: supermodular, witness (A=empty, 0, 1).
  SetFunctionTable f = make_table(2, {Rat(0), Rat(0), Rat(0), Rat(1)});
  PolymatroidReport report = check_polymatroid(f);
  CHECK(report.normalized);
  CHECK(report.monotone);
  CHECK_FALSE(report.submodular);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->kind == ViolationWitness::Kind::kSubmodularity);
  CHECK(report.witness->subset == 0);
  CHECK(report.witness->i == 0);
  CHECK(report.witness->j == 1);
  CHECK(witness_is_violation(f, *report.witness));
}

TEST_CASE("check_polymatroid reports normalization and monotonicity failures") {
  SetFunctionTable not_normalized = make_table(1, {Rat(1), Rat(1)});
  PolymatroidReport report = check_polymatroid(not_normalized);
  CHECK_FALSE(report.normalized);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->kind == ViolationWitness::Kind::kNormalization);
  CHECK(witness_is_violation(not_normalized, *report.witness));

  SetFunctionTable decreasing = make_table(1, {Rat(0), Rat(-1)});
  report = check_polymatroid(decreasing);
  CHECK_FALSE(report.monotone);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->kind == ViolationWitness::Kind::kMonotonicity);
  CHECK(witness_is_violation(decreasing, *report.witness));
}

TEST_CASE("elemental and lattice submodularity checks agree") {
  std::vector<SetFunctionTable> tables;
  tables.push_back(coverage_table({Rat(1), Rat(2), Rat(3)}, {{0, 1}, {1, 2}, {0}}));
  tables.push_back(modular_table({Rat(1, 2), Rat(1, 3), Rat(2)}));
  tables.push_back(make_table(2, {Rat(0), Rat(0), Rat(0), Rat(1)}));  // not submodular
  tables.push_back(make_table(2, {Rat(0), Rat(2), Rat(2), Rat(3)}));
  tables.push_back(
      make_table(3, {Rat(0), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(3)}));
  for (const SetFunctionTable& f : tables) {
    CHECK(check_polymatroid(f).submodular == is_submodular_lattice(f));
  }
}

TEST_CASE("mutual information on tables") {
  // Coverage with universe {a, b}, unit weights, covers {a} and {a, b}:
  // f({0}) = 1, f({1}) = 2, f(both) = 2.
  SetFunctionTable f = coverage_table({Rat(1), Rat(1)}, {{0}, {0, 1}});
  CHECK(eval(f, 0b01) == 1);
  CHECK(eval(f, 0b10) == 2);
  CHECK(eval(f, 0b11) == 2);
  CHECK(mutual_information(f, 0b01, 0b10) == 1);

  CHECK(mutual_information(f, 0b01, 0) == 0);  // empty second argument

  SetFunctionTable mod = modular_table({Rat(1), Rat(2), Rat(5, 2)});
  for (SubsetMask a = 0; a < 8; ++a) {
    for (SubsetMask b = 0; b < 8; ++b) {
      if (a & b) continue;
      CHECK(mutual_information(mod, a, b) == 0);
    }
  }

  CHECK_THROWS_AS(mutual_information(f, 0b01, 0b01), usage_error);
}

TEST_CASE("conditional gain on tables") {
  SetFunctionTable f = coverage_table({Rat(1), Rat(1)}, {{0}, {0, 1}});
  CHECK(conditional_gain(f, 0b01, 0) == eval(f, 0b01));
  CHECK(conditional_gain(f, 0b01, 0b10) == 0);  // f({0,1}) - f({1}) = 2 - 2

  SetFunctionTable mod = modular_table({Rat(1), Rat(2)});
  CHECK(conditional_gain(mod, 0b01, 0b10) == 1);

  CHECK_THROWS_AS(conditional_gain(f, 0b11, 0b10), usage_error);
}

TEST_CASE("conditional mutual information on tables") {
  // Coverage extended with a third cover {b}.
  SetFunctionTable f = coverage_table({Rat(1), Rat(1)}, {{0}, {0, 1}, {1}});
  CHECK(conditional_mutual_information(f, 0b001, 0b100, 0b010) == 0);

  // With an empty conditioning set it reduces to plain mutual information.
  for (SubsetMask a = 0; a < 8; ++a) {
    for (SubsetMask b = 0; b < 8; ++b) {
      if (a & b) continue;
      CHECK(conditional_mutual_information(f, a, b, 0) == mutual_information(f, a, b));
    }
  }

  SetFunctionTable mod = modular_table({Rat(1), Rat(2), Rat(3)});
  for (SubsetMask a = 0; a < 8; ++a) {
    for (SubsetMask b = 0; b < 8; ++b) {
      for (SubsetMask c = 0; c < 8; ++c) {
        if ((a & b) || (a & c) || (b & c)) continue;
        CHECK(conditional_mutual_information(mod, a, b, c) == 0);
      }
    }
  }

  CHECK_THROWS_AS(conditional_mutual_information(f, 0b001, 0b100, 0b101), usage_error);
}

TEST_CASE("information measures are nonnegative on polymatroids") {
  SetFunctionTable f = coverage_table({Rat(1), Rat(1, 2), Rat(3), Rat(2, 3), Rat(1)},
                                      {{0, 1}, {1, 2}, {2, 3, 4}, {0, 4}});
  REQUIRE(check_polymatroid(f).ok());
  const SubsetMask all = f.ground.full_mask();
  for (SubsetMask a = 0; a <= all; ++a) {
    for (SubsetMask b = 0; b <= all; ++b) {
      if (a & b) continue;
      CHECK(mutual_information(f, a, b) >= 0);
      CHECK(conditional_gain(f, a, b) >= 0);
      for (SubsetMask c = 0; c <= all; ++c) {
        if ((a & c) || (b & c)) continue;
        CHECK(conditional_mutual_information(f, a, b, c) >= 0);
      }
    }
  }
}
