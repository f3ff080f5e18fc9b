#include <doctest.h>

#include <random>

#include "hamming/errors.hpp"
#include "hamming/relations.hpp"
#include "support.hpp"

using namespace hamming;
using namespace hamming::testing;

namespace {

std::set<std::set<int>> as_sets(const EdgeClassPartition& p) {
  std::set<std::set<int>> out;
  for (const auto& c : p.classes) out.insert(std::set<int>(c.begin(), c.end()));
  return out;
}

}  // namespace

TEST_SUITE("relations") {

TEST_CASE("theta on C4") {
  // vertices 0..3 in cycle order; e01 and e23 are opposite
  const auto c4 = families::cycle(4);
  const Edge e01 = c4.edge(*c4.edge_index(0, 1));
  const Edge e23 = c4.edge(*c4.edge_index(2, 3));
  const Edge e12 = c4.edge(*c4.edge_index(1, 2));
  CHECK(theta_expression(c4, e01, e23) == 2);
  CHECK(theta_related(c4, 0, 1, 2, 3));
  CHECK(theta_expression(c4, e01, e12) == 0);
  CHECK_FALSE(theta_related(c4, 0, 1, 1, 2));
  CHECK(theta_related(c4, 1, 0, 3, 2));  // endpoint order does not matter
}

TEST_CASE("theta rejects non-edges") {
  const auto c4 = families::cycle(4);
  CHECK_THROWS_AS(theta_related(c4, 0, 2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(theta_related(c4, 0, 17), std::invalid_argument);
}

TEST_CASE("theta is reflexive and symmetric") {
  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_minimal_graph(rng, 3 + trial % 5, 0.5, 3);
    if (g.edge_count() > 20) continue;
    for (int i = 0; i < g.edge_count(); ++i) {
      CHECK(theta_related(g, i, i));
      for (int j = 0; j < g.edge_count(); ++j) CHECK(theta_related(g, i, j) == theta_related(g, j, i));
    }
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("theta_classes examples") {
  SUBCASE("C4: two classes of opposite edges") {
    const auto c4 = families::cycle(4);
    const auto p = theta_classes(c4);
    REQUIRE(p.size() == 2);
    const int e01 = *c4.edge_index(0, 1), e23 = *c4.edge_index(2, 3);
    const int e12 = *c4.edge_index(1, 2), e03 = *c4.edge_index(0, 3);
    CHECK(p.class_of[e01] == p.class_of[e23]);
    CHECK(p.class_of[e12] == p.class_of[e03]);
    CHECK(p.class_of[e01] != p.class_of[e12]);
  }
  SUBCASE("K3: one class") { CHECK(theta_classes(families::complete(3)).size() == 1); }
  SUBCASE("P3: two singletons") {
    const auto p = theta_classes(families::path(3));
    CHECK(p.classes == std::vector<std::vector<int>>{{0}, {1}});
  }
  SUBCASE("K1: no classes") { CHECK(theta_classes(WeightedGraph()).size() == 0); }
}

TEST_CASE("theta_classes requires a minimal graph") {
  CHECK_THROWS_AS(theta_classes(triangle(1, 1, 3)), NotMinimalError);
}

TEST_CASE("classes are indexed by their smallest edge") {
  for (const auto& [name, g] : minimal_corpus()) {
    CAPTURE(name);
    const auto p = theta_classes(g);
    for (int c = 1; c < p.size(); ++c) CHECK(p.classes[c - 1].front() < p.classes[c].front());
    for (int e = 0; e < g.edge_count(); ++e) CHECK(std::count(p.classes[p.class_of[e]].begin(), p.classes[p.class_of[e]].end(), e) == 1);
  }
}

TEST_CASE("theta_classes matches components of the theta graph") {
  for (const auto& [name, g] : minimal_corpus()) {
    CAPTURE(name);
    CHECK(as_sets(theta_classes(g)) == theta_components_oracle(g));
  }
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = random_minimal_graph(rng, 2 + trial % 7, 0.35, 4);
    CHECK(as_sets(theta_classes(g)) == theta_components_oracle(g));
  }
}

TEST_CASE("partial cubes: even cycles and trees") {
  for (int k = 2; k <= 5; ++k) {
    const auto p = theta_classes(families::cycle(2 * k));
    CHECK(p.size() == k);
    for (const auto& c : p.classes) CHECK(c.size() == 2);
  }
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto tree = random_minimal_graph(rng, 2 + trial, 0.0, 1);
    const auto p = theta_classes(tree);
    CHECK(p.size() == tree.edge_count());
  }
}

}  // TEST_SUITE
