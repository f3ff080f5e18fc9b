#pragma once

#include <vector>

#include "hamming/graph.hpp"

namespace hamming {

// E(G) split into equivalence classes of the transitive closure of the
// Djokovic-Winkler relation. Classes hold edge indices in ascending order
// and are listed in order of their smallest edge.
struct EdgeClassPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // edge index -> class index

  int size() const noexcept { return static_cast<int>(classes.size()); }
};

// [d(u,a) - d(u,b)] - [d(v,a) - d(v,b)] with the stored orientations of
// both edges.
Weight theta_expression(const WeightedGraph& g, const Edge& uv, const Edge& ab);

// Djokovic-Winkler relation. Edges are looked up by endpoints (either
// order); throws std::invalid_argument if either is not an edge of g.
bool theta_related(const WeightedGraph& g, Vertex u, Vertex v, Vertex a, Vertex b);
bool theta_related(const WeightedGraph& g, int edge1, int edge2);

// Throws NotMinimalError on a non-minimal graph.
EdgeClassPartition theta_classes(const WeightedGraph& g);

}  // namespace hamming
