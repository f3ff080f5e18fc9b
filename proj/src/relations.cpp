#include "hamming/relations.hpp"

#include <stdexcept>
#include <string>

#include "hamming/errors.hpp"
#include "hamming/union_find.hpp"

namespace hamming {

namespace {

int require_edge(const WeightedGraph& g, Vertex a, Vertex b) {
  if (auto idx = g.edge_index(a, b)) return *idx;
  throw std::invalid_argument("{" + std::to_string(a) + "," + std::to_string(b) +
                              "} is not an edge of the graph");
}

void require_minimal(const WeightedGraph& g) {
  if (g.is_minimal()) return;
  const Edge e = non_tight_edges(g).front();
  throw NotMinimalError(e.u, e.v);
}

}  // namespace

Weight theta_expression(const WeightedGraph& g, const Edge& uv, const Edge& ab) {
  const auto& d = g.distances();
  return (d(uv.u, ab.u) - d(uv.u, ab.v)) - (d(uv.v, ab.u) - d(uv.v, ab.v));
}

bool theta_related(const WeightedGraph& g, Vertex u, Vertex v, Vertex a, Vertex b) {
  return theta_related(g, require_edge(g, u, v), require_edge(g, a, b));
}

bool theta_related(const WeightedGraph& g, int edge1, int edge2) {
  if (edge1 < 0 || edge1 >= g.edge_count() || edge2 < 0 || edge2 >= g.edge_count()) {
    throw std::invalid_argument("edge index out of range");
  }
  return theta_expression(g, g.edge(edge1), g.edge(edge2)) != 0;
}

EdgeClassPartition theta_classes(const WeightedGraph& g) {
  require_minimal(g);
  const int m = g.edge_count();
  DisjointSets sets(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (sets.same(i, j)) continue;
      if (theta_expression(g, g.edge(i), g.edge(j)) != 0) sets.unite(i, j);
    }
  }
  EdgeClassPartition out;
  out.classes = sets.groups();
  out.class_of.assign(m, -1);
  for (int c = 0; c < out.size(); ++c)
    for (int e : out.classes[c]) out.class_of[e] = c;
  return out;
}

}  // namespace hamming
