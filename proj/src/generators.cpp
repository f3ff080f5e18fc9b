#include "hamming/generators.hpp"

#include <vector>

namespace hamming::families {

WeightedGraph path(int vertex_count, Weight weight) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < vertex_count; ++v) edges.push_back({v, v + 1, weight});
  return WeightedGraph(vertex_count, std::move(edges));
}

WeightedGraph cycle(int vertex_count, Weight weight) {
  std::vector<Edge> edges;
  for (int v = 0; v < vertex_count; ++v) edges.push_back({v, (v + 1) % vertex_count, weight});
  return WeightedGraph(vertex_count, std::move(edges));
}

WeightedGraph complete(int vertex_count, Weight weight) {
  std::vector<Edge> edges;
  for (int u = 0; u < vertex_count; ++u)
    for (int v = u + 1; v < vertex_count; ++v) edges.push_back({u, v, weight});
  return WeightedGraph(vertex_count, std::move(edges));
}

WeightedGraph complete_bipartite(int left, int right, Weight weight) {
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) edges.push_back({u, left + v, weight});
  return WeightedGraph(left + right, std::move(edges));
}

WeightedGraph hypercube(int dimension) {
  const int n = 1 << dimension;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < dimension; ++b) {
      const int v = u ^ (1 << b);
      if (u < v) edges.push_back({u, v, 1});
    }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph star(int leaves, Weight weight) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v, weight});
  return WeightedGraph(leaves + 1, std::move(edges));
}

}  // namespace hamming::families
