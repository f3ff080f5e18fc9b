#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamming {

using Vertex = int;
using Weight = std::int64_t;

// Undirected weighted edge. Endpoints are stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Dense symmetric |V| x |V| matrix of shortest-path distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n, Weight fill = 0)
      : n_(n), d_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const noexcept { return n_; }
  Weight operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  Weight& operator()(Vertex u, Vertex v) { return d_[index(u, v)]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_ = 0;
  std::vector<Weight> d_;
};

// Exact integer shortest-path distances. Throws DisconnectedGraphError naming
// the first vertex pair (in row-major order) with no connecting path.
DistanceMatrix all_pairs_distances(int vertex_count, std::span<const Edge> edges);

// Connected, simple, positively weighted undirected graph on vertices
// 0..n-1. Immutable; the distance matrix is computed at construction.
// Edges are kept sorted by (u, v) and edge indices refer to that order.
class WeightedGraph {
 public:
  // K1.
  WeightedGraph();
  WeightedGraph(int vertex_count, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }

  std::optional<int> edge_index(Vertex a, Vertex b) const;
  std::optional<Weight> weight(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  // Edge indices incident to v.
  std::span<const int> incident_edges(Vertex v) const { return incidence_.at(v); }

  Weight distance(Vertex u, Vertex v) const { return dist_(u, v); }
  const DistanceMatrix& distances() const noexcept { return dist_; }

  bool is_minimal() const noexcept { return minimal_; }
  bool is_unweighted() const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find_label(const std::string& label) const;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<int> edge_lookup_;  // n*n, -1 where absent
  std::vector<std::vector<int>> incidence_;
  DistanceMatrix dist_;
  bool minimal_ = true;
};

inline const DistanceMatrix& all_pairs_distances(const WeightedGraph& g) {
  return g.distances();
}

// True iff every edge weight equals the distance between its endpoints.
inline bool is_minimal(const WeightedGraph& g) { return g.is_minimal(); }

// Edges whose weight exceeds the distance between their endpoints.
std::vector<Edge> non_tight_edges(const WeightedGraph& g);

// Drops every non-tight edge. Distances are unchanged and the result is
// minimal. Labels are preserved.
WeightedGraph minimalize(const WeightedGraph& g);

struct ProductGraph {
  std::vector<WeightedGraph> factors;
  WeightedGraph graph;
  // tuples[v][i] is the factor-i vertex of product vertex v.
  std::vector<std::vector<Vertex>> tuples;
};

// Cartesian product. Product vertices enumerate factor-vertex tuples in
// row-major order (the last factor varies fastest). Throws
// std::invalid_argument on an empty factor list.
ProductGraph cartesian_product(std::span<const WeightedGraph> factors);

}  // namespace hamming
