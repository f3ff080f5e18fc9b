#include "hamming/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hamming/errors.hpp"

namespace hamming {

DistanceMatrix all_pairs_distances(int vertex_count, std::span<const Edge> edges) {
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  const int n = vertex_count;
  DistanceMatrix d(n, kInf);
  for (Vertex v = 0; v < n; ++v) d(v, v) = 0;
  for (const Edge& e : edges) {
    d(e.u, e.v) = std::min(d(e.u, e.v), e.weight);
    d(e.v, e.u) = d(e.u, e.v);
  }
  // Floyd-Warshall; graphs here have at most a few hundred vertices.
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      const Weight dik = d(i, k);
      if (dik == kInf) continue;
      for (Vertex j = 0; j < n; ++j) {
        const Weight through = dik + d(k, j);
        if (through < d(i, j)) d(i, j) = through;
      }
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (d(i, j) >= kInf) throw DisconnectedGraphError(i, j);
    }
  }
  return d;
}

WeightedGraph::WeightedGraph() : WeightedGraph(1, {}) {}

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 1) throw GraphError("graph must have at least one vertex");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  } else if (static_cast<int>(labels_.size()) != n_) {
    throw GraphError("label count does not match vertex count");
  }

  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw GraphError("edge endpoint out of range: {" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + "}");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.weight < 1) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has non-positive weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());

  edge_lookup_.assign(static_cast<std::size_t>(n_) * n_, -1);
  incidence_.assign(n_, {});
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    auto& slot = edge_lookup_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (slot != -1) {
      throw GraphError("parallel edges between " + std::to_string(e.u) + " and " +
                       std::to_string(e.v));
    }
    slot = i;
    edge_lookup_[static_cast<std::size_t>(e.v) * n_ + e.u] = i;
    incidence_[e.u].push_back(i);
    incidence_[e.v].push_back(i);
  }

  dist_ = all_pairs_distances(n_, edges_);
  minimal_ = std::all_of(edges_.begin(), edges_.end(),
                         [&](const Edge& e) { return e.weight == dist_(e.u, e.v); });
}

std::optional<int> WeightedGraph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  const int idx = edge_lookup_[static_cast<std::size_t>(a) * n_ + b];
  if (idx < 0) return std::nullopt;
  return idx;
}

std::optional<Weight> WeightedGraph::weight(Vertex a, Vertex b) const {
  if (auto idx = edge_index(a, b)) return edges_[*idx].weight;
  return std::nullopt;
}

bool WeightedGraph::is_unweighted() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight == 1; });
}

std::optional<Vertex> WeightedGraph::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::vector<Edge> non_tight_edges(const WeightedGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.weight > g.distance(e.u, e.v)) out.push_back(e);
  }
  return out;
}

WeightedGraph minimalize(const WeightedGraph& g) {
  if (g.is_minimal()) return g;
  // A non-tight edge lies on no shortest path, so one pass against the
  // original distance matrix suffices.
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.weight == g.distance(e.u, e.v)) kept.push_back(e);
  }
  return WeightedGraph(g.vertex_count(), std::move(kept), g.labels());
}

ProductGraph cartesian_product(std::span<const WeightedGraph> factors) {
  if (factors.empty()) throw std::invalid_argument("cartesian_product: no factors");
  ProductGraph out;
  out.factors.assign(factors.begin(), factors.end());
  if (factors.size() == 1) {
    out.graph = factors.front();
    for (Vertex v = 0; v < factors.front().vertex_count(); ++v) out.tuples.push_back({v});
    return out;
  }

  const std::size_t k = factors.size();
  std::vector<int> stride(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) stride[i] = stride[i + 1] * factors[i + 1].vertex_count();
  const int n = stride[0] * factors[0].vertex_count();

  out.tuples.resize(n);
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) {
    std::vector<Vertex> t(k);
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) {
      t[i] = (v / stride[i]) % factors[i].vertex_count();
      if (i) label += ',';
      label += factors[i].label(t[i]);
    }
    label += ')';
    out.tuples[v] = std::move(t);
    labels[v] = std::move(label);
  }

  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex vi = out.tuples[v][i];
      for (const Edge& fe : factors[i].edges()) {
        if (fe.u != vi) continue;
        const int w = v + (fe.v - fe.u) * stride[i];
        edges.push_back({v, w, fe.weight});
      }
    }
  }
  out.graph = WeightedGraph(n, std::move(edges), std::move(labels));
  return out;
}

}  // namespace hamming
