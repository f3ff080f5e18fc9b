#pragma once

// Shared corpus, random generators and independent oracles for the unit and
// acceptance suites. Nothing here calls into the code paths it is used to
// check: distances come from path enumeration, edge classes from connected
// components of the full theta graph, and embeddability from a column-wise
// search over raw codes.

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamming/embedding.hpp"
#include "hamming/errors.hpp"
#include "hamming/generators.hpp"
#include "hamming/graph.hpp"
#include "hamming/solver.hpp"

namespace hamming::testing {

inline WeightedGraph graph_of(int n, std::vector<Edge> edges) {
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph triangle(Weight a, Weight b, Weight c) {
  // edges 0-1 (a), 1-2 (b), 0-2 (c)
  return graph_of(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

inline WeightedGraph product_of(std::vector<WeightedGraph> factors) {
  return cartesian_product(factors).graph;
}

struct NamedGraph {
  std::string name;
  WeightedGraph graph;
};

// Minimal graphs used across suites.
inline std::vector<NamedGraph> minimal_corpus() {
  using namespace families;
  return {
      {"K1", WeightedGraph()},
      {"K2", complete(2)},
      {"K2(w3)", complete(2, 3)},
      {"P3", path(3)},
      {"P4", path(4)},
      {"star3", star(3)},
      {"C4", cycle(4)},
      {"C5", cycle(5)},
      {"C6", cycle(6)},
      {"C7", cycle(7)},
      {"K3", complete(3)},
      {"K4", complete(4)},
      {"K4(w2)", complete(4, 2)},
      {"K4(w4)", complete(4, 4)},
      {"K2,3", complete_bipartite(2, 3)},
      {"Q3", hypercube(3)},
      {"triangle(1,1,2)", triangle(1, 1, 2)},
      {"K2(w4)xK2(w2)", product_of({complete(2, 4), complete(2, 2)})},
      {"K3xK2", product_of({complete(3), complete(2)})},
      {"K4(w2)xK2(w2)", product_of({complete(4, 2), complete(2, 2)})},
      {"P3xK3", product_of({path(3), complete(3)})},
  };
}

// ---------------------------------------------------------------------------
// Distances by exhaustive simple-path enumeration.

inline std::vector<std::vector<Weight>> enumerate_path_distances(const WeightedGraph& g) {
  const int n = g.vertex_count();
  constexpr Weight kInf = std::numeric_limits<Weight>::max();
  std::vector<std::vector<Weight>> best(n, std::vector<Weight>(n, kInf));
  std::vector<bool> on_path(n, false);
  std::function<void(Vertex, Vertex, Weight)> walk = [&](Vertex start, Vertex at, Weight len) {
    best[start][at] = std::min(best[start][at], len);
    on_path[at] = true;
    for (int e : g.incident_edges(at)) {
      const Edge& edge = g.edge(e);
      const Vertex next = edge.u == at ? edge.v : edge.u;
      if (!on_path[next]) walk(start, next, len + edge.weight);
    }
    on_path[at] = false;
  };
  for (Vertex s = 0; s < n; ++s) walk(s, s, 0);
  return best;
}

// All shortest paths from u to v as vertex sequences.
inline std::vector<std::vector<Vertex>> shortest_paths(const WeightedGraph& g, Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{u};
  std::function<void(Vertex, Weight)> walk = [&](Vertex at, Weight len) {
    if (at == v) {
      if (len == g.distance(u, v)) out.push_back(path);
      return;
    }
    for (int e : g.incident_edges(at)) {
      const Edge& edge = g.edge(e);
      const Vertex next = edge.u == at ? edge.v : edge.u;
      if (len + edge.weight + g.distance(next, v) != g.distance(u, v)) continue;
      path.push_back(next);
      walk(next, len + edge.weight);
      path.pop_back();
    }
  };
  walk(u, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Edge classes as connected components of the theta graph on E(G).

inline std::set<std::set<int>> theta_components_oracle(const WeightedGraph& g) {
  const int m = g.edge_count();
  std::vector<std::vector<int>> adj(m);
  auto d = [&](Vertex a, Vertex b) { return g.distance(a, b); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Edge& x = g.edge(i);
      const Edge& y = g.edge(j);
      if ((d(x.u, y.u) - d(x.u, y.v)) - (d(x.v, y.u) - d(x.v, y.v)) != 0) adj[i].push_back(j);
    }
  std::vector<int> comp(m, -1);
  std::set<std::set<int>> out;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::set<int> members;
    std::vector<int> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      const int e = stack.back();
      stack.pop_back();
      members.insert(e);
      for (int f : adj[e])
        if (comp[f] < 0) {
          comp[f] = s;
          stack.push_back(f);
        }
    }
    out.insert(std::move(members));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Raw-code brute force. An embedding is a list of columns, each column a
// symbol per vertex. Columns are drawn from every non-constant symbol
// vector whose symbols are numbered in order of first appearance (this only
// removes renamings of one column), appended in non-decreasing index order
// while no pair exceeds its graph distance. Returns the number of distinct
// column multisets that realize the metric, stopping at `stop_after`.

struct RawSearchResult {
  std::uint64_t solutions = 0;
  std::uint64_t nodes = 0;
};

inline RawSearchResult raw_code_search(const WeightedGraph& g, Target target,
                                       std::uint64_t stop_after = std::numeric_limits<std::uint64_t>::max()) {
  const int n = g.vertex_count();
  const int max_symbols = target == Target::hypercube ? 2 : n;
  std::vector<std::vector<int>> columns;
  std::vector<int> col(n, 0);
  std::function<void(int, int)> gen = [&](int v, int used) {
    if (v == n) {
      if (used >= 2) columns.push_back(col);
      return;
    }
    for (int s = 0; s <= std::min(used, max_symbols - 1); ++s) {
      col[v] = s;
      gen(v + 1, std::max(used, s + 1));
    }
  };
  if (n >= 2) gen(1, 1);

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Weight> have(pairs.size(), 0);

  RawSearchResult result;
  std::function<void(std::size_t)> dfs = [&](std::size_t first) {
    ++result.nodes;
    bool done = true;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (have[p] != g.distance(pairs[p].first, pairs[p].second)) done = false;
    if (done) {
      ++result.solutions;
      return;
    }
    for (std::size_t c = first; c < columns.size() && result.solutions < stop_after; ++c) {
      bool fits = true;
      for (std::size_t p = 0; p < pairs.size() && fits; ++p) {
        const auto [u, v] = pairs[p];
        if (columns[c][u] != columns[c][v] && have[p] + 1 > g.distance(u, v)) fits = false;
      }
      if (!fits) continue;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        have[p] += columns[c][pairs[p].first] != columns[c][pairs[p].second];
      dfs(c);
      for (std::size_t p = 0; p < pairs.size(); ++p)
        have[p] -= columns[c][pairs[p].first] != columns[c][pairs[p].second];
    }
  };
  dfs(0);
  return result;
}

// ---------------------------------------------------------------------------
// Small-graph enumeration.

// Canonical key of a weighted graph on <= 6 vertices under vertex
// relabeling: the lexicographically smallest weighted adjacency matrix.
inline std::vector<Weight> canonical_key(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Weight> best;
  do {
    std::vector<Weight> key(static_cast<std::size_t>(n) * n, 0);
    for (const Edge& e : g.edges()) {
      key[perm[e.u] * n + perm[e.v]] = e.weight;
      key[perm[e.v] * n + perm[e.u]] = e.weight;
    }
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every connected simple graph on n vertices, one per isomorphism class,
// with weights drawn from 1..max_weight, filtered to minimal graphs whose
// distances are all <= max_distance.
inline std::vector<WeightedGraph> all_minimal_graphs(int n, Weight max_weight, Weight max_distance) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::map<std::vector<Weight>, WeightedGraph> seen;
  std::vector<Weight> w(slots.size(), 0);  // 0 = no edge
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (w[s] > 0) edges.push_back({slots[s].first, slots[s].second, w[s]});
      try {
        WeightedGraph g(n, std::move(edges));
        if (!g.is_minimal()) return;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (g.distance(a, b) > max_distance) return;
        seen.emplace(canonical_key(g), std::move(g));
      } catch (const DisconnectedGraphError&) {
      }
      return;
    }
    for (Weight x = 0; x <= max_weight; ++x) {
      w[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::vector<WeightedGraph> out;
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

// Random connected graph: random spanning tree plus extra edges, random
// weights, then minimalized.
inline WeightedGraph random_minimal_graph(std::mt19937& rng, int n, double extra_edge_p,
                                          Weight max_weight) {
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v, weight(rng)});
    used.insert({u, v});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used.count({u, v}) && coin(rng) < extra_edge_p) edges.push_back({u, v, weight(rng)});
  return minimalize(WeightedGraph(n, std::move(edges)));
}

// ---------------------------------------------------------------------------
// Embedding manipulation.

// Product embedding assembled directly from factor embeddings and the
// product tuples (no pseudofactorization involved).
inline HammingEmbedding product_embedding(const ProductGraph& product,
                                          const std::vector<HammingEmbedding>& factor_embeddings) {
  std::vector<int> sizes;
  for (const auto& e : factor_embeddings)
    sizes.insert(sizes.end(), e.alphabet_sizes().begin(), e.alphabet_sizes().end());
  std::vector<std::vector<int>> codes(product.graph.vertex_count());
  for (Vertex v = 0; v < product.graph.vertex_count(); ++v)
    for (std::size_t i = 0; i < factor_embeddings.size(); ++i) {
      const auto c = factor_embeddings[i].code(product.tuples[v][i]);
      codes[v].insert(codes[v].end(), c.begin(), c.end());
    }
  return HammingEmbedding(std::move(sizes), codes);
}

// Random coordinate permutation plus a random bijective renaming of each
// coordinate's alphabet.
inline HammingEmbedding scramble(const HammingEmbedding& e, std::mt19937& rng) {
  const int m = e.dimension();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<int>> rename(m);
  std::vector<int> sizes(m);
  for (int j = 0; j < m; ++j) {
    sizes[j] = e.alphabet_sizes()[order[j]];
    rename[j].resize(sizes[j]);
    std::iota(rename[j].begin(), rename[j].end(), 0);
    std::shuffle(rename[j].begin(), rename[j].end(), rng);
  }
  std::vector<std::vector<int>> codes(e.vertex_count(), std::vector<int>(m));
  for (Vertex v = 0; v < e.vertex_count(); ++v)
    for (int j = 0; j < m; ++j) codes[v][j] = rename[j][e.symbol(v, order[j])];
  return HammingEmbedding(std::move(sizes), codes);
}

inline bool all_factors_complete(const std::vector<WeightedGraph>& factors) {
  return std::all_of(factors.begin(), factors.end(), [](const WeightedGraph& f) {
    const int n = f.vertex_count();
    return f.edge_count() == n * (n - 1) / 2;
  });
}

// Small graphs with a hand-built Hamming embedding each, for assembling
// product embeddings with known structure.
struct EmbeddedGraph {
  std::string name;
  WeightedGraph graph;
  HammingEmbedding embedding;
};

inline std::vector<EmbeddedGraph> embedded_pool() {
  using namespace families;
  std::vector<EmbeddedGraph> pool;
  auto complete_repeated = [](int n, int copies) {
    std::vector<std::vector<int>> codes(n, std::vector<int>(copies));
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < copies; ++j) codes[v][j] = v;
    return HammingEmbedding(std::vector<int>(copies, n), codes);
  };
  pool.push_back({"K2", complete(2), complete_repeated(2, 1)});
  pool.push_back({"K2(w2)", complete(2, 2), complete_repeated(2, 2)});
  pool.push_back({"K3", complete(3), complete_repeated(3, 1)});
  pool.push_back({"K3(w2)", complete(3, 2), complete_repeated(3, 2)});
  pool.push_back({"K4", complete(4), complete_repeated(4, 1)});
  pool.push_back({"K4(w2)", complete(4, 2),
                  HammingEmbedding({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}})});
  for (int n : {3, 4}) {
    std::vector<std::vector<int>> codes(n, std::vector<int>(n - 1));
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < n - 1; ++j) codes[v][j] = v > j ? 1 : 0;
    pool.push_back({"P" + std::to_string(n), path(n), HammingEmbedding(std::vector<int>(n - 1, 2), codes)});
  }
  for (int k : {2, 3}) {
    const int n = 2 * k;
    std::vector<std::vector<int>> codes(n, std::vector<int>(k));
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < k; ++j) codes[v][j] = ((v - j - 1 + n) % n) < k ? 1 : 0;
    pool.push_back({"C" + std::to_string(n), cycle(n), HammingEmbedding(std::vector<int>(k, 2), codes)});
  }
  return pool;
}

}  // namespace hamming::testing
