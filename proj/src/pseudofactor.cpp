#include "hamming/pseudofactor.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "hamming/union_find.hpp"

namespace hamming {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_well_formed(const WeightedGraph& g, const Pseudofactorization& pf) {
  if (static_cast<int>(pf.pi.size()) != g.vertex_count()) {
    throw std::invalid_argument("pseudofactorization: pi does not cover every vertex");
  }
  for (const auto& tuple : pf.pi) {
    if (static_cast<int>(tuple.size()) != pf.factor_count()) {
      throw std::invalid_argument("pseudofactorization: tuple length != factor count");
    }
    for (int i = 0; i < pf.factor_count(); ++i) {
      if (tuple[i] < 0 || tuple[i] >= pf.factors[i].vertex_count()) {
        throw std::invalid_argument("pseudofactorization: factor vertex out of range");
      }
    }
  }
}

Weight product_distance(const Pseudofactorization& pf, Vertex u, Vertex v) {
  Weight sum = 0;
  for (int i = 0; i < pf.factor_count(); ++i)
    sum += pf.factors[i].distance(pf.pi[u][i], pf.pi[v][i]);
  return sum;
}

}  // namespace

Pseudofactorization pseudofactorize(const WeightedGraph& g) {
  Pseudofactorization pf;
  pf.classes = theta_classes(g);
  const int n = g.vertex_count();
  const int k = pf.classes.size();
  pf.pi.assign(n, std::vector<Vertex>(k, 0));

  for (int j = 0; j < k; ++j) {
    DisjointSets components(n);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (pf.classes.class_of[e] != j) components.unite(g.edge(e).u, g.edge(e).v);
    }
    const auto groups = components.groups();
    for (int c = 0; c < static_cast<int>(groups.size()); ++c)
      for (Vertex u : groups[c]) pf.pi[u][j] = c;

    std::map<std::pair<Vertex, Vertex>, Weight> contracted;
    for (int e : pf.classes.classes[j]) {
      const Edge& edge = g.edge(e);
      Vertex a = pf.pi[edge.u][j];
      Vertex b = pf.pi[edge.v][j];
      if (a == b) {
        throw std::logic_error("pseudofactorize: edge " + pair_text(edge.u, edge.v) +
                               " contracts to a self-loop in factor " + std::to_string(j));
      }
      if (a > b) std::swap(a, b);
      auto [it, inserted] = contracted.emplace(std::pair{a, b}, edge.weight);
      if (!inserted && it->second != edge.weight) {
        throw std::logic_error("pseudofactorize: contracted edges " + pair_text(a, b) +
                               " in factor " + std::to_string(j) +
                               " disagree in weight (" + std::to_string(it->second) +
                               " vs " + std::to_string(edge.weight) + ")");
      }
    }
    std::vector<Edge> edges;
    edges.reserve(contracted.size());
    for (const auto& [ends, w] : contracted) edges.push_back({ends.first, ends.second, w});
    pf.factors.emplace_back(static_cast<int>(groups.size()), std::move(edges));
  }

  const PseudofactorVerdict verdict = verify_pseudofactorization(g, pf);
  if (!verdict.passed()) {
    throw std::logic_error("pseudofactorize: constructed factorization violates condition " +
                           std::to_string(verdict.first_violation()->condition) + ": " +
                           verdict.first_violation()->detail);
  }
  return pf;
}

PseudofactorVerdict verify_pseudofactorization(const WeightedGraph& g,
                                               const Pseudofactorization& pf) {
  require_well_formed(g, pf);
  PseudofactorVerdict verdict;
  const int n = g.vertex_count();
  const int k = pf.factor_count();

  // 1. isometry
  for (Vertex u = 0; u < n && verdict.violations.empty(); ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Weight dp = product_distance(pf, u, v);
      if (dp != g.distance(u, v)) {
        verdict.violations.push_back(
            {1,
             "d_G" + pair_text(u, v) + " = " + std::to_string(g.distance(u, v)) +
                 " but product distance = " + std::to_string(dp),
             std::pair{u, v}, std::nullopt});
        break;
      }
    }
  }

  // 2. edges map to product edges of equal weight
  for (const Edge& e : g.edges()) {
    int differing = 0;
    int coord = -1;
    for (int i = 0; i < k; ++i) {
      if (pf.pi[e.u][i] != pf.pi[e.v][i]) {
        ++differing;
        coord = i;
      }
    }
    std::string problem;
    if (differing != 1) {
      problem = "image differs in " + std::to_string(differing) + " coordinates";
    } else {
      auto w = pf.factors[coord].weight(pf.pi[e.u][coord], pf.pi[e.v][coord]);
      if (!w) {
        problem = "image is not an edge of factor " + std::to_string(coord);
      } else if (*w != e.weight) {
        problem = "factor edge weight " + std::to_string(*w) + " != " +
                  std::to_string(e.weight);
      }
    }
    if (!problem.empty()) {
      verdict.violations.push_back({2, "edge " + pair_text(e.u, e.v) + ": " + problem,
                                    std::pair{e.u, e.v},
                                    differing == 1 ? std::optional<int>(coord) : std::nullopt});
      break;
    }
  }

  // 3. surjectivity
  [&] {
    for (int i = 0; i < k; ++i) {
      std::vector<bool> hit(pf.factors[i].vertex_count(), false);
      for (Vertex u = 0; u < n; ++u) hit[pf.pi[u][i]] = true;
      for (Vertex x = 0; x < static_cast<Vertex>(hit.size()); ++x) {
        if (!hit[x]) {
          verdict.violations.push_back({3,
                                        "vertex " + std::to_string(x) + " of factor " +
                                            std::to_string(i) + " is not in the image",
                                        std::nullopt, i});
          return;
        }
      }
    }
  }();

  // 4. every factor edge is the image of a graph edge
  std::vector<std::vector<bool>> covered(k);
  for (int i = 0; i < k; ++i) covered[i].assign(pf.factors[i].edge_count(), false);
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < k; ++i) {
      if (auto idx = pf.factors[i].edge_index(pf.pi[e.u][i], pf.pi[e.v][i]))
        covered[i][*idx] = true;
    }
  }
  [&] {
    for (int i = 0; i < k; ++i) {
      for (int fe = 0; fe < pf.factors[i].edge_count(); ++fe) {
        if (covered[i][fe]) continue;
        const Edge& edge = pf.factors[i].edge(fe);
        verdict.violations.push_back({4,
                                      "edge " + pair_text(edge.u, edge.v) + " of factor " +
                                          std::to_string(i) + " is not the image of any edge",
                                      std::pair{edge.u, edge.v}, i});
        return;
      }
    }
  }();

  verdict.factor_irreducible.reserve(k);
  for (const WeightedGraph& f : pf.factors)
    verdict.factor_irreducible.push_back(f.is_minimal() && is_irreducible(f));
  return verdict;
}

bool is_irreducible(const WeightedGraph& g) { return theta_classes(g).size() <= 1; }

std::vector<Weight> project_path_lengths(const WeightedGraph& g,
                                         const Pseudofactorization& pf,
                                         std::span<const Vertex> path) {
  if (path.empty()) throw std::invalid_argument("project_path_lengths: empty path");
  if (static_cast<int>(pf.classes.class_of.size()) != g.edge_count()) {
    throw std::invalid_argument("project_path_lengths: pseudofactorization has no edge classes");
  }
  for (Vertex v : path) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("project_path_lengths: vertex out of range");
  }
  std::vector<Weight> lengths(pf.factor_count(), 0);
  for (std::size_t s = 1; s < path.size(); ++s) {
    auto idx = g.edge_index(path[s - 1], path[s]);
    if (!idx) {
      throw std::invalid_argument("project_path_lengths: " + pair_text(path[s - 1], path[s]) +
                                  " is not an edge");
    }
    lengths[pf.classes.class_of[*idx]] += g.edge(*idx).weight;
  }
  return lengths;
}

}  // namespace hamming
