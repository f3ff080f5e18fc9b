#include "hamming/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamming/errors.hpp"
#include "hamming/union_find.hpp"

namespace hamming {

HammingEmbedding::HammingEmbedding(std::vector<int> alphabet_sizes,
                                   const std::vector<std::vector<int>>& codes)
    : n_(static_cast<int>(codes.size())), alphabet_sizes_(std::move(alphabet_sizes)) {
  if (n_ < 1) throw EmbeddingError("embedding has no vertices");
  const int m = dimension();
  for (int j = 0; j < m; ++j) {
    if (alphabet_sizes_[j] < 2) {
      throw EmbeddingError("coordinate " + std::to_string(j) + " has alphabet size " +
                           std::to_string(alphabet_sizes_[j]) + " (< 2)");
    }
  }
  symbols_.reserve(static_cast<std::size_t>(n_) * m);
  for (int u = 0; u < n_; ++u) {
    if (static_cast<int>(codes[u].size()) != m) {
      throw EmbeddingError("code of vertex " + std::to_string(u) + " has length " +
                           std::to_string(codes[u].size()) + ", expected " +
                           std::to_string(m));
    }
    for (int j = 0; j < m; ++j) {
      const int s = codes[u][j];
      if (s < 0 || s >= alphabet_sizes_[j]) {
        throw EmbeddingError("symbol " + std::to_string(s) + " of vertex " +
                             std::to_string(u) + " at coordinate " + std::to_string(j) +
                             " is outside the alphabet");
      }
      symbols_.push_back(s);
    }
  }
  for (int j = 0; j < m; ++j) {
    bool varies = false;
    for (int u = 1; u < n_ && !varies; ++u) varies = symbol(u, j) != symbol(0, j);
    if (!varies) throw EmbeddingError("coordinate " + std::to_string(j) + " is constant");
  }
}

bool HammingEmbedding::is_hypercube() const noexcept {
  return std::all_of(alphabet_sizes_.begin(), alphabet_sizes_.end(),
                     [](int a) { return a == 2; });
}

std::vector<std::vector<int>> HammingEmbedding::codes() const {
  std::vector<std::vector<int>> out(n_);
  for (int u = 0; u < n_; ++u) out[u].assign(code(u).begin(), code(u).end());
  return out;
}

int HammingEmbedding::distance(Vertex u, Vertex v) const {
  int d = 0;
  for (int j = 0; j < dimension(); ++j) d += symbol(u, j) != symbol(v, j);
  return d;
}

HammingEmbedding HammingEmbedding::project(std::span<const int> coords) const {
  HammingEmbedding out;
  out.n_ = n_;
  for (int j : coords) out.alphabet_sizes_.push_back(alphabet_sizes_.at(j));
  out.symbols_.reserve(static_cast<std::size_t>(n_) * coords.size());
  for (int u = 0; u < n_; ++u)
    for (int j : coords) out.symbols_.push_back(symbol(u, j));
  return out;
}

HammingEmbedding strip_constant_digits(const std::vector<int>& alphabet_sizes,
                                       const std::vector<std::vector<int>>& codes) {
  std::vector<int> keep;
  for (int j = 0; j < static_cast<int>(alphabet_sizes.size()); ++j) {
    for (const auto& c : codes) {
      if (j < static_cast<int>(c.size()) && c[j] != codes.front()[j]) {
        keep.push_back(j);
        break;
      }
    }
  }
  std::vector<int> sizes;
  for (int j : keep) sizes.push_back(alphabet_sizes[j]);
  std::vector<std::vector<int>> stripped(codes.size());
  for (std::size_t u = 0; u < codes.size(); ++u) {
    if (codes[u].size() != alphabet_sizes.size()) {
      throw EmbeddingError("code of vertex " + std::to_string(u) + " has the wrong length");
    }
    for (int j : keep) stripped[u].push_back(codes[u][j]);
  }
  return HammingEmbedding(std::move(sizes), stripped);
}

IsometryVerdict verify_isometric(const WeightedGraph& g, const HammingEmbedding& e) {
  if (e.vertex_count() != g.vertex_count()) {
    throw EmbeddingError("embedding covers " + std::to_string(e.vertex_count()) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      const int h = e.distance(u, v);
      if (h != g.distance(u, v)) return {false, u, v, g.distance(u, v), h};
    }
  }
  return {};
}

std::vector<int> coord_diff(const HammingEmbedding& e, Vertex u, Vertex v) {
  std::vector<int> out;
  for (int j = 0; j < e.dimension(); ++j)
    if (e.symbol(u, j) != e.symbol(v, j)) out.push_back(j);
  return out;
}

CoordClassPartition gamma_classes(const WeightedGraph& g, const HammingEmbedding& e) {
  if (e.vertex_count() != g.vertex_count()) {
    throw EmbeddingError("embedding and graph have different vertex counts");
  }
  const int m = e.dimension();
  DisjointSets sets(m);
  std::vector<bool> changes(m, false);
  for (const Edge& edge : g.edges()) {
    const auto diff = coord_diff(e, edge.u, edge.v);
    for (int j : diff) changes[j] = true;
    for (std::size_t s = 1; s < diff.size(); ++s) sets.unite(diff[0], diff[s]);
  }
  for (int j = 0; j < m; ++j) {
    if (!changes[j]) {
      throw EmbeddingError("coordinate " + std::to_string(j) + " changes across no edge");
    }
  }
  CoordClassPartition out;
  out.classes = sets.groups();
  out.class_of.assign(m, -1);
  for (int c = 0; c < out.size(); ++c)
    for (int j : out.classes[c]) out.class_of[j] = c;
  return out;
}

CanonicalPartition canonical_partition(const WeightedGraph& g, const HammingEmbedding& e) {
  CanonicalPartition out;
  out.edge_classes = theta_classes(g);
  if (const auto verdict = verify_isometric(g, e); !verdict) {
    throw EmbeddingError("embedding is not isometric: pair (" + std::to_string(verdict.u) +
                         "," + std::to_string(verdict.v) + ") has graph distance " +
                         std::to_string(verdict.graph_distance) + " but code distance " +
                         std::to_string(verdict.code_distance));
  }
  out.coord_classes = gamma_classes(g, e);

  const int k = out.edge_classes.size();
  out.coord_class_of.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    for (int edge_index : out.edge_classes.classes[i]) {
      const Edge& edge = g.edge(edge_index);
      for (int j : coord_diff(e, edge.u, edge.v)) {
        const int c = out.coord_classes.class_of[j];
        if (out.coord_class_of[i] == -1) {
          out.coord_class_of[i] = c;
        } else if (out.coord_class_of[i] != c) {
          throw std::logic_error("canonical_partition: edge class " + std::to_string(i) +
                                 " meets coordinate classes " +
                                 std::to_string(out.coord_class_of[i]) + " and " +
                                 std::to_string(c));
        }
      }
    }
    if (out.coord_class_of[i] == -1) {
      throw std::logic_error("canonical_partition: no digit changes across edge class " +
                             std::to_string(i));
    }
  }
  if (out.coord_classes.size() != k) {
    throw std::logic_error("canonical_partition: " + std::to_string(k) + " edge classes but " +
                           std::to_string(out.coord_classes.size()) + " coordinate classes");
  }
  std::vector<bool> used(k, false);
  for (int c : out.coord_class_of) {
    if (used[c]) throw std::logic_error("canonical_partition: pairing is not injective");
    used[c] = true;
  }

  for (int i = 0; i < k; ++i) {
    const auto& coords = out.coord_classes.classes[out.coord_class_of[i]];
    out.projection_coords.push_back(coords);
    out.projections.push_back(e.project(coords));
  }
  return out;
}

std::vector<HammingEmbedding> extract_factor_embeddings(const WeightedGraph& g,
                                                        const Pseudofactorization& pf,
                                                        const HammingEmbedding& e) {
  const CanonicalPartition partition = canonical_partition(g, e);
  if (partition.edge_classes.classes != pf.classes.classes) {
    throw std::invalid_argument(
        "extract_factor_embeddings: pseudofactorization is not the canonical one for g");
  }
  std::vector<HammingEmbedding> out;
  for (int i = 0; i < pf.factor_count(); ++i) {
    const WeightedGraph& factor = pf.factors[i];
    const HammingEmbedding& projection = partition.projections[i];
    std::vector<std::vector<int>> codes(factor.vertex_count());
    std::vector<bool> seen(factor.vertex_count(), false);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const Vertex x = pf.project(u, i);
      const auto code = projection.code(u);
      if (!seen[x]) {
        codes[x].assign(code.begin(), code.end());
        seen[x] = true;
      } else if (!std::equal(code.begin(), code.end(), codes[x].begin())) {
        throw std::logic_error("extract_factor_embeddings: preimages of vertex " +
                               std::to_string(x) + " of factor " + std::to_string(i) +
                               " carry different codes");
      }
    }
    HammingEmbedding factor_embedding(
        std::vector<int>(projection.alphabet_sizes().begin(), projection.alphabet_sizes().end()),
        codes);
    if (!verify_isometric(factor, factor_embedding)) {
      throw std::logic_error("extract_factor_embeddings: projection is not isometric on factor " +
                             std::to_string(i));
    }
    out.push_back(std::move(factor_embedding));
  }
  return out;
}

HammingEmbedding compose_embeddings(const WeightedGraph& g, const Pseudofactorization& pf,
                                    std::span<const HammingEmbedding> factor_embeddings) {
  if (static_cast<int>(factor_embeddings.size()) != pf.factor_count()) {
    throw EmbeddingError("compose_embeddings: expected " + std::to_string(pf.factor_count()) +
                         " factor embeddings, got " + std::to_string(factor_embeddings.size()));
  }
  std::vector<int> sizes;
  for (int i = 0; i < pf.factor_count(); ++i) {
    const auto verdict = verify_isometric(pf.factors[i], factor_embeddings[i]);
    if (!verdict) {
      throw EmbeddingError("compose_embeddings: embedding of factor " + std::to_string(i) +
                           " is not isometric at pair (" + std::to_string(verdict.u) + "," +
                           std::to_string(verdict.v) + ")");
    }
    const auto a = factor_embeddings[i].alphabet_sizes();
    sizes.insert(sizes.end(), a.begin(), a.end());
  }
  std::vector<std::vector<int>> codes(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (int i = 0; i < pf.factor_count(); ++i) {
      const auto c = factor_embeddings[i].code(pf.project(u, i));
      codes[u].insert(codes[u].end(), c.begin(), c.end());
    }
  }
  HammingEmbedding out(std::move(sizes), codes);
  if (!verify_isometric(g, out)) {
    throw std::logic_error("compose_embeddings: concatenation is not isometric");
  }
  return out;
}

std::vector<int> canonical_partition_labels(std::span<const int> part_of) {
  std::vector<int> out(part_of.size());
  std::vector<std::pair<int, int>> seen;  // (original id, canonical id)
  for (std::size_t u = 0; u < part_of.size(); ++u) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == part_of[u]; });
    if (it == seen.end()) {
      seen.emplace_back(part_of[u], static_cast<int>(seen.size()));
      out[u] = seen.back().second;
    } else {
      out[u] = it->second;
    }
  }
  return out;
}

EmbeddingMultiset::EmbeddingMultiset(int vertex_count, std::vector<std::vector<int>> partitions)
    : n_(vertex_count) {
  partitions_.reserve(partitions.size());
  for (auto& p : partitions) {
    if (static_cast<int>(p.size()) != n_) {
      throw std::invalid_argument("EmbeddingMultiset: partition has the wrong length");
    }
    auto labels = canonical_partition_labels(p);
    if (*std::max_element(labels.begin(), labels.end()) < 1) {
      throw std::invalid_argument("EmbeddingMultiset: partition with a single part");
    }
    partitions_.push_back(std::move(labels));
  }
  std::sort(partitions_.begin(), partitions_.end());
}

HammingEmbedding EmbeddingMultiset::to_embedding(bool pad_alphabets) const {
  std::vector<int> sizes;
  for (const auto& p : partitions_) sizes.push_back(*std::max_element(p.begin(), p.end()) + 1);
  if (pad_alphabets && !sizes.empty()) {
    std::fill(sizes.begin(), sizes.end(), *std::max_element(sizes.begin(), sizes.end()));
  }
  std::vector<std::vector<int>> codes(n_);
  for (int u = 0; u < n_; ++u)
    for (const auto& p : partitions_) codes[u].push_back(p[u]);
  return HammingEmbedding(std::move(sizes), codes);
}

EmbeddingMultiset to_multiset(const WeightedGraph& g, const HammingEmbedding& e) {
  if (e.vertex_count() != g.vertex_count()) {
    throw EmbeddingError("embedding and graph have different vertex counts");
  }
  std::vector<std::vector<int>> partitions(e.dimension(), std::vector<int>(e.vertex_count()));
  for (int j = 0; j < e.dimension(); ++j)
    for (Vertex u = 0; u < e.vertex_count(); ++u) partitions[j][u] = e.symbol(u, j);
  return EmbeddingMultiset(e.vertex_count(), std::move(partitions));
}

bool equivalent(const WeightedGraph& g, const HammingEmbedding& a, const HammingEmbedding& b) {
  return to_multiset(g, a) == to_multiset(g, b);
}

}  // namespace hamming
