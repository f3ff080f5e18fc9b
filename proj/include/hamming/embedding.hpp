#pragma once

#include <compare>
#include <span>
#include <vector>

#include "hamming/graph.hpp"
#include "hamming/pseudofactor.hpp"
#include "hamming/relations.hpp"

namespace hamming {

// Map from vertices 0..n-1 to strings of m symbols, the symbol at coordinate
// j taken from {0, ..., alphabet_sizes[j]-1}. The target is the Hamming
// graph K_{a_1} x ... x K_{a_m}; it is a hypercube when every a_j = 2.
//
// Construction rejects wrong code lengths, out-of-alphabet symbols,
// alphabets smaller than 2 and constant coordinates (a digit that takes the
// same value on every vertex). Coordinates are 0-based.
class HammingEmbedding {
 public:
  HammingEmbedding(std::vector<int> alphabet_sizes, const std::vector<std::vector<int>>& codes);

  int dimension() const noexcept { return static_cast<int>(alphabet_sizes_.size()); }
  int vertex_count() const noexcept { return n_; }
  std::span<const int> alphabet_sizes() const noexcept { return alphabet_sizes_; }
  bool is_hypercube() const noexcept;

  std::span<const int> code(Vertex u) const {
    return {symbols_.data() + static_cast<std::size_t>(u) * dimension(),
            static_cast<std::size_t>(dimension())};
  }
  int symbol(Vertex u, int coord) const {
    return symbols_[static_cast<std::size_t>(u) * dimension() + coord];
  }
  std::vector<std::vector<int>> codes() const;

  // Hamming distance between the codes of u and v.
  int distance(Vertex u, Vertex v) const;

  // Restriction to the listed coordinates, in the listed order.
  HammingEmbedding project(std::span<const int> coords) const;

  friend bool operator==(const HammingEmbedding&, const HammingEmbedding&) = default;

 private:
  HammingEmbedding() = default;

  int n_ = 0;
  std::vector<int> alphabet_sizes_;
  std::vector<int> symbols_;  // row-major n x m
};

// Drops constant columns (and alphabets that then become unused) from raw
// codes before building an embedding. For ingesting external data.
HammingEmbedding strip_constant_digits(const std::vector<int>& alphabet_sizes,
                                       const std::vector<std::vector<int>>& codes);

struct IsometryVerdict {
  bool passed = true;
  Vertex u = -1;
  Vertex v = -1;
  Weight graph_distance = 0;
  int code_distance = 0;

  explicit operator bool() const noexcept { return passed; }
};

// Hamming distance equals d_G on every pair; otherwise the first offending
// pair in row-major order. Throws EmbeddingError if the vertex counts
// differ.
IsometryVerdict verify_isometric(const WeightedGraph& g, const HammingEmbedding& e);

// Coordinates at which the codes of u and v differ, ascending.
std::vector<int> coord_diff(const HammingEmbedding& e, Vertex u, Vertex v);

// Coordinate classes of the transitive closure of "both digits change
// across a common edge", listed by smallest coordinate.
struct CoordClassPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // coordinate -> class index

  int size() const noexcept { return static_cast<int>(classes.size()); }
};

// Throws EmbeddingError if some coordinate changes across no edge.
CoordClassPartition gamma_classes(const WeightedGraph& g, const HammingEmbedding& e);

struct CanonicalPartition {
  EdgeClassPartition edge_classes;
  CoordClassPartition coord_classes;
  // Edge class i is paired with coordinate class coord_class_of[i]; the
  // pairing is a bijection.
  std::vector<int> coord_class_of;
  // projections[i] is e restricted to the coordinates paired with edge
  // class i (embeddings of V(G), not yet of the factor).
  std::vector<HammingEmbedding> projections;
  std::vector<std::vector<int>> projection_coords;
};

// Splits e along its coordinate classes and pairs each edge class with the
// coordinate class of any digit that changes across one of its edges.
// Throws NotMinimalError for non-minimal g, EmbeddingError if e is not
// isometric, and std::logic_error if the pairing is inconsistent or not a
// bijection.
CanonicalPartition canonical_partition(const WeightedGraph& g, const HammingEmbedding& e);

// For each factor G_i of the canonical pseudofactorization pf, the
// embedding of G_i read off through any preimage under pi_i. Throws
// std::logic_error if preimages disagree or a factor embedding is not
// isometric.
std::vector<HammingEmbedding> extract_factor_embeddings(const WeightedGraph& g,
                                                        const Pseudofactorization& pf,
                                                        const HammingEmbedding& e);

// Concatenates factor embeddings pulled back along pi. Throws
// EmbeddingError if a factor embedding is not an isometric embedding of its
// factor and std::logic_error if the composition fails to verify.
HammingEmbedding compose_embeddings(const WeightedGraph& g, const Pseudofactorization& pf,
                                    std::span<const HammingEmbedding> factor_embeddings);

// Equivalence-canonical form of an embedding: one vertex partition per
// coordinate, each written as a restricted growth string (vertex 0 in part
// 0, each new part numbered on first appearance), the whole list sorted.
// Two embeddings are equivalent (coordinate permutation plus per-coordinate
// symbol renaming) iff their multisets are equal.
class EmbeddingMultiset {
 public:
  EmbeddingMultiset() = default;
  EmbeddingMultiset(int vertex_count, std::vector<std::vector<int>> partitions);

  int vertex_count() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(partitions_.size()); }
  const std::vector<std::vector<int>>& partitions() const noexcept { return partitions_; }

  // One coordinate per partition; alphabet size = number of parts. With
  // pad_alphabets, every coordinate uses the largest alphabet.
  HammingEmbedding to_embedding(bool pad_alphabets = false) const;

  friend auto operator<=>(const EmbeddingMultiset&, const EmbeddingMultiset&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> partitions_;
};

// Relabels a vertex partition (part id per vertex) as a restricted growth
// string.
std::vector<int> canonical_partition_labels(std::span<const int> part_of);

EmbeddingMultiset to_multiset(const WeightedGraph& g, const HammingEmbedding& e);

bool equivalent(const WeightedGraph& g, const HammingEmbedding& a, const HammingEmbedding& b);

}  // namespace hamming
