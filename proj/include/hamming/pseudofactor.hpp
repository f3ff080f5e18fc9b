#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamming/graph.hpp"
#include "hamming/relations.hpp"

namespace hamming {

// A pseudofactorization {G_1..G_n} of a graph G together with the embedding
// pi : V(G) -> V(G_1) x ... x V(G_n).
//
// For the canonical pseudofactorization built by pseudofactorize(), factor
// i is contracted from edge class i of `classes`, so class and factor
// indices coincide. K1 has the empty pseudofactorization (no factors, every
// tuple empty), the neutral element of the Cartesian product.
struct Pseudofactorization {
  std::vector<WeightedGraph> factors;
  std::vector<std::vector<Vertex>> pi;  // pi[u][i]
  EdgeClassPartition classes;           // empty for hand-built inputs

  int factor_count() const noexcept { return static_cast<int>(factors.size()); }
  Vertex project(Vertex u, int factor) const { return pi.at(u).at(factor); }
};

// Canonical pseudofactorization by contraction: for edge class E_j, the
// vertices of G_j are the connected components of (V, E \ E_j) and each
// edge of E_j becomes a factor edge between the components of its ends.
// Factor vertices are numbered by their smallest original vertex. The
// result is checked with verify_pseudofactorization before returning.
//
// Throws NotMinimalError for non-minimal input and std::logic_error if
// contraction produces a self-loop, conflicting parallel weights, or a
// result that fails verification.
Pseudofactorization pseudofactorize(const WeightedGraph& g);

struct PseudofactorViolation {
  int condition = 0;  // 1..4
  std::string detail;
  std::optional<std::pair<Vertex, Vertex>> vertices;
  std::optional<int> factor;
};

struct PseudofactorVerdict {
  // At most one violation per condition, ordered by condition number.
  std::vector<PseudofactorViolation> violations;
  // Per factor: minimal and has a single edge class.
  std::vector<bool> factor_irreducible;

  bool passed() const noexcept { return violations.empty(); }
  const PseudofactorViolation* first_violation() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

// Exhaustive check of the four pseudofactorization conditions:
//  1. d_G(u,u') equals the product distance of pi(u), pi(u'),
//  2. every edge of G maps to a product edge of the same weight,
//  3. every pi_i is surjective,
//  4. every factor edge is the image of some edge of G.
// Throws std::invalid_argument if pf is not well formed (tuple sizes or
// vertex ids out of range).
PseudofactorVerdict verify_pseudofactorization(const WeightedGraph& g,
                                               const Pseudofactorization& pf);

// True iff g has at most one edge class. Throws NotMinimalError.
bool is_irreducible(const WeightedGraph& g);

// Per factor, the total weight of path edges lying in that factor's edge
// class. `path` lists vertices; consecutive vertices must be adjacent and
// a single vertex is a zero-length path. Requires pf.classes (the canonical
// pseudofactorization). Throws std::invalid_argument on an invalid path.
std::vector<Weight> project_path_lengths(const WeightedGraph& g,
                                         const Pseudofactorization& pf,
                                         std::span<const Vertex> path);

}  // namespace hamming
