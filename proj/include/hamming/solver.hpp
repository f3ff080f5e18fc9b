#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hamming/embedding.hpp"
#include "hamming/graph.hpp"

namespace hamming {

enum class Target { hypercube, hamming };
enum class SolveMode { find_one, enumerate_all, decide };
enum class SolveStatus { embeddable, not_embeddable, resource_exhausted };

const char* to_string(Target target);
const char* to_string(SolveStatus status);

struct SolveLimits {
  // Coordinates in a single witness; branches needing more end the search
  // as resource_exhausted rather than not_embeddable.
  int max_coordinates = std::numeric_limits<int>::max();
  std::uint64_t max_nodes = 10'000'000;  // per factor
  std::chrono::milliseconds time_budget{60'000};  // per factor
  std::uint64_t max_candidates = 1'000'000;  // vertex partitions per factor
  std::size_t max_witnesses = 100'000;  // witnesses kept; counts stay exact
};

struct SolveRequest {
  WeightedGraph graph;
  Target target = Target::hypercube;
  SolveMode mode = SolveMode::find_one;
  SolveLimits limits;
};

struct FactorOutcome {
  SolveStatus status = SolveStatus::not_embeddable;
  std::optional<std::uint64_t> count;  // enumerate_all only
  std::uint64_t nodes = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::not_embeddable;
  // Pairwise non-equivalent witnesses; embeddings[i] realizes witnesses[i].
  std::vector<EmbeddingMultiset> witnesses;
  std::vector<HammingEmbedding> embeddings;
  std::optional<std::uint64_t> count;  // known after a complete enumerate_all
  std::uint64_t nodes = 0;
  // solve(): the first factor that is not embeddable or, failing that, the
  // first that exhausted its limits.
  std::optional<int> failing_factor;
  std::vector<FactorOutcome> factors;
  std::string detail;
};

// Exact decomposition of the shortest-path metric of g into vertex
// partitions with multiplicities (one partition per coordinate), without
// pseudofactoring first. Partitions have at least two parts, exactly two
// for the hypercube target. Throws NotMinimalError.
SolveResult search_decompositions(const WeightedGraph& g, Target target, SolveMode mode,
                                  const SolveLimits& limits = {});

// search_decompositions on an irreducible graph. Throws
// std::invalid_argument if the graph has more than one edge class and
// NotMinimalError if it is not minimal.
SolveResult solve_irreducible(const SolveRequest& request);

// Pseudofactorizes, searches every factor (in parallel), and combines:
// embeddable iff every factor is, witnesses are concatenations of factor
// witnesses, and counts multiply.
SolveResult solve(const SolveRequest& request);

struct CountResult {
  SolveStatus status = SolveStatus::not_embeddable;
  std::optional<std::uint64_t> total;
  std::vector<std::optional<std::uint64_t>> factors;
};

// Number of non-equivalent embeddings as the product of per-factor counts.
// total is empty if some factor exhausted its limits and no factor has
// count zero.
CountResult count_embeddings(const WeightedGraph& g, Target target,
                             const SolveLimits& limits = {});

}  // namespace hamming
