#pragma once

#include "hamming/graph.hpp"

// Small named graph families used by tests, examples and the CLI corpus.
namespace hamming::families {

WeightedGraph path(int vertex_count, Weight weight = 1);
WeightedGraph cycle(int vertex_count, Weight weight = 1);
WeightedGraph complete(int vertex_count, Weight weight = 1);
WeightedGraph complete_bipartite(int left, int right, Weight weight = 1);
WeightedGraph hypercube(int dimension);
// Star with one centre and `leaves` leaves.
WeightedGraph star(int leaves, Weight weight = 1);

}  // namespace hamming::families
