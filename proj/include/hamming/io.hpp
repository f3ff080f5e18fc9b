#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hamming/embedding.hpp"
#include "hamming/graph.hpp"
#include "hamming/pseudofactor.hpp"

namespace hamming::io {

// {"vertices": ["a", ...], "edges": [["a", "b", w], ...]}; a missing
// weight means 1. Weights must be positive integers. Throws ParseError on
// malformed input and GraphError/DisconnectedGraphError on invalid graphs.
WeightedGraph parse_graph_json(std::string_view text);
WeightedGraph graph_from_json(const nlohmann::json& doc);

// Vertices in id order, edges in (u, v) id order with the lower id first.
nlohmann::ordered_json graph_to_json(const WeightedGraph& g);

// {"factors": [graph, ...], "pi": {"label": [i1, ..., in], ...}}
nlohmann::ordered_json pseudofactorization_to_json(const WeightedGraph& g,
                                                   const Pseudofactorization& pf);

// Header "#alphabet_sizes=a1,a2,..." then one "label<TAB>s1,s2,..." line
// per vertex, in vertex order. Parsing accepts lines in any order, skips
// blank lines and other '#' lines, and requires every graph vertex exactly
// once. Throws ParseError on malformed text and EmbeddingError on codes
// that violate the embedding invariants.
HammingEmbedding parse_embedding_tsv(std::string_view text, const WeightedGraph& g);
std::string embedding_to_tsv(const WeightedGraph& g, const HammingEmbedding& e);

nlohmann::ordered_json embedding_to_json(const WeightedGraph& g, const HammingEmbedding& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hamming::io
