#include "hamming/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hamming/errors.hpp"

namespace hamming::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string label_of(const json& node) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return node.dump();
  throw ParseError("vertex labels must be strings or integers, got " + node.dump());
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  for (std::string_view item : split(text, ',')) {
    item = trim(item);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("invalid integer '" + std::string(item) + "' in " + std::string(what));
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

WeightedGraph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ParseError("graph JSON must be an object with \"vertices\" and \"edges\"");
  }
  const json& vertices = doc.at("vertices");
  const json& edges = doc.at("edges");
  if (!vertices.is_array() || !edges.is_array()) {
    throw ParseError("\"vertices\" and \"edges\" must be arrays");
  }
  if (vertices.empty()) throw ParseError("graph has no vertices");

  std::vector<std::string> labels;
  std::map<std::string, Vertex> index;
  for (const json& v : vertices) {
    std::string label = label_of(v);
    if (!index.emplace(label, static_cast<Vertex>(labels.size())).second) {
      throw ParseError("duplicate vertex label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }

  auto lookup = [&](const json& node) {
    const std::string label = label_of(node);
    auto it = index.find(label);
    if (it == index.end()) throw ParseError("edge refers to unknown vertex '" + label + "'");
    return it->second;
  };

  std::vector<Edge> parsed;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw ParseError("each edge must be [u, v] or [u, v, weight], got " + e.dump());
    }
    Weight w = 1;
    if (e.size() == 3) {
      if (!e[2].is_number_integer()) {
        throw ParseError("edge weight must be a positive integer, got " + e[2].dump());
      }
      w = e[2].get<Weight>();
      if (w < 1) throw ParseError("edge weight must be a positive integer, got " + e[2].dump());
    }
    parsed.push_back({lookup(e[0]), lookup(e[1]), w});
  }
  const int n = static_cast<int>(labels.size());
  return WeightedGraph(n, std::move(parsed), std::move(labels));
}

WeightedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

ordered_json graph_to_json(const WeightedGraph& g) {
  ordered_json doc;
  doc["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v), e.weight});
  doc["edges"] = std::move(edges);
  return doc;
}

ordered_json pseudofactorization_to_json(const WeightedGraph& g, const Pseudofactorization& pf) {
  ordered_json doc;
  doc["factors"] = ordered_json::array();
  for (const WeightedGraph& f : pf.factors) doc["factors"].push_back(graph_to_json(f));
  ordered_json pi = ordered_json::object();
  for (Vertex u = 0; u < g.vertex_count(); ++u) pi[g.label(u)] = pf.pi[u];
  doc["pi"] = std::move(pi);
  return doc;
}

HammingEmbedding parse_embedding_tsv(std::string_view text, const WeightedGraph& g) {
  std::optional<std::vector<int>> sizes;
  std::vector<std::optional<std::vector<int>>> codes(g.vertex_count());
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view key = "#alphabet_sizes=";
      if (line.substr(0, key.size()) == key) {
        if (sizes) throw ParseError("duplicate #alphabet_sizes header");
        sizes = parse_int_list(line.substr(key.size()), "#alphabet_sizes header");
      }
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected label<TAB>symbols");
    }
    const std::string label(line.substr(0, tab));
    auto v = g.find_label(label);
    if (!v) throw ParseError("line " + std::to_string(line_no) + ": unknown vertex '" + label + "'");
    if (codes[*v]) throw ParseError("vertex '" + label + "' listed twice");
    codes[*v] = parse_int_list(line.substr(tab + 1), "code of '" + label + "'");
  }
  if (!sizes) throw ParseError("missing #alphabet_sizes header");
  std::vector<std::vector<int>> rows;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!codes[v]) throw ParseError("no code for vertex '" + g.label(v) + "'");
    rows.push_back(std::move(*codes[v]));
  }
  return HammingEmbedding(std::move(*sizes), rows);
}

std::string embedding_to_tsv(const WeightedGraph& g, const HammingEmbedding& e) {
  std::ostringstream out;
  out << "#alphabet_sizes=";
  for (int j = 0; j < e.dimension(); ++j) out << (j ? "," : "") << e.alphabet_sizes()[j];
  out << '\n';
  for (Vertex v = 0; v < e.vertex_count(); ++v) {
    out << g.label(v) << '\t';
    for (int j = 0; j < e.dimension(); ++j) out << (j ? "," : "") << e.symbol(v, j);
    out << '\n';
  }
  return out.str();
}

ordered_json embedding_to_json(const WeightedGraph& g, const HammingEmbedding& e) {
  ordered_json doc;
  doc["alphabet_sizes"] = std::vector<int>(e.alphabet_sizes().begin(), e.alphabet_sizes().end());
  ordered_json codes = ordered_json::object();
  for (Vertex v = 0; v < e.vertex_count(); ++v)
    codes[g.label(v)] = std::vector<int>(e.code(v).begin(), e.code(v).end());
  doc["codes"] = std::move(codes);
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace hamming::io
