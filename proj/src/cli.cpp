#include "hamming/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamming/embedding.hpp"
#include "hamming/errors.hpp"
#include "hamming/io.hpp"
#include "hamming/pseudofactor.hpp"
#include "hamming/solver.hpp"

namespace hamming::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string graph_path;
  std::string embedding_a;
  std::string embedding_b;
  std::string output_path;
  std::string target = "hypercube";
  bool all = false;
  std::uint64_t max_nodes = SolveLimits{}.max_nodes;
  double timeout_secs = 60.0;
  int max_coords = SolveLimits{}.max_coordinates;
};

void emit(std::ostream& out, const json& payload) { out << payload.dump(2) << '\n'; }

SolveLimits limits_from(const Options& opt) {
  SolveLimits limits;
  limits.max_nodes = opt.max_nodes;
  limits.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(opt.timeout_secs * 1000));
  limits.max_coordinates = opt.max_coords;
  return limits;
}

Target target_from(const Options& opt) {
  return opt.target == "hamming" ? Target::hamming : Target::hypercube;
}

WeightedGraph load_graph(const std::string& path) {
  return io::parse_graph_json(io::read_file(path));
}

// Non-minimal input is a negative verdict: exit 1 with a hint.
bool reject_non_minimal(const WeightedGraph& g, std::ostream& out, std::ostream& err) {
  if (g.is_minimal()) return false;
  const Edge e = non_tight_edges(g).front();
  err << "error: graph is not minimal (edge " << g.label(e.u) << "-" << g.label(e.v)
      << " has weight " << e.weight << " > distance " << g.distance(e.u, e.v)
      << "); run 'minimalize' first\n";
  emit(out, {{"status", "not_minimal"}, {"edge", {g.label(e.u), g.label(e.v)}}});
  return true;
}

json edge_labels(const WeightedGraph& g, const Edge& e) { return {g.label(e.u), g.label(e.v)}; }

json factor_certificate(const WeightedGraph& g, const Pseudofactorization& pf, int i) {
  json preimages = json::object();
  for (Vertex x = 0; x < pf.factors[i].vertex_count(); ++x) {
    json members = json::array();
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      if (pf.project(u, i) == x) members.push_back(g.label(u));
    preimages[pf.factors[i].label(x)] = std::move(members);
  }
  json edges = json::array();
  for (int e : pf.classes.classes[i]) edges.push_back(edge_labels(g, g.edge(e)));
  return {{"index", i},
          {"graph", io::graph_to_json(pf.factors[i])},
          {"preimages", std::move(preimages)},
          {"edge_class", std::move(edges)}};
}

int cmd_minimalize(const Options& opt, std::ostream& out) {
  const WeightedGraph g = load_graph(opt.graph_path);
  const WeightedGraph reduced = minimalize(g);
  json removed = json::array();
  for (const Edge& e : non_tight_edges(g)) removed.push_back(edge_labels(g, e));
  if (!opt.output_path.empty()) io::write_file(opt.output_path, io::graph_to_json(reduced).dump(2) + "\n");
  emit(out, {{"graph", io::graph_to_json(reduced)}, {"removed", std::move(removed)}});
  return kSuccess;
}

int cmd_pseudofactorize(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = load_graph(opt.graph_path);
  if (reject_non_minimal(g, out, err)) return kNegativeVerdict;
  const Pseudofactorization pf = pseudofactorize(g);
  const PseudofactorVerdict verdict = verify_pseudofactorization(g, pf);

  json doc = io::pseudofactorization_to_json(g, pf);
  if (!opt.output_path.empty()) io::write_file(opt.output_path, doc.dump(2) + "\n");
  json violations = json::array();
  for (const auto& v : verdict.violations)
    violations.push_back({{"condition", v.condition}, {"detail", v.detail}});
  doc["irreducible"] = pf.factor_count() <= 1;
  doc["factor_irreducible"] = verdict.factor_irreducible;
  doc["verification"] = {{"passed", verdict.passed()}, {"violations", std::move(violations)}};
  emit(out, doc);
  return verdict.passed() ? kSuccess : kNegativeVerdict;
}

int cmd_embed(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = load_graph(opt.graph_path);
  if (reject_non_minimal(g, out, err)) return kNegativeVerdict;
  SolveRequest request{g, target_from(opt),
                       opt.all ? SolveMode::enumerate_all : SolveMode::find_one, limits_from(opt)};
  const SolveResult result = solve(request);

  if (result.status == SolveStatus::not_embeddable) {
    const Pseudofactorization pf = pseudofactorize(g);
    err << "graph has no " << opt.target << " embedding: factor " << *result.failing_factor
        << " is not embeddable\n";
    emit(out, {{"status", to_string(result.status)},
               {"target", opt.target},
               {"failing_factor", factor_certificate(g, pf, *result.failing_factor)}});
    return kNegativeVerdict;
  }
  if (result.status == SolveStatus::resource_exhausted) {
    err << "search limits exhausted on factor " << *result.failing_factor << ": " << result.detail
        << '\n';
    emit(out, {{"status", to_string(result.status)},
               {"target", opt.target},
               {"factor", *result.failing_factor},
               {"detail", result.detail}});
    return kResourceExhausted;
  }

  if (!opt.all) {
    const std::string tsv = io::embedding_to_tsv(g, result.embeddings.front());
    if (!opt.output_path.empty()) io::write_file(opt.output_path, tsv);
    out << tsv;
    return kSuccess;
  }
  json witnesses = json::array();
  for (const auto& e : result.embeddings) witnesses.push_back(io::embedding_to_json(g, e));
  json factor_counts = json::array();
  for (const auto& f : result.factors) factor_counts.push_back(*f.count);
  emit(out, {{"status", to_string(result.status)},
             {"target", opt.target},
             {"count", *result.count},
             {"factors", std::move(factor_counts)},
             {"witnesses", std::move(witnesses)}});
  return kSuccess;
}

int cmd_partition(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = load_graph(opt.graph_path);
  if (reject_non_minimal(g, out, err)) return kNegativeVerdict;
  const HammingEmbedding e = io::parse_embedding_tsv(io::read_file(opt.embedding_a), g);
  if (const auto verdict = verify_isometric(g, e); !verdict) {
    err << "embedding is not isometric: " << g.label(verdict.u) << "," << g.label(verdict.v)
        << " at graph distance " << verdict.graph_distance << " but code distance "
        << verdict.code_distance << '\n';
    emit(out, {{"status", "not_isometric"},
               {"witness",
                {{"u", g.label(verdict.u)},
                 {"v", g.label(verdict.v)},
                 {"graph_distance", verdict.graph_distance},
                 {"code_distance", verdict.code_distance}}}});
    return kNegativeVerdict;
  }

  const CanonicalPartition partition = canonical_partition(g, e);
  const Pseudofactorization pf = pseudofactorize(g);
  const auto factor_embeddings = extract_factor_embeddings(g, pf, e);

  json pairing = json::array();
  json factors = json::array();
  for (int i = 0; i < partition.edge_classes.size(); ++i) {
    json edges = json::array();
    for (int idx : partition.edge_classes.classes[i]) edges.push_back(edge_labels(g, g.edge(idx)));
    pairing.push_back({{"edge_class", i},
                       {"edges", std::move(edges)},
                       {"coord_class", partition.coord_class_of[i]},
                       {"coords", partition.projection_coords[i]}});
    factors.push_back({{"factor", i},
                       {"graph", io::graph_to_json(pf.factors[i])},
                       {"coords", partition.projection_coords[i]},
                       {"embedding", io::embedding_to_json(pf.factors[i], factor_embeddings[i])},
                       {"isometric", static_cast<bool>(verify_isometric(pf.factors[i], factor_embeddings[i]))}});
  }
  emit(out, {{"status", "ok"},
             {"coord_classes", partition.coord_classes.classes},
             {"pairing", std::move(pairing)},
             {"factors", std::move(factors)}});
  return kSuccess;
}

int cmd_count(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = load_graph(opt.graph_path);
  if (reject_non_minimal(g, out, err)) return kNegativeVerdict;
  const CountResult result = count_embeddings(g, target_from(opt), limits_from(opt));
  json factors = json::array();
  for (const auto& c : result.factors) factors.push_back(c ? json(*c) : json(nullptr));
  json payload = {{"target", opt.target},
                  {"factors", std::move(factors)},
                  {"total", result.total ? json(*result.total) : json(nullptr)}};
  emit(out, payload);
  if (!result.total) {
    err << "search limits exhausted; counts are partial\n";
    return kResourceExhausted;
  }
  return kSuccess;
}

int cmd_equiv(const Options& opt, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = load_graph(opt.graph_path);
  const HammingEmbedding a = io::parse_embedding_tsv(io::read_file(opt.embedding_a), g);
  const HammingEmbedding b = io::parse_embedding_tsv(io::read_file(opt.embedding_b), g);
  for (const auto* e : {&a, &b}) {
    if (const auto verdict = verify_isometric(g, *e); !verdict) {
      err << "error: " << (e == &a ? opt.embedding_a : opt.embedding_b)
          << " is not an isometric embedding (pair " << g.label(verdict.u) << ","
          << g.label(verdict.v) << ")\n";
      return kUsageError;
    }
  }
  const bool same = equivalent(g, a, b);
  emit(out, {{"equivalent", same}});
  return same ? kSuccess : kNegativeVerdict;
}

void add_limit_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--target", opt.target, "hypercube or hamming")
      ->check(CLI::IsMember({"hypercube", "hamming"}));
  cmd->add_option("--max-nodes", opt.max_nodes, "search node budget per factor")
      ->envname("MAX_NODES");
  cmd->add_option("--timeout-secs", opt.timeout_secs, "wall-clock budget per factor")
      ->envname("TIMEOUT_SECS");
  cmd->add_option("--max-coords", opt.max_coords, "maximum embedding dimension per factor")
      ->envname("MAX_COORDS");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudofactorization and Hamming/hypercube embeddings of minimal weighted graphs",
               "hamming-embed"};
  app.require_subcommand(1);
  Options opt;

  auto* minimalize_cmd = app.add_subcommand("minimalize", "drop edges heavier than their endpoints' distance");
  minimalize_cmd->add_option("graph", opt.graph_path, "graph JSON")->required();
  minimalize_cmd->add_option("-o,--output", opt.output_path, "also write the graph JSON here");

  auto* factor_cmd = app.add_subcommand("pseudofactorize", "canonical pseudofactorization");
  factor_cmd->add_option("graph", opt.graph_path, "graph JSON")->required();
  factor_cmd->add_option("-o,--output", opt.output_path, "also write the factorization JSON here");

  auto* embed_cmd = app.add_subcommand("embed", "find an embedding (TSV) or enumerate all (--all)");
  embed_cmd->add_option("graph", opt.graph_path, "graph JSON")->required();
  embed_cmd->add_flag("--all", opt.all, "enumerate all non-equivalent embeddings");
  embed_cmd->add_option("-o,--output", opt.output_path, "also write the TSV here");
  add_limit_options(embed_cmd, opt);

  auto* partition_cmd = app.add_subcommand("partition", "canonical partition of an embedding");
  partition_cmd->add_option("graph", opt.graph_path, "graph JSON")->required();
  partition_cmd->add_option("embedding", opt.embedding_a, "embedding TSV")->required();

  auto* count_cmd = app.add_subcommand("count", "number of non-equivalent embeddings");
  count_cmd->add_option("graph", opt.graph_path, "graph JSON")->required();
  add_limit_options(count_cmd, opt);

  auto* equiv_cmd = app.add_subcommand("equiv", "are two embeddings equivalent");
  equiv_cmd->add_option("graph", opt.graph_path, "graph JSON")->required();
  equiv_cmd->add_option("a", opt.embedding_a, "embedding TSV")->required();
  equiv_cmd->add_option("b", opt.embedding_b, "embedding TSV")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*minimalize_cmd) return cmd_minimalize(opt, out);
    if (*factor_cmd) return cmd_pseudofactorize(opt, out, err);
    if (*embed_cmd) return cmd_embed(opt, out, err);
    if (*partition_cmd) return cmd_partition(opt, out, err);
    if (*count_cmd) return cmd_count(opt, out, err);
    if (*equiv_cmd) return cmd_equiv(opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const EmbeddingError& e) {
    err << "error: invalid embedding: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace hamming::cli
