#include "hamming/solver.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "hamming/errors.hpp"
#include "hamming/pseudofactor.hpp"

namespace hamming {

const char* to_string(Target target) {
  return target == Target::hypercube ? "hypercube" : "hamming";
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::embeddable:
      return "embeddable";
    case SolveStatus::not_embeddable:
      return "not_embeddable";
    case SolveStatus::resource_exhausted:
      return "resource_exhausted";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  std::vector<int> labels;     // restricted growth string
  std::vector<int> separated;  // pair indices
};

// Depth-first search over multisets of vertex partitions. At every node the
// pair with positive residual distance that the fewest usable partitions
// can still reduce is chosen; any completion must use one of those
// partitions, so branching "take candidate i, forbid candidates before i"
// visits every multiset exactly once.
class DecompositionSearch {
 public:
  DecompositionSearch(const WeightedGraph& g, Target target, SolveMode mode,
                      const SolveLimits& limits)
      : g_(g), n_(g.vertex_count()), target_(target), mode_(mode), limits_(limits) {}

  SolveResult run() {
    start_ = Clock::now();
    SolveResult result;
    pair_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        pair_index_[u * n_ + v] = pair_index_[v * n_ + u] = static_cast<int>(residual_.size());
        residual_.push_back(g_.distance(u, v));
      }

    if (target_ == Target::hypercube && !even_triangles()) {
      // Every cut separates an even number of the three pairs of a triple.
      result.detail = "odd triangle perimeter rules out hypercube embeddings";
      return finish(std::move(result));
    }
    if (!generate_candidates()) {
      exhausted_ = true;
      result.detail = "candidate partition limit exceeded";
      return finish(std::move(result));
    }
    forbidden_.assign(candidates_.size(), 0);
    dfs();
    if (exhausted_) result.detail = exhaust_reason_;
    return finish(std::move(result));
  }

 private:
  Weight d(Vertex u, Vertex v) const { return g_.distance(u, v); }

  bool even_triangles() const {
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        for (Vertex c = b + 1; c < n_; ++c)
          if ((d(a, b) + d(b, c) + d(a, c)) % 2 != 0) return false;
    return true;
  }

  // A partition can occur in an exact decomposition only if, whenever w
  // lies on a shortest u-v path, it does not separate w from both u and v
  // and does not separate w from u and v while keeping u with v. Each
  // partition metric obeys the triangle inequality and the slacks must sum
  // to zero.
  bool consistent_with_geodesics(const std::vector<int>& labels, Vertex newest) const {
    const Vertex c = newest;
    for (Vertex a = 0; a < c; ++a) {
      for (Vertex b = a + 1; b < c; ++b) {
        const Vertex t[3] = {a, b, c};
        for (int mid = 0; mid < 3; ++mid) {
          const Vertex w = t[mid], x = t[(mid + 1) % 3], y = t[(mid + 2) % 3];
          if (d(x, w) + d(w, y) != d(x, y)) continue;
          const int sxw = labels[x] != labels[w];
          const int swy = labels[w] != labels[y];
          const int sxy = labels[x] != labels[y];
          if (sxw + swy != sxy) return false;
        }
      }
    }
    return true;
  }

  bool generate_candidates() {
    const int max_parts = target_ == Target::hypercube ? 2 : n_;
    std::vector<int> labels(n_, 0);
    std::vector<std::vector<int>> found;
    bool overflow = false;
    auto extend = [&](auto&& self, Vertex v, int parts) -> void {
      if (overflow) return;
      if (v == n_) {
        if (parts >= 2) {
          found.push_back(labels);
          if (found.size() > limits_.max_candidates) overflow = true;
        }
        return;
      }
      for (int p = 0; p <= std::min(parts, max_parts - 1); ++p) {
        labels[v] = p;
        if (consistent_with_geodesics(labels, v)) self(self, v + 1, std::max(parts, p + 1));
      }
    };
    if (n_ >= 2) {
      labels[0] = 0;
      extend(extend, 1, 1);
    }
    if (overflow) return false;

    auto part_count = [](const std::vector<int>& l) { return *std::max_element(l.begin(), l.end()); };
    std::stable_sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
      return part_count(a) < part_count(b);
    });
    by_pair_.assign(residual_.size(), {});
    for (auto& labels_of : found) {
      Candidate c;
      c.labels = std::move(labels_of);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
          if (c.labels[u] != c.labels[v]) c.separated.push_back(pair_index_[u * n_ + v]);
      const int idx = static_cast<int>(candidates_.size());
      for (int p : c.separated) by_pair_[p].push_back(idx);
      candidates_.push_back(std::move(c));
    }
    return true;
  }

  bool residual_is_metric() const {
    auto r = [&](Vertex u, Vertex v) { return u == v ? Weight{0} : residual_[pair_index_[u * n_ + v]]; };
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        for (Vertex c = 0; c < n_; ++c) {
          if (c == a || c == b) continue;
          if (r(a, b) > r(a, c) + r(c, b)) return false;
        }
    return true;
  }

  bool usable(int c) const {
    if (forbidden_[c]) return false;
    for (int p : candidates_[c].separated)
      if (residual_[p] < 1) return false;
    return true;
  }

  bool out_of_budget() {
    if (exhausted_) return true;
    if (nodes_ >= limits_.max_nodes) {
      exhausted_ = true;
      exhaust_reason_ = "search node limit reached";
    } else if ((nodes_ & 1023) == 0 && Clock::now() - start_ > limits_.time_budget) {
      exhausted_ = true;
      exhaust_reason_ = "time budget exceeded";
    }
    return exhausted_;
  }

  bool stop_requested() const {
    return exhausted_ || (mode_ != SolveMode::enumerate_all && solutions_ > 0);
  }

  void record_solution() {
    ++solutions_;
    if (mode_ == SolveMode::decide) return;
    if (witnesses_.size() >= limits_.max_witnesses) return;
    std::vector<int> chosen = chosen_;
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::vector<int>> partitions;
    for (int c : chosen) partitions.push_back(candidates_[c].labels);
    witnesses_.emplace_back(n_, std::move(partitions));
  }

  void dfs() {
    ++nodes_;
    if (out_of_budget()) return;

    int best_pair = -1;
    std::size_t best_count = 0;
    for (std::size_t p = 0; p < residual_.size(); ++p) {
      if (residual_[p] == 0) continue;
      std::size_t count = 0;
      for (int c : by_pair_[p]) count += usable(c);
      if (best_pair < 0 || count < best_count) {
        best_pair = static_cast<int>(p);
        best_count = count;
        if (count == 0) break;
      }
    }
    if (best_pair < 0) {
      record_solution();
      return;
    }
    if (best_count == 0 || !residual_is_metric()) return;
    if (static_cast<int>(chosen_.size()) >= limits_.max_coordinates) {
      truncated_ = true;
      return;
    }

    std::vector<int> forbidden_here;
    for (int c : by_pair_[best_pair]) {
      if (!usable(c)) continue;
      for (int p : candidates_[c].separated) --residual_[p];
      chosen_.push_back(c);
      dfs();
      chosen_.pop_back();
      for (int p : candidates_[c].separated) ++residual_[p];
      if (stop_requested()) break;
      forbidden_[c] = 1;
      forbidden_here.push_back(c);
    }
    for (int c : forbidden_here) forbidden_[c] = 0;
  }

  SolveResult finish(SolveResult result) {
    result.nodes = nodes_;
    const bool incomplete = exhausted_ || truncated_;
    if (truncated_ && result.detail.empty()) result.detail = "coordinate limit reached";
    if (solutions_ > 0 && (mode_ != SolveMode::enumerate_all || !incomplete)) {
      result.status = SolveStatus::embeddable;
    } else if (incomplete) {
      result.status = SolveStatus::resource_exhausted;
    } else {
      result.status = SolveStatus::not_embeddable;
    }
    if (mode_ == SolveMode::enumerate_all && !incomplete) result.count = solutions_;
    if (mode_ == SolveMode::find_one && witnesses_.size() > 1) witnesses_.resize(1);
    result.witnesses = std::move(witnesses_);
    for (const auto& w : result.witnesses) result.embeddings.push_back(w.to_embedding());
    return result;
  }

  const WeightedGraph& g_;
  const int n_;
  const Target target_;
  const SolveMode mode_;
  const SolveLimits limits_;

  std::vector<int> pair_index_;
  std::vector<Weight> residual_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> by_pair_;
  std::vector<char> forbidden_;
  std::vector<int> chosen_;

  std::vector<EmbeddingMultiset> witnesses_;
  std::uint64_t solutions_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool truncated_ = false;
  std::string exhaust_reason_;
  Clock::time_point start_;
};

void require_minimal(const WeightedGraph& g) {
  if (g.is_minimal()) return;
  const Edge e = non_tight_edges(g).front();
  throw NotMinimalError(e.u, e.v);
}

std::vector<SolveResult> solve_factors(const Pseudofactorization& pf, Target target,
                                       SolveMode mode, const SolveLimits& limits) {
  std::vector<std::future<SolveResult>> pending;
  pending.reserve(pf.factors.size());
  for (const WeightedGraph& factor : pf.factors) {
    pending.push_back(std::async(std::launch::async, [&factor, target, mode, &limits] {
      return search_decompositions(factor, target, mode, limits);
    }));
  }
  std::vector<SolveResult> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<FactorOutcome> summarize(const std::vector<SolveResult>& results) {
  std::vector<FactorOutcome> out;
  for (const auto& r : results) out.push_back({r.status, r.count, r.nodes});
  return out;
}

}  // namespace

SolveResult search_decompositions(const WeightedGraph& g, Target target, SolveMode mode,
                                  const SolveLimits& limits) {
  require_minimal(g);
  return DecompositionSearch(g, target, mode, limits).run();
}

SolveResult solve_irreducible(const SolveRequest& request) {
  if (!is_irreducible(request.graph)) {
    throw std::invalid_argument("solve_irreducible: graph has more than one edge class");
  }
  return search_decompositions(request.graph, request.target, request.mode, request.limits);
}

SolveResult solve(const SolveRequest& request) {
  const WeightedGraph& g = request.graph;
  require_minimal(g);
  const Pseudofactorization pf = pseudofactorize(g);
  const std::vector<SolveResult> per_factor =
      solve_factors(pf, request.target, request.mode, request.limits);

  SolveResult result;
  result.factors = summarize(per_factor);
  for (const auto& r : per_factor) result.nodes += r.nodes;

  for (int i = 0; i < pf.factor_count(); ++i) {
    if (per_factor[i].status == SolveStatus::not_embeddable) {
      result.status = SolveStatus::not_embeddable;
      result.failing_factor = i;
      result.detail = per_factor[i].detail;
      if (request.mode == SolveMode::enumerate_all) result.count = 0;
      return result;
    }
  }
  for (int i = 0; i < pf.factor_count(); ++i) {
    if (per_factor[i].status == SolveStatus::resource_exhausted) {
      result.status = SolveStatus::resource_exhausted;
      result.failing_factor = i;
      result.detail = per_factor[i].detail;
      return result;
    }
  }

  result.status = SolveStatus::embeddable;
  if (request.mode == SolveMode::decide) return result;

  if (request.mode == SolveMode::enumerate_all) {
    std::uint64_t total = 1;
    for (const auto& r : per_factor) total *= *r.count;
    result.count = total;
  }

  // Odometer over one witness per factor; find_one takes the first.
  std::vector<std::size_t> pick(pf.factor_count(), 0);
  const std::size_t wanted =
      request.mode == SolveMode::find_one ? 1 : request.limits.max_witnesses;
  while (result.embeddings.size() < wanted) {
    std::vector<HammingEmbedding> parts;
    for (int i = 0; i < pf.factor_count(); ++i)
      parts.push_back(per_factor[i].embeddings[pick[i]]);
    HammingEmbedding composed = compose_embeddings(g, pf, parts);
    result.witnesses.push_back(to_multiset(g, composed));
    result.embeddings.push_back(std::move(composed));

    int i = pf.factor_count() - 1;
    for (; i >= 0; --i) {
      if (++pick[i] < per_factor[i].embeddings.size()) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }
  return result;
}

CountResult count_embeddings(const WeightedGraph& g, Target target, const SolveLimits& limits) {
  require_minimal(g);
  const Pseudofactorization pf = pseudofactorize(g);
  const auto per_factor = solve_factors(pf, target, SolveMode::enumerate_all, limits);

  CountResult out;
  bool any_zero = false;
  bool any_unknown = false;
  std::uint64_t total = 1;
  for (const auto& r : per_factor) {
    out.factors.push_back(r.count);
    if (!r.count) {
      any_unknown = true;
    } else {
      if (*r.count == 0) any_zero = true;
      total *= *r.count;
    }
  }
  if (any_zero) {
    out.total = 0;
    out.status = SolveStatus::not_embeddable;
  } else if (any_unknown) {
    out.status = SolveStatus::resource_exhausted;
  } else {
    out.total = total;
    out.status = SolveStatus::embeddable;
  }
  return out;
}

}  // namespace hamming
