#pragma once

#include <stdexcept>
#include <string>

namespace hamming {

// Structural problems with a graph: bad vertex ids, self-loops, parallel
// edges, non-positive weights.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraphError : public GraphError {
 public:
  DisconnectedGraphError(int u, int v)
      : GraphError("graph is disconnected: no path between vertex " +
                   std::to_string(u) + " and vertex " + std::to_string(v)),
        u_(u),
        v_(v) {}

  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

// Raised by operations whose theory only holds for minimal graphs.
class NotMinimalError : public std::invalid_argument {
 public:
  NotMinimalError(int u, int v)
      : std::invalid_argument("graph is not minimal: edge {" +
                              std::to_string(u) + "," + std::to_string(v) +
                              "} is heavier than the distance between its "
                              "endpoints"),
        u_(u),
        v_(v) {}

  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

// Malformed or non-isometric Hamming embeddings.
class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input that cannot be decoded (graph JSON, embedding TSV).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hamming
