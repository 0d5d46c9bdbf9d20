#ifndef MATCHARR_GRAPH_HPP
#define MATCHARR_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "matcharr/errors.hpp"

namespace matcharr {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;  // stored with first < second

// Simple undirected graph. Edges are canonicalized (u < v) and sorted;
// the edge index is the position in the sorted list.
class Graph {
 public:
  Graph() = default;

  VertexId vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_[i]; }

  // adjacency: per vertex, (neighbor, edge index) sorted by neighbor
  const std::vector<std::vector<std::pair<VertexId, EdgeIndex>>>& adjacency() const {
    return adj_;
  }

  friend Graph validate_graph(VertexId vertex_count, std::vector<Edge> raw_edges, bool strict);

 private:
  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeIndex>>> adj_;
};

// Canonicalizes, sorts and validates an edge list. With strict = true,
// isolated vertices are rejected (the weight-problem hypothesis).
Graph validate_graph(VertexId vertex_count, std::vector<Edge> raw_edges, bool strict = false);

// fixtures used throughout the CLI and tests
Graph cycle_graph(unsigned n);
Graph path_graph(unsigned n_edges);
Graph triangle_tail_graph(unsigned n_edges);  // K3 plus a tail, n_edges >= 4
Graph complete_graph(unsigned m);

// An ordered sequence of distinct edges forming a simple path or a simple
// even cycle. Position j (0-based) carries sign (-1)^j. The stored order is
// as constructed (orientation matters to the crypto layer); canonical() maps
// to the lexicographically least representative.
struct AltSeq {
  enum class Kind { Path, EvenCycle };

  Kind kind = Kind::Path;
  std::vector<EdgeIndex> edges;

  std::size_t length() const { return edges.size(); }

  AltSeq canonical() const;
  bool operator==(const AltSeq& o) const { return kind == o.kind && edges == o.edges; }
  bool operator<(const AltSeq& o) const {
    if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
    return edges < o.edges;
  }

  // Validates that the edge indices trace a simple path / simple even cycle
  // in g and infers the kind.
  static AltSeq from_edges(const Graph& g, std::vector<EdgeIndex> edges);

  // Vertex walk v_0..v_L induced by the edge order (v_0 = v_L for cycles).
  std::vector<VertexId> walk(const Graph& g) const;
};

struct SignVector {
  std::vector<int> coefficients;  // entries in {-1, 0, +1}, length n
};

// Eq.-pattern sign vector: entry (-1)^j at edges[j], 0 elsewhere.
SignVector sign_vector(const AltSeq& seq, std::size_t n);

// Every simple path (length >= 1) and simple even cycle, once each in
// canonical form, sorted by (length, lexicographic edge list). Exponential
// in the worst case; meant for graphs up to ~16 edges.
std::vector<AltSeq> enumerate_alt_seqs(const Graph& g);

}  // namespace matcharr

#endif
