#include "matcharr/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace matcharr {

Graph validate_graph(VertexId vertex_count, std::vector<Edge> raw_edges, bool strict) {
  for (auto& [u, v] : raw_edges) {
    if (u == v) fail(errc::loop_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    if (v >= vertex_count)
      fail(errc::vertex_out_of_range,
           "vertex " + std::to_string(v) + " >= " + std::to_string(vertex_count));
  }
  std::sort(raw_edges.begin(), raw_edges.end());
  for (std::size_t i = 1; i < raw_edges.size(); ++i) {
    if (raw_edges[i] == raw_edges[i - 1])
      fail(errc::duplicate_edge, "edge (" + std::to_string(raw_edges[i].first) + "," +
                                     std::to_string(raw_edges[i].second) + ")");
  }
  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(raw_edges);
  g.adj_.assign(vertex_count, {});
  for (EdgeIndex i = 0; i < g.edges_.size(); ++i) {
    auto [u, v] = g.edges_[i];
    g.adj_[u].emplace_back(v, i);
    g.adj_[v].emplace_back(u, i);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  if (strict) {
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (g.adj_[v].empty()) fail(errc::isolated_vertex, "vertex " + std::to_string(v));
    }
  }
  return g;
}

Graph cycle_graph(unsigned n) {
  std::vector<Edge> es;
  for (unsigned i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return validate_graph(n, std::move(es), true);
}

Graph path_graph(unsigned n_edges) {
  std::vector<Edge> es;
  for (unsigned i = 0; i < n_edges; ++i) es.emplace_back(i, i + 1);
  return validate_graph(n_edges + 1, std::move(es), true);
}

Graph triangle_tail_graph(unsigned n_edges) {
  if (n_edges < 4) fail(errc::too_small, "triangle-with-tail needs >= 4 edges");
  std::vector<Edge> es = {{0, 1}, {1, 2}, {0, 2}};
  VertexId prev = 0;
  for (unsigned t = 0; t < n_edges - 3; ++t) {
    VertexId next = 3 + t;
    es.emplace_back(prev, next);
    prev = next;
  }
  return validate_graph(n_edges, std::move(es), true);
}

Graph complete_graph(unsigned m) {
  std::vector<Edge> es;
  for (unsigned u = 0; u < m; ++u)
    for (unsigned v = u + 1; v < m; ++v) es.emplace_back(u, v);
  return validate_graph(m, std::move(es), true);
}

namespace {

std::vector<EdgeIndex> canonical_cycle_edges(const std::vector<EdgeIndex>& seq) {
  const std::size_t L = seq.size();
  std::vector<EdgeIndex> best = seq;
  std::vector<EdgeIndex> cand(L);
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t j = 0; j < L; ++j) cand[j] = seq[(r + j) % L];
    if (cand < best) best = cand;
    std::reverse(cand.begin(), cand.end());
    if (cand < best) best = cand;
  }
  return best;
}

bool path_is_canonical(const std::vector<EdgeIndex>& seq) {
  // compare against the reversal without materializing it
  std::size_t L = seq.size();
  for (std::size_t j = 0; j < L; ++j) {
    if (seq[j] != seq[L - 1 - j]) return seq[j] < seq[L - 1 - j];
  }
  return true;
}

}  // namespace

AltSeq AltSeq::canonical() const {
  AltSeq out;
  out.kind = kind;
  if (kind == Kind::Path) {
    out.edges = edges;
    if (!path_is_canonical(out.edges)) std::reverse(out.edges.begin(), out.edges.end());
  } else {
    out.edges = canonical_cycle_edges(edges);
  }
  return out;
}

std::vector<VertexId> AltSeq::walk(const Graph& g) const {
  std::vector<VertexId> vs;
  if (edges.empty()) return vs;
  auto [u0, v0] = g.edge(edges[0]);
  if (edges.size() == 1) return {u0, v0};
  auto [u1, v1] = g.edge(edges[1]);
  VertexId shared = (u0 == u1 || u0 == v1) ? u0 : v0;
  vs.push_back(u0 == shared ? v0 : u0);
  vs.push_back(shared);
  for (std::size_t j = 1; j < edges.size(); ++j) {
    auto [a, b] = g.edge(edges[j]);
    VertexId cur = vs.back();
    if (a != cur && b != cur)
      fail(errc::not_a_simple_path, "edges " + std::to_string(edges[j - 1]) + "," +
                                        std::to_string(edges[j]) + " do not share a vertex");
    vs.push_back(a == cur ? b : a);
  }
  return vs;
}

AltSeq AltSeq::from_edges(const Graph& g, std::vector<EdgeIndex> edge_indices) {
  if (edge_indices.empty()) fail(errc::not_a_simple_path, "empty edge sequence");
  std::set<EdgeIndex> seen;
  for (EdgeIndex e : edge_indices) {
    if (e >= g.edge_count()) fail(errc::index_out_of_range, "edge index " + std::to_string(e));
    if (!seen.insert(e).second) fail(errc::not_a_simple_path, "repeated edge " + std::to_string(e));
  }
  AltSeq seq;
  seq.edges = std::move(edge_indices);
  seq.kind = Kind::Path;
  auto vs = seq.walk(g);
  std::set<VertexId> distinct(vs.begin(), vs.end());
  if (distinct.size() == vs.size()) {
    seq.kind = Kind::Path;
  } else if (vs.front() == vs.back() && distinct.size() == vs.size() - 1) {
    if (seq.edges.size() % 2 != 0 || seq.edges.size() < 4)
      fail(errc::not_a_simple_path, "cycle length must be even and >= 4");
    seq.kind = Kind::EvenCycle;
  } else {
    fail(errc::not_a_simple_path, "edge sequence revisits a vertex");
  }
  return seq;
}

SignVector sign_vector(const AltSeq& seq, std::size_t n) {
  SignVector sv;
  sv.coefficients.assign(n, 0);
  for (std::size_t j = 0; j < seq.edges.size(); ++j) {
    if (seq.edges[j] >= n) fail(errc::index_out_of_range, "edge index " + std::to_string(seq.edges[j]));
    sv.coefficients[seq.edges[j]] = (j % 2 == 0) ? 1 : -1;
  }
  return sv;
}

namespace {

struct Enumerator {
  const Graph& g;
  std::vector<char> used_edge;
  std::vector<char> visited;
  std::vector<EdgeIndex> seq;
  VertexId start = 0;
  std::vector<AltSeq>* out;

  explicit Enumerator(const Graph& graph, std::vector<AltSeq>* sink)
      : g(graph),
        used_edge(graph.edge_count(), 0),
        visited(graph.vertex_count(), 0),
        out(sink) {}

  // Each path is generated from both endpoints, each cycle in all 2L
  // rotational/reflected forms; keeping only the self-canonical copy
  // deduplicates without a hash set. Single edges read the same from either
  // side, so those are tied to the lower endpoint.
  void record_path() {
    if (seq.size() == 1 && start != g.edge(seq[0]).first) return;
    if (!path_is_canonical(seq)) return;
    AltSeq s;
    s.kind = AltSeq::Kind::Path;
    s.edges = seq;
    out->push_back(std::move(s));
  }

  void record_cycle() {
    if (seq != canonical_cycle_edges(seq)) return;
    AltSeq s;
    s.kind = AltSeq::Kind::EvenCycle;
    s.edges = seq;
    out->push_back(std::move(s));
  }

  void dfs(VertexId cur) {
    for (auto [w, ei] : g.adjacency()[cur]) {
      if (used_edge[ei]) continue;
      seq.push_back(ei);
      if (w == start && seq.size() >= 4 && seq.size() % 2 == 0) record_cycle();
      if (!visited[w]) {
        record_path();
        visited[w] = 1;
        used_edge[ei] = 1;
        dfs(w);
        used_edge[ei] = 0;
        visited[w] = 0;
      }
      seq.pop_back();
    }
  }

  void run() {
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      start = s;
      visited[s] = 1;
      dfs(s);
      visited[s] = 0;
    }
  }
};

}  // namespace

std::vector<AltSeq> enumerate_alt_seqs(const Graph& g) {
  std::vector<AltSeq> out;
  Enumerator e(g, &out);
  e.run();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matcharr
