#include "matcharr/weightfn.hpp"

#include <algorithm>

#include "matcharr/modarith.hpp"

namespace matcharr {

WeightFunction WeightFunction::from_signed(std::uint64_t p, std::size_t k,
                                           const std::vector<std::vector<long long>>& rows) {
  WeightFunction w;
  w.p = p;
  w.k = k;
  w.rows.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != k) fail(errc::bad_format, "weight row width != k");
    std::vector<std::uint64_t> out(k);
    for (std::size_t c = 0; c < k; ++c) out[c] = mod_norm(r[c], p);
    w.rows.push_back(std::move(out));
  }
  return w;
}

FpVector alternating_sum(const WeightFunction& w, const AltSeq& seq) {
  FpVector acc;
  acc.p = w.p;
  acc.entries.assign(w.k, 0);
  for (std::size_t j = 0; j < seq.edges.size(); ++j) {
    EdgeIndex e = seq.edges[j];
    if (e >= w.rows.size())
      fail(errc::edge_index_out_of_range, "edge " + std::to_string(e));
    const bool plus = (j % 2 == 0);
    for (std::size_t c = 0; c < w.k; ++c) {
      acc.entries[c] = plus ? add_mod(acc.entries[c], w.rows[e][c], w.p)
                            : sub_mod(acc.entries[c], w.rows[e][c], w.p);
    }
  }
  return acc;
}

namespace {

// DFS over all simple walks, keeping the alternating sum incrementally as a
// sparse update per extension plus a nonzero-coordinate counter. Every
// zero-sum path/even cycle becomes a candidate; the (length, lex)-least
// canonical form wins, which matches the enumeration order.
struct WitnessSearch {
  const Graph& g;
  std::uint64_t p;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> sparse;  // per edge
  std::vector<std::uint64_t> acc;
  std::size_t nonzero = 0;
  std::vector<char> used_edge, visited;
  std::vector<EdgeIndex> seq;
  VertexId start = 0;
  std::optional<AltSeq> best;

  WitnessSearch(const Graph& graph, const WeightFunction& w)
      : g(graph), p(w.p), acc(w.k, 0),
        used_edge(graph.edge_count(), 0), visited(graph.vertex_count(), 0) {
    sparse.resize(w.rows.size());
    for (std::size_t e = 0; e < w.rows.size(); ++e)
      for (std::size_t c = 0; c < w.k; ++c)
        if (w.rows[e][c]) sparse[e].emplace_back(static_cast<std::uint32_t>(c), w.rows[e][c]);
  }

  void apply(EdgeIndex e, bool plus) {
    for (auto [c, val] : sparse[e]) {
      std::uint64_t before = acc[c];
      acc[c] = plus ? add_mod(before, val, p) : sub_mod(before, val, p);
      if (before == 0 && acc[c] != 0) ++nonzero;
      if (before != 0 && acc[c] == 0) --nonzero;
    }
  }

  void consider(AltSeq::Kind kind) {
    AltSeq cand;
    cand.kind = kind;
    cand.edges = seq;
    cand = cand.canonical();
    if (!best || cand < *best) best = std::move(cand);
  }

  void dfs(VertexId cur) {
    if (best && seq.size() >= best->length()) return;  // longer cannot win
    for (auto [w, ei] : g.adjacency()[cur]) {
      if (used_edge[ei]) continue;
      const bool plus = (seq.size() % 2 == 0);
      apply(ei, plus);
      seq.push_back(ei);
      if (w == start && seq.size() >= 4 && seq.size() % 2 == 0 && nonzero == 0)
        consider(AltSeq::Kind::EvenCycle);
      if (!visited[w]) {
        if (nonzero == 0) consider(AltSeq::Kind::Path);
        visited[w] = 1;
        used_edge[ei] = 1;
        dfs(w);
        used_edge[ei] = 0;
        visited[w] = 0;
      }
      seq.pop_back();
      apply(ei, !plus);
    }
  }

  std::optional<AltSeq> run() {
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      start = s;
      visited[s] = 1;
      dfs(s);
      visited[s] = 0;
    }
    return best;
  }
};

}  // namespace

Classification classify_weight_function(const Graph& g, const WeightFunction& w) {
  if (w.rows.size() != g.edge_count())
    fail(errc::edge_index_out_of_range, "weight table has " + std::to_string(w.rows.size()) +
                                            " rows for " + std::to_string(g.edge_count()) +
                                            " edges");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.adjacency()[v].empty()) fail(errc::isolated_vertex, "vertex " + std::to_string(v));
  WitnessSearch search(g, w);
  Classification res;
  res.witness = search.run();
  res.proper = !res.witness.has_value();
  return res;
}

std::uint64_t count_proper_functions(const Graph& g, std::uint64_t p, std::size_t k,
                                     std::uint64_t candidate_limit) {
  const std::size_t n = g.edge_count();
  const std::size_t cells = n * k;
  unsigned __int128 space = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    space *= p;
    if (space > candidate_limit)
      fail(errc::search_space_too_large,
           "p^(n*k) exceeds the configured limit of " + std::to_string(candidate_limit));
  }

  const auto seqs = enumerate_alt_seqs(g);
  // precompute (edge, sign) per sequence
  std::vector<std::vector<std::pair<EdgeIndex, bool>>> signed_seqs;
  signed_seqs.reserve(seqs.size());
  for (const auto& s : seqs) {
    std::vector<std::pair<EdgeIndex, bool>> sg;
    for (std::size_t j = 0; j < s.edges.size(); ++j) sg.emplace_back(s.edges[j], j % 2 == 0);
    signed_seqs.push_back(std::move(sg));
  }

  std::vector<std::uint64_t> table(cells, 0);  // row-major n x k odometer
  std::uint64_t proper = 0;
  while (true) {
    bool improper = false;
    for (const auto& sg : signed_seqs) {
      bool zero = true;
      for (std::size_t c = 0; c < k && zero; ++c) {
        std::uint64_t acc = 0;
        for (auto [e, plus] : sg) {
          std::uint64_t val = table[e * k + c];
          acc = plus ? add_mod(acc, val, p) : sub_mod(acc, val, p);
        }
        zero = (acc == 0);
      }
      if (zero) {
        improper = true;
        break;
      }
    }
    if (!improper) ++proper;
    // advance odometer
    std::size_t pos = 0;
    while (pos < cells && ++table[pos] == p) table[pos++] = 0;
    if (pos == cells) break;
  }
  return proper;
}

}  // namespace matcharr
