#include "matcharr/awp.hpp"

#include <algorithm>
#include <map>

namespace matcharr {

namespace {

std::uint64_t pow3(unsigned e) {
  std::uint64_t v = 1;
  while (e--) v *= 3;
  return v;
}

EdgeIndex km_edge_index(const Graph& km, VertexId q, VertexId r) {
  Edge key{std::min(q, r), std::max(q, r)};
  auto it = std::lower_bound(km.edges().begin(), km.edges().end(), key);
  return static_cast<EdgeIndex>(it - km.edges().begin());
}

}  // namespace

EasyInstance easy_weights(unsigned m, std::uint64_t p) {
  if (m < 2) fail(errc::too_small, "easy instance needs m >= 2");
  if (!is_prime(p)) fail(errc::bad_format, "p must be prime");
  if (p <= 2 * pow3(m - 2))
    fail(errc::prime_too_small, "greedy classification needs p > 2*3^(m-2) = " +
                                    std::to_string(2 * pow3(m - 2)));
  EasyInstance inst;
  inst.m = m;
  inst.p = p;
  inst.graph = complete_graph(m);
  inst.weights.p = p;
  inst.weights.k = m;
  inst.weights.rows.assign(inst.graph.edge_count(), std::vector<std::uint64_t>(m, 0));
  for (EdgeIndex e = 0; e < inst.graph.edge_count(); ++e) {
    auto [q, r] = inst.graph.edge(e);
    inst.weights.rows[e][q] = pow3(r - q - 1) % p;
    inst.weights.rows[e][r] = 1;
  }
  return inst;
}

std::vector<std::uint64_t> greedy_lookup_keys(unsigned m, std::uint64_t p) {
  std::vector<std::uint64_t> keys;
  for (unsigned t = 0; t < m; ++t) {
    keys.push_back(pow3(t) % p);
    keys.push_back((p - pow3(t) % p) % p);
  }
  for (unsigned b = 1; b < m; ++b) {
    for (unsigned c = 0; c < b; ++c) {
      const std::uint64_t d = (pow3(b) - pow3(c)) % p;
      keys.push_back(d);
      keys.push_back((p - d) % p);
    }
  }
  return keys;  // m(m+1) entries
}

namespace {

struct LookupEntry {
  bool pair = false;
  int sign = 1;       // sign of the leading power in the residue
  unsigned b = 0, c = 0;  // exponents; pair means ±(3^b - 3^c), b > c
};

// residue -> classification, over the exponents a step can actually
// produce (<= m-2). Distinctness is guaranteed by p > 2*3^(m-2).
std::map<std::uint64_t, LookupEntry> build_lookup(unsigned m, std::uint64_t p) {
  std::map<std::uint64_t, LookupEntry> lut;
  auto insert = [&](std::uint64_t key, LookupEntry e) {
    auto [it, fresh] = lut.emplace(key, e);
    if (!fresh) fail(errc::prime_too_small, "ambiguous greedy lookup table");
  };
  for (unsigned t = 0; t + 2 <= m; ++t) {
    insert(pow3(t) % p, LookupEntry{false, 1, t, 0});
    insert((p - pow3(t) % p) % p, LookupEntry{false, -1, t, 0});
  }
  for (unsigned b = 1; b + 2 <= m; ++b) {
    for (unsigned c = 0; c < b; ++c) {
      const std::uint64_t d = (pow3(b) - pow3(c)) % p;
      insert(d, LookupEntry{true, 1, b, c});
      insert((p - d) % p, LookupEntry{true, -1, b, c});
    }
  }
  return lut;
}

// Chains the stored signed edges into a single simple path or even cycle
// and orients it so its alternating sum equals the target. Returns nullopt
// when the edge set does not assemble or no orientation matches.
std::optional<AltSeq> assemble(const EasyInstance& inst,
                               const std::vector<std::pair<EdgeIndex, int>>& stored,
                               const FpVector& target) {
  if (stored.empty()) return std::nullopt;
  std::map<VertexId, std::vector<EdgeIndex>> adj;
  for (auto [e, sign] : stored) {
    auto [u, v] = inst.graph.edge(e);
    adj[u].push_back(e);
    adj[v].push_back(e);
  }
  std::vector<VertexId> endpoints;
  for (auto& [v, es] : adj) {
    if (es.size() > 2) return std::nullopt;
    if (es.size() == 1) endpoints.push_back(v);
  }
  const bool is_path = endpoints.size() == 2;
  if (!is_path && !endpoints.empty()) return std::nullopt;
  if (!is_path && stored.size() % 2 != 0) return std::nullopt;

  VertexId start = is_path ? *std::min_element(endpoints.begin(), endpoints.end())
                           : adj.begin()->first;
  std::vector<EdgeIndex> order;
  std::map<EdgeIndex, bool> used;
  VertexId cur = start;
  for (std::size_t step = 0; step < stored.size(); ++step) {
    EdgeIndex next = inst.graph.edge_count();
    for (EdgeIndex e : adj[cur]) {
      if (!used[e]) {
        next = e;
        break;
      }
    }
    if (next == inst.graph.edge_count()) return std::nullopt;  // disconnected set
    used[next] = true;
    order.push_back(next);
    auto [u, v] = inst.graph.edge(next);
    cur = (cur == u) ? v : u;
  }
  if (is_path && cur == start) return std::nullopt;
  if (!is_path && cur != start) return std::nullopt;

  AltSeq seq;
  try {
    seq = AltSeq::from_edges(inst.graph, order);
  } catch (const Error&) {
    return std::nullopt;
  }
  auto matches = [&](const AltSeq& s) { return alternating_sum(inst.weights, s) == target; };
  if (matches(seq)) return seq;
  if (seq.kind == AltSeq::Kind::Path) {
    std::reverse(seq.edges.begin(), seq.edges.end());
    if (matches(seq)) return seq;
  } else {
    // rotating an even cycle by one position negates the sum
    std::rotate(seq.edges.begin(), seq.edges.begin() + 1, seq.edges.end());
    if (matches(seq)) return seq;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AltSeq> solve_easy_awp(const FpVector& target, const EasyInstance& inst,
                                     SolveTrace* trace) {
  const unsigned m = inst.m;
  const std::uint64_t p = inst.p;
  if (target.p != p || target.entries.size() != m)
    fail(errc::bad_format, "target vector must live in F_p^m");
  const auto lut = build_lookup(m, p);
  std::vector<std::uint64_t> B = target.entries;
  std::vector<std::pair<EdgeIndex, int>> stored;
  if (trace) {
    trace->residuals.clear();
    trace->stored.clear();
  }

  auto store = [&](VertexId q, VertexId r, int sign) -> bool {
    if (r >= m) return false;  // residue names a vertex the graph lacks
    const EdgeIndex e = km_edge_index(inst.graph, q, r);
    stored.emplace_back(e, sign);
    const auto& row = inst.weights.rows[e];
    for (unsigned t = 0; t < m; ++t)
      B[t] = sign > 0 ? sub_mod(B[t], row[t], p) : add_mod(B[t], row[t], p);
    return true;
  };

  for (unsigned i = 0; i + 1 < m; ++i) {
    const std::uint64_t x = B[i];
    if (x != 0) {
      auto it = lut.find(x);
      if (it == lut.end()) return std::nullopt;
      const LookupEntry& entry = it->second;
      if (!entry.pair) {
        if (!store(i, i + entry.b + 1, entry.sign)) return std::nullopt;
      } else {
        // ±(3^b - 3^c): the 3^b edge carries the leading sign, the 3^c edge
        // the opposite one
        if (!store(i, i + entry.b + 1, entry.sign)) return std::nullopt;
        if (!store(i, i + entry.c + 1, -entry.sign)) return std::nullopt;
      }
    }
    if (trace) {
      trace->residuals.push_back(B);
      trace->stored = stored;
    }
  }
  auto seq = assemble(inst, stored, target);
  return seq;
}

LetterMap default_letter_map(unsigned m) {
  LetterMap map;
  if (m == 4) {
    const char letters[6] = {'A', 'I', 'N', 'K', 'O', 'M'};
    for (EdgeIndex e = 0; e < 6; ++e) map[e] = letters[e];
    return map;
  }
  const unsigned edges = m * (m - 1) / 2;
  for (EdgeIndex e = 0; e < edges && e < 26; ++e) map[e] = static_cast<char>('A' + e);
  return map;
}

KeyPair keygen(unsigned m, std::uint64_t p, std::uint64_t seed) {
  if (m < 2) fail(errc::too_small, "keygen needs m >= 2");
  if (!is_prime(p)) fail(errc::bad_format, "p must be prime");
  if (p <= 2 * pow3(m - 1))
    fail(errc::prime_too_small,
         "admissible primes satisfy p > 2*3^(m-1) = " + std::to_string(2 * pow3(m - 1)));
  const EasyInstance easy = easy_weights(m, p);
  std::mt19937_64 rng(seed);
  ModMatrix M(m, std::vector<std::uint64_t>(m, 0));
  ModMatrix M_inv;
  do {
    for (auto& row : M)
      for (auto& x : row) x = uniform_below(rng, p);
  } while (!invert_mod_matrix(M, p, M_inv));

  KeyPair kp;
  kp.M = M;
  kp.M_inv = M_inv;
  kp.pub.m = m;
  kp.pub.p = p;
  kp.pub.letter_map = default_letter_map(m);
  kp.pub.weights.p = p;
  kp.pub.weights.k = m;
  kp.pub.weights.rows.reserve(easy.weights.rows.size());
  for (const auto& row : easy.weights.rows)
    kp.pub.weights.rows.push_back(mat_vec_mod(M_inv, row, p));
  return kp;
}

Ciphertext encrypt(const PublicKey& pub, const AltSeq& seq) {
  const Graph km = complete_graph(pub.m);
  AltSeq checked = AltSeq::from_edges(km, seq.edges);  // validates simplicity
  if (checked.kind != AltSeq::Kind::Path)
    fail(errc::not_a_simple_path, "message space is simple paths");
  if (checked.length() % 2 != 0)
    fail(errc::odd_length_message, "only even-length paths are sendable");
  Ciphertext c;
  c.vector = alternating_sum(pub.weights, checked);
  return c;
}

AltSeq decrypt(const KeyPair& kp, const Ciphertext& c) {
  if (c.vector.p != kp.pub.p || c.vector.entries.size() != kp.pub.m)
    fail(errc::bad_format, "ciphertext has the wrong shape");
  const EasyInstance easy = easy_weights(kp.pub.m, kp.pub.p);
  FpVector b;
  b.p = kp.pub.p;
  b.entries = mat_vec_mod(kp.M, c.vector.entries, kp.pub.p);
  auto seq = solve_easy_awp(b, easy);
  if (!seq) fail(errc::decryption_failed, "easy solver found no witness");
  if (seq->kind != AltSeq::Kind::Path || seq->length() % 2 != 0)
    fail(errc::decryption_failed, "witness is not an even-length path");
  // the solver already oriented the path so that its easy alternating sum
  // equals b; for even length the reverse orientation would negate it
  return *seq;
}

AltSeq encode_message(const Graph& km, const LetterMap& map, const std::string& text) {
  std::map<char, EdgeIndex> inverse;
  for (const auto& [e, ch] : map) inverse.emplace(ch, e);  // first edge wins
  std::vector<EdgeIndex> edges;
  for (char ch : text) {
    auto it = inverse.find(ch);
    if (it == inverse.end()) fail(errc::unknown_symbol, std::string("'") + ch + "'");
    edges.push_back(it->second);
  }
  AltSeq seq;
  try {
    seq = AltSeq::from_edges(km, edges);
  } catch (const Error&) {
    fail(errc::not_encodable_as_path, "\"" + text + "\"");
  }
  if (seq.kind != AltSeq::Kind::Path || seq.length() % 2 != 0)
    fail(errc::not_encodable_as_path, "\"" + text + "\" is not an even-length simple path");
  return seq;
}

std::string decode_message(const LetterMap& map, const AltSeq& seq) {
  std::string out;
  for (EdgeIndex e : seq.edges) {
    auto it = map.find(e);
    if (it == map.end()) fail(errc::unknown_symbol, "edge " + std::to_string(e) + " unmapped");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace matcharr
