#include "matcharr/satreduce.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "matcharr/modarith.hpp"

namespace matcharr {

namespace {

// truth patterns (t_alpha, t_beta, t_gamma) of rows R_{j,1}..R_{j,7};
// the all-false row does not exist, which is the whole point.
constexpr bool kRowPattern[7][3] = {
    {true, true, true},  {true, true, false},  {true, false, true}, {true, false, false},
    {false, true, true}, {false, true, false}, {false, false, true},
};

// -1 coordinate masks on the P_j-side edges, per clause slot. The -1 has to
// sit on an odd path position (2n+2j-1, the P_j edge) so it cancels the
// matching literal edge's +1 at odd position 2i-1; on the Q_j side (an even
// position) the canonical path would sum to 2, not 0, for every p > 2.
constexpr int kSlotRows[3][4] = {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}};

int row_for_pattern(bool a, bool b, bool c) {
  for (int s = 0; s < 7; ++s)
    if (kRowPattern[s][0] == a && kRowPattern[s][1] == b && kRowPattern[s][2] == c) return s + 1;
  return 0;  // all-false: no row
}

}  // namespace

Cnf3 parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Cnf3 cnf;
  unsigned declared_clauses = 0;
  bool have_header = false;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> cnf.var_count >> declared_clauses) || p != "p" || fmt != "cnf")
        fail(errc::parse_error, "expected DIMACS header 'p cnf <vars> <clauses>'");
      have_header = true;
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          fail(errc::clause_arity,
               "clause has " + std::to_string(pending.size()) + " literals, need 3");
        std::array<Literal, 3> clause;
        for (int t = 0; t < 3; ++t) {
          unsigned var = static_cast<unsigned>(std::abs(pending[t])) - 1;
          if (var >= cnf.var_count)
            fail(errc::parse_error, "literal " + std::to_string(pending[t]) + " out of range");
          clause[t] = Literal{var, pending[t] > 0};
        }
        if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
            clause[1].var == clause[2].var)
          fail(errc::repeated_variable_in_clause, "clause " + std::to_string(cnf.clauses.size() + 1));
        cnf.clauses.push_back(clause);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!have_header) fail(errc::parse_error, "missing DIMACS header");
  if (!pending.empty()) fail(errc::parse_error, "clause not terminated by 0");
  if (cnf.clauses.size() != declared_clauses)
    fail(errc::parse_error, "header declares " + std::to_string(declared_clauses) +
                                " clauses, found " + std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string to_dimacs(const Cnf3& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.var_count << " " << cnf.clauses.size() << "\n";
  for (const auto& cl : cnf.clauses) {
    for (const auto& lit : cl) os << (lit.positive ? "" : "-") << (lit.var + 1) << " ";
    os << "0\n";
  }
  return os.str();
}

bool clause_satisfied(const std::array<Literal, 3>& clause, const std::vector<bool>& values) {
  for (const auto& lit : clause)
    if (values[lit.var] == lit.positive) return true;
  return false;
}

bool cnf_satisfied(const Cnf3& cnf, const std::vector<bool>& values) {
  for (const auto& cl : cnf.clauses)
    if (!clause_satisfied(cl, values)) return false;
  return true;
}

VertexId ReductionInstance::vertex(const std::string& label) const {
  auto it = vertex_labels.find(label);
  if (it == vertex_labels.end()) fail(errc::bad_format, "unknown vertex label " + label);
  return it->second;
}

EdgeIndex ReductionInstance::edge(const std::string& label) const {
  auto it = edge_labels.find(label);
  if (it == edge_labels.end()) fail(errc::bad_format, "unknown edge label " + label);
  return it->second;
}

std::string ReductionInstance::edge_name(EdgeIndex e) const {
  for (const auto& [name, idx] : edge_labels)
    if (idx == e) return name;
  return "e" + std::to_string(e);
}

ReductionInstance build_reduction(const Cnf3& cnf, std::uint64_t p) {
  if (!is_prime(p)) fail(errc::bad_format, "p must be prime");
  const unsigned n = cnf.var_count;
  const unsigned m = static_cast<unsigned>(cnf.clauses.size());
  if (n == 0 || m == 0) fail(errc::bad_format, "reduction needs >= 1 variable and >= 1 clause");
  std::vector<char> used(n, 0);
  for (const auto& cl : cnf.clauses)
    for (const auto& lit : cl) used[lit.var] = 1;
  for (unsigned v = 0; v < n; ++v)
    if (!used[v])
      fail(errc::bad_format, "variable x" + std::to_string(v + 1) +
                                 " occurs in no clause; its gadget cycle would be a zero-sum "
                                 "witness regardless of satisfiability");

  ReductionInstance inst;
  inst.p = p;
  inst.var_count = n;
  inst.clause_count = m;
  inst.k = 3ull * n + 11ull * m - 1;

  // vertex ids: A_1 = 0; B_i,C_i,D_i = 3(i-1)+1..3(i-1)+3; R_{j,s} = 3n+8(j-1)+s;
  // Q_j = 3n+8j. Shared: A_{i+1} = C_i, P_1 = C_n, P_{j+1} = Q_j.
  const VertexId vcount = 3 * n + 8 * m + 1;
  auto A = [&](unsigned i) -> VertexId { return i == 1 ? 0 : 3 * (i - 1) - 1; };
  auto B = [&](unsigned i) -> VertexId { return 3 * (i - 1) + 1; };
  auto C = [&](unsigned i) -> VertexId { return 3 * (i - 1) + 2; };
  auto D = [&](unsigned i) -> VertexId { return 3 * (i - 1) + 3; };
  auto R = [&](unsigned j, unsigned s) -> VertexId { return 3 * n + 8 * (j - 1) + s; };
  auto Q = [&](unsigned j) -> VertexId { return 3 * n + 8 * j; };
  auto P = [&](unsigned j) -> VertexId { return j == 1 ? C(n) : Q(j - 1); };

  for (unsigned i = 1; i <= n; ++i) {
    inst.vertex_labels["A_" + std::to_string(i)] = A(i);
    inst.vertex_labels["B_" + std::to_string(i)] = B(i);
    inst.vertex_labels["C_" + std::to_string(i)] = C(i);
    inst.vertex_labels["D_" + std::to_string(i)] = D(i);
  }
  for (unsigned j = 1; j <= m; ++j) {
    inst.vertex_labels["P_" + std::to_string(j)] = P(j);
    inst.vertex_labels["Q_" + std::to_string(j)] = Q(j);
    for (unsigned s = 1; s <= 7; ++s)
      inst.vertex_labels["R_" + std::to_string(j) + "_" + std::to_string(s)] = R(j, s);
  }

  std::vector<std::pair<std::string, Edge>> named_edges;
  for (unsigned i = 1; i <= n; ++i) {
    named_edges.emplace_back("a_" + std::to_string(i), Edge{A(i), B(i)});
    named_edges.emplace_back("b_" + std::to_string(i), Edge{B(i), C(i)});
    named_edges.emplace_back("c_" + std::to_string(i), Edge{C(i), D(i)});
    named_edges.emplace_back("d_" + std::to_string(i), Edge{D(i), A(i)});
  }
  for (unsigned j = 1; j <= m; ++j) {
    for (unsigned s = 1; s <= 7; ++s) {
      named_edges.emplace_back("P_" + std::to_string(j) + "_R_" + std::to_string(s),
                               Edge{P(j), R(j, s)});
      named_edges.emplace_back("Q_" + std::to_string(j) + "_R_" + std::to_string(s),
                               Edge{Q(j), R(j, s)});
    }
  }
  std::vector<Edge> edges;
  edges.reserve(named_edges.size());
  for (auto& [name, e] : named_edges) edges.push_back(e);
  inst.graph = validate_graph(vcount, edges, true);

  for (auto& [name, e] : named_edges) {
    Edge key = e.first < e.second ? e : Edge{e.second, e.first};
    auto it = std::lower_bound(inst.graph.edges().begin(), inst.graph.edges().end(), key);
    inst.edge_labels[name] = static_cast<EdgeIndex>(it - inst.graph.edges().begin());
  }

  // incidence coordinates over V-hat = V \ {A_1, Q_m}: B_i,C_i,D_i per
  // variable, then R_{j,1..7} and Q_j per clause (Q_m dropped)
  std::vector<int> coord_of(vcount, -1);
  int next = 0;
  for (unsigned i = 1; i <= n; ++i) {
    coord_of[B(i)] = next++;
    coord_of[C(i)] = next++;
    coord_of[D(i)] = next++;
  }
  for (unsigned j = 1; j <= m; ++j) {
    for (unsigned s = 1; s <= 7; ++s) coord_of[R(j, s)] = next++;
    if (j < m) coord_of[Q(j)] = next++;
  }
  const std::size_t base = static_cast<std::size_t>(next);  // = 3n + 8m - 1

  inst.weights.p = p;
  inst.weights.k = inst.k;
  inst.weights.rows.assign(inst.graph.edge_count(), std::vector<std::uint64_t>(inst.k, 0));
  for (EdgeIndex e = 0; e < inst.graph.edge_count(); ++e) {
    auto [u, v] = inst.graph.edge(e);
    if (coord_of[u] >= 0) inst.weights.rows[e][coord_of[u]] = 1;
    if (coord_of[v] >= 0) inst.weights.rows[e][coord_of[v]] = 1;
  }
  const std::uint64_t minus_one = p - 1;
  for (unsigned j = 1; j <= m; ++j) {
    const auto& clause = cnf.clauses[j - 1];
    for (int slot = 0; slot < 3; ++slot) {
      const std::size_t coord = base + 3 * (j - 1) + slot;
      const Literal& lit = clause[slot];
      const std::string lit_edge =
          (lit.positive ? "a_" : "d_") + std::to_string(lit.var + 1);
      inst.weights.rows[inst.edge(lit_edge)][coord] = 1;
      for (int s : kSlotRows[slot]) {
        const std::string pe = "P_" + std::to_string(j) + "_R_" + std::to_string(s);
        inst.weights.rows[inst.edge(pe)][coord] = minus_one;
      }
    }
  }
  return inst;
}

AltSeq assignment_to_path(const ReductionInstance& inst, const Assignment& a) {
  if (a.size() != inst.var_count)
    fail(errc::bad_format, "assignment length != variable count");
  std::vector<EdgeIndex> seq;
  for (unsigned i = 1; i <= inst.var_count; ++i) {
    if (a[i - 1]) {
      seq.push_back(inst.edge("a_" + std::to_string(i)));
      seq.push_back(inst.edge("b_" + std::to_string(i)));
    } else {
      seq.push_back(inst.edge("d_" + std::to_string(i)));
      seq.push_back(inst.edge("c_" + std::to_string(i)));
    }
  }
  // The instance does not retain the Cnf3; the literal of each clause slot
  // is read back off its weight coordinate (the +1 sits on a_i for a
  // positive literal, on d_i for a negated one).
  const std::size_t base = 3ull * inst.var_count + 8ull * inst.clause_count - 1;
  for (unsigned j = 1; j <= inst.clause_count; ++j) {
    bool truth[3] = {false, false, false};
    for (int slot = 0; slot < 3; ++slot) {
      const std::size_t coord = base + 3 * (j - 1) + slot;
      bool found = false;
      for (unsigned i = 1; i <= inst.var_count && !found; ++i) {
        if (inst.weights.rows[inst.edge("a_" + std::to_string(i))][coord] == 1) {
          truth[slot] = a[i - 1];
          found = true;
        } else if (inst.weights.rows[inst.edge("d_" + std::to_string(i))][coord] == 1) {
          truth[slot] = !a[i - 1];
          found = true;
        }
      }
      if (!found)
        fail(errc::bad_format, "malformed instance: clause coordinate has no literal edge");
    }
    const int s = row_for_pattern(truth[0], truth[1], truth[2]);
    if (s == 0) fail(errc::unsatisfied_clause, "clause " + std::to_string(j) + " unsatisfied");
    seq.push_back(inst.edge("P_" + std::to_string(j) + "_R_" + std::to_string(s)));
    seq.push_back(inst.edge("Q_" + std::to_string(j) + "_R_" + std::to_string(s)));
  }
  return AltSeq::from_edges(inst.graph, seq);
}

Assignment path_to_assignment(const ReductionInstance& inst, const AltSeq& seq) {
  const unsigned n = inst.var_count, m = inst.clause_count;
  if (seq.kind != AltSeq::Kind::Path || seq.length() != 2ull * (n + m))
    fail(errc::not_canonical_path, "expected an A_1 -> Q_m path of length 2(n+m)");
  std::vector<EdgeIndex> edges = seq.edges;
  auto walk = seq.walk(inst.graph);
  const VertexId a1 = inst.vertex("A_1");
  const VertexId qm = inst.vertex("Q_" + std::to_string(m));
  if (walk.front() == qm && walk.back() == a1) {
    std::reverse(edges.begin(), edges.end());
  } else if (!(walk.front() == a1 && walk.back() == qm)) {
    fail(errc::not_canonical_path, "path endpoints are not A_1 and Q_m");
  }
  Assignment a(n, false);
  for (unsigned i = 1; i <= n; ++i) {
    EdgeIndex first = edges[2 * (i - 1)];
    EdgeIndex second = edges[2 * (i - 1) + 1];
    if (first == inst.edge("a_" + std::to_string(i)) &&
        second == inst.edge("b_" + std::to_string(i))) {
      a[i - 1] = true;
    } else if (first == inst.edge("d_" + std::to_string(i)) &&
               second == inst.edge("c_" + std::to_string(i))) {
      a[i - 1] = false;
    } else {
      fail(errc::not_canonical_path, "variable gadget " + std::to_string(i) + " traversal");
    }
  }
  // postcondition of the converse direction: the decoded assignment
  // satisfies every clause
  const std::size_t base = 3ull * n + 8ull * m - 1;
  for (unsigned j = 1; j <= m; ++j) {
    int s = 0;
    for (int cand = 1; cand <= 7; ++cand) {
      if (edges[2 * n + 2 * (j - 1)] ==
          inst.edge("P_" + std::to_string(j) + "_R_" + std::to_string(cand))) {
        s = cand;
        break;
      }
    }
    if (s == 0 || edges[2 * n + 2 * (j - 1) + 1] !=
                      inst.edge("Q_" + std::to_string(j) + "_R_" + std::to_string(s)))
      fail(errc::not_canonical_path, "clause gadget " + std::to_string(j) + " traversal");
    bool clause_ok = false;
    for (int slot = 0; slot < 3; ++slot) {
      const std::size_t coord = base + 3 * (j - 1) + slot;
      for (unsigned i = 1; i <= n; ++i) {
        if (inst.weights.rows[inst.edge("a_" + std::to_string(i))][coord] == 1 && a[i - 1])
          clause_ok = true;
        if (inst.weights.rows[inst.edge("d_" + std::to_string(i))][coord] == 1 && !a[i - 1])
          clause_ok = true;
      }
    }
    if (!clause_ok)
      fail(errc::clause_unsatisfied_bug,
           "zero-sum path decodes to an assignment violating clause " + std::to_string(j));
  }
  return a;
}

std::optional<AltSeq> improper_canonical_search(const ReductionInstance& inst) {
  const unsigned n = inst.var_count, m = inst.clause_count;
  const std::size_t k = inst.k;
  const std::uint64_t p = inst.p;
  const std::size_t base = 3ull * n + 8ull * m - 1;

  // sparse rows once; signs alternate along the canonical path, edge at
  // 0-based position t has sign (-1)^t
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> sparse(
      inst.graph.edge_count());
  for (std::size_t e = 0; e < inst.graph.edge_count(); ++e)
    for (std::size_t c = 0; c < k; ++c)
      if (inst.weights.rows[e][c])
        sparse[e].emplace_back(static_cast<std::uint32_t>(c), inst.weights.rows[e][c]);

  std::vector<std::uint64_t> acc(k, 0);
  std::vector<EdgeIndex> seq;
  auto apply = [&](EdgeIndex e, bool plus) {
    for (auto [c, val] : sparse[e])
      acc[c] = plus ? add_mod(acc[c], val, p) : sub_mod(acc[c], val, p);
  };
  auto push = [&](EdgeIndex e) {
    apply(e, seq.size() % 2 == 0);
    seq.push_back(e);
  };
  auto pop = [&]() {
    EdgeIndex e = seq.back();
    seq.pop_back();
    apply(e, !(seq.size() % 2 == 0));
  };

  std::optional<AltSeq> found;
  auto clause_coords_zero = [&](unsigned j) {
    for (int slot = 0; slot < 3; ++slot)
      if (acc[base + 3 * (j - 1) + slot] != 0) return false;
    return true;
  };

  std::function<void(unsigned)> choose_clause = [&](unsigned j) {
    if (found) return;
    if (j > m) {
      bool all_zero = true;
      for (std::size_t c = 0; c < k && all_zero; ++c) all_zero = (acc[c] == 0);
      if (all_zero) found = AltSeq::from_edges(inst.graph, seq);
      return;
    }
    for (int s = 1; s <= 7 && !found; ++s) {
      push(inst.edge("P_" + std::to_string(j) + "_R_" + std::to_string(s)));
      push(inst.edge("Q_" + std::to_string(j) + "_R_" + std::to_string(s)));
      if (clause_coords_zero(j)) choose_clause(j + 1);
      pop();
      pop();
    }
  };

  std::function<void(unsigned)> choose_var = [&](unsigned i) {
    if (found) return;
    if (i > n) {
      choose_clause(1);
      return;
    }
    for (bool value : {true, false}) {
      if (found) break;
      const char* e1 = value ? "a_" : "d_";
      const char* e2 = value ? "b_" : "c_";
      push(inst.edge(e1 + std::to_string(i)));
      push(inst.edge(e2 + std::to_string(i)));
      choose_var(i + 1);
      pop();
      pop();
    }
  };

  choose_var(1);
  return found;
}

}  // namespace matcharr
