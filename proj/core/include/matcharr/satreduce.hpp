#ifndef MATCHARR_SATREDUCE_HPP
#define MATCHARR_SATREDUCE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matcharr/graph.hpp"
#include "matcharr/weightfn.hpp"

namespace matcharr {

struct Literal {
  unsigned var = 0;  // 0-based variable index
  bool positive = true;
};

// 3-CNF with pairwise-distinct variables inside each clause (the coordinate
// scheme of the reduction indexes (variable, clause) pairs).
struct Cnf3 {
  unsigned var_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

Cnf3 parse_dimacs(const std::string& text);
std::string to_dimacs(const Cnf3& cnf);

bool clause_satisfied(const std::array<Literal, 3>& clause, const std::vector<bool>& values);
bool cnf_satisfied(const Cnf3& cnf, const std::vector<bool>& values);

// The transformed improper-weight-function instance: chained 4-cycle gadgets
// Z_i per variable and K_{2,7} gadgets Y_j per clause, with the incidence +
// clause-pair weight coordinates.
struct ReductionInstance {
  Graph graph;
  WeightFunction weights;
  std::uint64_t p = 2;
  std::size_t k = 0;  // 3n + 11m - 1
  unsigned var_count = 0;
  unsigned clause_count = 0;
  std::map<std::string, VertexId> vertex_labels;  // "A_1", "B_1", ..., "R_2_5", "Q_2"
  std::map<std::string, EdgeIndex> edge_labels;   // "a_1", ..., "P_2_R5", "Q_2_R5"

  VertexId vertex(const std::string& label) const;
  EdgeIndex edge(const std::string& label) const;
  std::string edge_name(EdgeIndex e) const;  // inverse of edge_labels
};

ReductionInstance build_reduction(const Cnf3& cnf, std::uint64_t p);

using Assignment = std::vector<bool>;

// The canonical A_1 -> Q_m path of length 2(n+m) determined by a satisfying
// assignment; raises unsatisfied_clause otherwise.
AltSeq assignment_to_path(const ReductionInstance& inst, const Assignment& a);

// Reads the assignment off the Z_i traversals of an A_1 -> Q_m path and
// asserts every clause is satisfied.
Assignment path_to_assignment(const ReductionInstance& inst, const AltSeq& seq);

// Depth-first search over canonical-shaped paths only (2 branches per Z_i,
// 7 per Y_j) with pruning on finalized clause coordinates.
std::optional<AltSeq> improper_canonical_search(const ReductionInstance& inst);

}  // namespace matcharr

#endif
