#ifndef MATCHARR_WEIGHTFN_HPP
#define MATCHARR_WEIGHTFN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "matcharr/graph.hpp"

namespace matcharr {

struct FpVector {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> entries;  // residues in [0, p)

  bool is_zero() const {
    for (auto e : entries)
      if (e) return false;
    return true;
  }
  bool operator==(const FpVector& o) const { return p == o.p && entries == o.entries; }
};

// W: E -> F_p^k as an n x k residue table; row i = W(e_i). Signed input
// entries are normalized mod p.
struct WeightFunction {
  std::uint64_t p = 2;
  std::size_t k = 1;
  std::vector<std::vector<std::uint64_t>> rows;

  static WeightFunction from_signed(std::uint64_t p, std::size_t k,
                                    const std::vector<std::vector<long long>>& rows);
};

// sum_j (-1)^j W(e_{i_j}) over the stored edge order.
FpVector alternating_sum(const WeightFunction& w, const AltSeq& seq);

struct Classification {
  bool proper = false;
  std::optional<AltSeq> witness;  // first zero-sum AltSeq in enumeration order
};

// Improper iff some simple path or simple even cycle has zero alternating
// sum; the witness is the (length, lex)-first such sequence. Exponential in
// the worst case by design.
Classification classify_weight_function(const Graph& g, const WeightFunction& w);

// Exhaustive count of proper weight functions among all p^{nk} tables.
// Guarded: raises search_space_too_large beyond candidate_limit.
std::uint64_t count_proper_functions(const Graph& g, std::uint64_t p, std::size_t k,
                                     std::uint64_t candidate_limit = 100000000ull);

}  // namespace matcharr

#endif
