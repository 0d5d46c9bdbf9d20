#ifndef MATCHARR_AWP_HPP
#define MATCHARR_AWP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matcharr/graph.hpp"
#include "matcharr/modarith.hpp"
#include "matcharr/weightfn.hpp"

namespace matcharr {

// Superincreasing weights on K_m: edge (v_q, v_r), q < r (0-based here),
// has coordinate q = 3^{r-q-1}, coordinate r = 1, zero elsewhere.
struct EasyInstance {
  unsigned m = 2;
  std::uint64_t p = 0;
  Graph graph;            // K_m
  WeightFunction weights;  // k = m
};

// The greedy solver reads exponents up to m-2 only, so p > 2*3^{m-2}
// suffices for unambiguous residue classification (p = 23 at m = 4 is the
// worked-example case). raises prime_too_small below that bound.
EasyInstance easy_weights(unsigned m, std::uint64_t p);

// The m(m+1) residues {±3^t : 0 <= t < m} ∪ {±(3^b - 3^c) : 0 <= c < b < m}
// the greedy classification is keyed on; pairwise distinct whenever
// p > 2*3^{m-1}.
std::vector<std::uint64_t> greedy_lookup_keys(unsigned m, std::uint64_t p);

struct SolveTrace {
  std::vector<std::vector<std::uint64_t>> residuals;  // after each of the m-1 steps
  std::vector<std::pair<EdgeIndex, int>> stored;      // (edge, sign) in discovery order
};

// m-1 greedy steps + assembly + final verification. Returns the sequence
// oriented so its alternating sum equals target, or nullopt.
std::optional<AltSeq> solve_easy_awp(const FpVector& target, const EasyInstance& inst,
                                     SolveTrace* trace = nullptr);

using LetterMap = std::map<EdgeIndex, char>;

struct PublicKey {
  unsigned m = 2;
  std::uint64_t p = 0;
  WeightFunction weights;  // disguised table, k = m
  LetterMap letter_map;
};

struct KeyPair {
  PublicKey pub;
  ModMatrix M;      // private disguise operator: M(W_pub(e)) = W_easy(e)
  ModMatrix M_inv;  // W_pub(e) = M_inv(W_easy(e))
};

// The classic K_4 table maps edges a..f to A I N K O M; other sizes map
// edge i to the i-th letter of the alphabet.
LetterMap default_letter_map(unsigned m);

// M uniform over invertible m x m matrices mod p (rejection sampling on the
// determinant), seeded for reproducibility. Keeps the strict p > 2*3^{m-1}
// admissibility bound.
KeyPair keygen(unsigned m, std::uint64_t p, std::uint64_t seed);

struct Ciphertext {
  FpVector vector;  // length m
};

// Alternating sum of an even-length simple path under the public weights.
Ciphertext encrypt(const PublicKey& pub, const AltSeq& seq);

// B = M(c); solve the easy problem; orient so the easy alternating sum is
// exactly B. Raises decryption_failed on solver miss or a non-path answer.
AltSeq decrypt(const KeyPair& kp, const Ciphertext& c);

AltSeq encode_message(const Graph& km, const LetterMap& map, const std::string& text);
std::string decode_message(const LetterMap& map, const AltSeq& seq);

}  // namespace matcharr

#endif
