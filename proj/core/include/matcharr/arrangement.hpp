#ifndef MATCHARR_ARRANGEMENT_HPP
#define MATCHARR_ARRANGEMENT_HPP

#include <cstdint>
#include <vector>

#include "matcharr/graph.hpp"
#include "matcharr/polynomial.hpp"

namespace matcharr {

// Normal vector with entries in {-1,0,+1}, first nonzero entry +1.
struct Hyperplane {
  std::vector<int> normal;
  bool operator==(const Hyperplane& o) const { return normal == o.normal; }
  bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

struct Arrangement {
  std::size_t dimension = 0;
  std::vector<Hyperplane> hyperplanes;  // deduplicated, sorted
};

// One hyperplane per alternating edge sequence of g (simple path or simple
// even cycle), normals deduplicated after canonical-sign normalization.
Arrangement build_matching_arrangement(const Graph& g);

// Exact number of points of {0..p-1}^n avoiding every hyperplane mod p.
// threads = 0 picks hardware_concurrency; the coordinate-prefix partition
// never changes the result.
std::uint64_t count_proper_points(const Arrangement& a, std::uint64_t p, unsigned threads = 0);

struct CharpolyResult {
  IntPolynomial chi;
  std::vector<std::uint64_t> primes_used;  // interpolation nodes then the check prime
};

// Finite-field method: count proper points at the n+1 smallest primes
// >= prime_floor, interpolate exactly, and cross-check at the (n+2)-th
// prime. Inconsistent results double prime_floor and retry a bounded number
// of times before raising interpolation_inconsistent.
CharpolyResult charpoly_finite_field(const Arrangement& a, std::uint64_t prime_floor = 5,
                                     unsigned threads = 0);

enum class ClosedFamily { EvenCycle, OddCycle, TriangleTail };

// Closed forms: even n-cycle (x-1)(x-n)^{n-1}; odd n-cycle
// (x-1)(x-3)...(x-(2n-3))(x-(n-1)); K3 with a tail, n edges total,
// (x-1)(x-3)(x-4)...(x-(n-2))(x-(n-1))^2(x-n).
IntPolynomial closed_form_charpoly(ClosedFamily family, unsigned n);

// Zaslavsky count r = (-1)^n chi(-1); raises non_positive_result when chi is
// not a plausible arrangement characteristic polynomial.
BigInt region_count(const IntPolynomial& chi, std::size_t n);

}  // namespace matcharr

#endif
