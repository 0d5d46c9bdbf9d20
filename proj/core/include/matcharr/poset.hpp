#ifndef MATCHARR_POSET_HPP
#define MATCHARR_POSET_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "matcharr/arrangement.hpp"
#include "matcharr/polynomial.hpp"

namespace matcharr {

using Rational = boost::rational<long long>;

// An intersection subspace, identified by the reduced row-echelon basis of
// the span of its defining normals. The arrangement is central, so every
// intersection is nonempty and the flat is determined by the set of
// hyperplanes containing it (the bitmask).
struct Flat {
  std::vector<std::vector<Rational>> basis;  // RREF rows, unique per subspace
  int rank = 0;                              // dim(flat) = n - rank
  std::uint64_t hyperplanes = 0;             // bit i set iff flat lies in hyperplane i
  long long mobius = 0;
};

struct IntersectionPoset {
  std::size_t dimension = 0;
  std::vector<Flat> flats;  // sorted by rank; flats[0] is the ambient space
};

// Closure of the ambient space under intersection with each hyperplane,
// with Mobius values filled in by rank order. Oracle-scale only: at most 64
// hyperplanes.
IntersectionPoset intersection_poset(const Arrangement& a);

// chi(t) = sum over flats of mobius * t^{dim}; monic of degree n.
IntPolynomial charpoly_poset(const Arrangement& a);

}  // namespace matcharr

#endif
