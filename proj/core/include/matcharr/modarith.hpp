#ifndef MATCHARR_MODARITH_HPP
#define MATCHARR_MODARITH_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "matcharr/errors.hpp"

namespace matcharr {

// Residues are kept in [0, p). Moduli at desk scale fit comfortably in
// 64 bits; products are taken through __int128 to stay exact.

inline std::uint64_t mod_norm(std::int64_t x, std::uint64_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Extended Euclid; requires gcd(a, p) = 1.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt; nt = tmp;
    tmp = r - q * nr;
    r = nr; nr = tmp;
  }
  if (r != 1) fail(errc::bad_format, "inv_mod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t next_prime_at_least(std::uint64_t n) {
  if (n <= 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

// Uniform draw from [0, bound) by rejection; stable across platforms,
// unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

// Gauss-Jordan inverse over F_p; returns false when the matrix is singular.
bool invert_mod_matrix(const ModMatrix& m, std::uint64_t p, ModMatrix& out);

ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b, std::uint64_t p);
std::vector<std::uint64_t> mat_vec_mod(const ModMatrix& m, const std::vector<std::uint64_t>& v,
                                       std::uint64_t p);

}  // namespace matcharr

#endif
