#include "matcharr/modarith.hpp"

namespace matcharr {

bool invert_mod_matrix(const ModMatrix& m, std::uint64_t p, ModMatrix& out) {
  const std::size_t n = m.size();
  ModMatrix a = m;
  out.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1 % p;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(out[pivot], out[col]);
    const std::uint64_t inv = inv_mod(a[col][col], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = mul_mod(a[col][j], inv, p);
      out[col][j] = mul_mod(out[col][j], inv, p);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const std::uint64_t f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] = sub_mod(a[row][j], mul_mod(f, a[col][j], p), p);
        out[row][j] = sub_mod(out[row][j], mul_mod(f, out[col][j], p), p);
      }
    }
  }
  return true;
}

ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b, std::uint64_t p) {
  const std::size_t n = a.size(), k = b[0].size(), mid = b.size();
  ModMatrix c(n, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < mid; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < k; ++j)
        c[i][j] = add_mod(c[i][j], mul_mod(a[i][t], b[t][j], p), p);
    }
  return c;
}

std::vector<std::uint64_t> mat_vec_mod(const ModMatrix& m, const std::vector<std::uint64_t>& v,
                                       std::uint64_t p) {
  std::vector<std::uint64_t> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] = add_mod(out[i], mul_mod(m[i][j], v[j], p), p);
  return out;
}

}  // namespace matcharr
