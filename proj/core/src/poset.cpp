#include "matcharr/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace matcharr {

namespace {

using Row = std::vector<Rational>;

// zero tests go through numerator(): boost::rational's mixed-type
// operator== recurses on integer literals (boost 1.74)

// Unique reduced row-echelon form of the row span; zero rows dropped.
std::vector<Row> rref(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].numerator() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].numerator() == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool in_row_space(const std::vector<Row>& basis, Row v) {
  for (const Row& b : basis) {
    std::size_t pc = 0;
    while (pc < b.size() && b[pc].numerator() == 0) ++pc;
    if (pc == b.size()) continue;
    if (v[pc].numerator() == 0) continue;
    Rational f = v[pc];  // basis rows have pivot 1
    for (std::size_t j = pc; j < v.size(); ++j) v[j] -= f * b[j];
  }
  for (const auto& x : v)
    if (x.numerator() != 0) return false;
  return true;
}

std::vector<std::pair<long long, long long>> key_of(const std::vector<Row>& basis) {
  std::vector<std::pair<long long, long long>> key;
  for (const Row& r : basis)
    for (const Rational& x : r) key.emplace_back(x.numerator(), x.denominator());
  return key;
}

}  // namespace

IntersectionPoset intersection_poset(const Arrangement& a) {
  const std::size_t H = a.hyperplanes.size();
  if (H == 0) fail(errc::empty_graph, "empty arrangement");
  if (H > 64)
    fail(errc::search_space_too_large,
         "poset oracle handles at most 64 hyperplanes (" + std::to_string(H) + " given)");
  const std::size_t n = a.dimension;

  std::vector<Row> normals(H, Row(n));
  for (std::size_t h = 0; h < H; ++h)
    for (std::size_t j = 0; j < n; ++j) normals[h][j] = Rational(a.hyperplanes[h].normal[j]);

  IntersectionPoset poset;
  poset.dimension = n;

  std::map<std::vector<std::pair<long long, long long>>, std::size_t> index_of;
  auto mask_of = [&](const std::vector<Row>& basis) {
    std::uint64_t mask = 0;
    for (std::size_t h = 0; h < H; ++h)
      if (in_row_space(basis, normals[h])) mask |= 1ull << h;
    return mask;
  };

  Flat ambient;
  ambient.rank = 0;
  ambient.hyperplanes = 0;
  poset.flats.push_back(ambient);
  index_of[key_of(ambient.basis)] = 0;

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t fi = queue.front();
    queue.pop_front();
    for (std::size_t h = 0; h < H; ++h) {
      if (poset.flats[fi].hyperplanes & (1ull << h)) continue;
      std::vector<Row> rows = poset.flats[fi].basis;
      rows.push_back(normals[h]);
      rows = rref(std::move(rows));
      auto key = key_of(rows);
      if (index_of.count(key)) continue;
      Flat f;
      f.rank = static_cast<int>(rows.size());
      f.hyperplanes = mask_of(rows);
      f.basis = std::move(rows);
      index_of[key] = poset.flats.size();
      queue.push_back(poset.flats.size());
      poset.flats.push_back(std::move(f));
    }
  }

  std::stable_sort(poset.flats.begin(), poset.flats.end(),
                   [](const Flat& x, const Flat& y) {
                     if (x.rank != y.rank) return x.rank < y.rank;
                     return x.hyperplanes < y.hyperplanes;
                   });

  // Mobius recursion by rank: mu(ambient) = 1, mu(y) = -sum over x < y.
  // x <= y exactly when x's hyperplane set is a subset of y's.
  for (std::size_t i = 0; i < poset.flats.size(); ++i) {
    Flat& y = poset.flats[i];
    if (y.rank == 0) {
      y.mobius = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Flat& x = poset.flats[j];
      if (x.rank >= y.rank) break;
      if ((x.hyperplanes & y.hyperplanes) == x.hyperplanes) sum += x.mobius;
    }
    y.mobius = -sum;
  }
  return poset;
}

IntPolynomial charpoly_poset(const Arrangement& a) {
  const IntersectionPoset poset = intersection_poset(a);
  std::vector<BigInt> coeffs(poset.dimension + 1, 0);
  for (const Flat& f : poset.flats) coeffs[poset.dimension - f.rank] += f.mobius;
  IntPolynomial chi(coeffs);
  if (chi.degree() != static_cast<int>(poset.dimension) || !chi.is_monic())
    fail(errc::interpolation_inconsistent, "poset charpoly is not monic of full degree");
  return chi;
}

}  // namespace matcharr
