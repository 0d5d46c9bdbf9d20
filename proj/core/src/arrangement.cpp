#include "matcharr/arrangement.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "matcharr/modarith.hpp"

namespace matcharr {

Arrangement build_matching_arrangement(const Graph& g) {
  if (g.edge_count() == 0) fail(errc::empty_graph, "matching arrangement needs >= 1 edge");
  const std::size_t n = g.edge_count();
  std::set<std::vector<int>> normals;
  for (const AltSeq& seq : enumerate_alt_seqs(g)) {
    std::vector<int> v = sign_vector(seq, n).coefficients;
    for (int x : v) {
      if (x != 0) {
        if (x < 0)
          for (int& y : v) y = -y;
        break;
      }
    }
    normals.insert(std::move(v));
  }
  Arrangement a;
  a.dimension = n;
  for (auto& v : normals) a.hyperplanes.push_back(Hyperplane{v});
  return a;
}

namespace {

// Search-tree layout for the point counter. Hyperplane normals have entries
// in {-1,0,+1}, so once the coordinates up to a hyperplane's last support
// index are fixed, the hyperplane forbids exactly one value of that
// coordinate. The DFS walks coordinates in index order, collecting the
// forbidden set at each depth and recursing only through allowed values.
struct CountPlan {
  std::size_t n = 0;
  std::uint64_t p = 0;
  // finalize[d]: (hyperplane partial-sum slot, sign of coordinate d)
  std::vector<std::vector<std::pair<std::uint32_t, int>>> finalize;
  // touch[d]: slots updated at depth d that finalize deeper
  std::vector<std::vector<std::pair<std::uint32_t, int>>> touch;
  std::uint32_t slots = 0;
};

CountPlan make_plan(const Arrangement& a, std::uint64_t p) {
  CountPlan plan;
  plan.n = a.dimension;
  plan.p = p;
  plan.finalize.resize(plan.n);
  plan.touch.resize(plan.n);
  plan.slots = static_cast<std::uint32_t>(a.hyperplanes.size());
  for (std::uint32_t h = 0; h < a.hyperplanes.size(); ++h) {
    const auto& nv = a.hyperplanes[h].normal;
    std::size_t last = 0;
    for (std::size_t d = 0; d < nv.size(); ++d)
      if (nv[d] != 0) last = d;
    for (std::size_t d = 0; d < nv.size(); ++d) {
      if (nv[d] == 0) continue;
      if (d == last)
        plan.finalize[d].emplace_back(h, nv[d]);
      else
        plan.touch[d].emplace_back(h, nv[d]);
    }
  }
  return plan;
}

struct CountWorker {
  const CountPlan& plan;
  std::vector<std::uint64_t> partial;           // per-hyperplane running sum
  std::vector<std::vector<std::uint32_t>> stamp;  // per-depth forbidden marks
  std::vector<std::uint32_t> generation;

  explicit CountWorker(const CountPlan& pl)
      : plan(pl),
        partial(pl.slots, 0),
        stamp(pl.n, std::vector<std::uint32_t>(pl.p, 0)),
        generation(pl.n, 0) {}

  std::uint64_t run(std::uint64_t first_begin, std::uint64_t first_step) {
    count_allowed(0);
    std::uint64_t total = 0;
    for (std::uint64_t v = first_begin; v < plan.p; v += first_step) {
      if (stamp[0][v] == generation[0]) continue;
      total += plan.n == 1 ? 1 : descend(0, v);
    }
    return total;
  }

  // marks forbidden values at depth d; returns how many distinct values got marked
  std::uint64_t count_allowed(std::size_t d) {
    ++generation[d];
    auto& st = stamp[d];
    const std::uint32_t gen = generation[d];
    std::uint64_t marked = 0;
    for (auto [h, sign] : plan.finalize[d]) {
      std::uint64_t v = sign > 0 ? (plan.p - partial[h]) % plan.p : partial[h];
      if (st[v] != gen) {
        st[v] = gen;
        ++marked;
      }
    }
    return marked;
  }

  std::uint64_t descend(std::size_t d, std::uint64_t v) {
    for (auto [h, sign] : plan.touch[d])
      partial[h] = sign > 0 ? add_mod(partial[h], v, plan.p) : sub_mod(partial[h], v, plan.p);
    std::uint64_t result;
    const std::size_t nd = d + 1;
    std::uint64_t marked = count_allowed(nd);
    if (nd == plan.n - 1) {
      result = plan.p - marked;
    } else {
      result = 0;
      const auto& st = stamp[nd];
      const std::uint32_t gen = generation[nd];
      for (std::uint64_t w = 0; w < plan.p; ++w) {
        if (st[w] != gen) result += descend(nd, w);
      }
    }
    for (auto [h, sign] : plan.touch[d])
      partial[h] = sign > 0 ? sub_mod(partial[h], v, plan.p) : add_mod(partial[h], v, plan.p);
    return result;
  }
};

}  // namespace

std::uint64_t count_proper_points(const Arrangement& a, std::uint64_t p, unsigned threads) {
  if (!is_prime(p)) fail(errc::bad_format, "modulus " + std::to_string(p) + " is not prime");
  const std::size_t n = a.dimension;
  if (n == 0) fail(errc::empty_graph, "zero-dimensional arrangement");
  if (n * std::log2(static_cast<double>(p)) >= 63.0)
    fail(errc::overflow, "p^n exceeds the exact 64-bit range");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const CountPlan plan = make_plan(a, p);
  if (threads == 1 || p < 2 * threads) {
    CountWorker w(plan);
    return w.run(0, 1);
  }
  std::vector<std::uint64_t> sums(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      CountWorker w(plan);
      sums[t] = w.run(t, threads);
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (auto s : sums) total += s;
  return total;
}

namespace {

using boost::multiprecision::cpp_rational;

std::vector<std::uint64_t> primes_from(std::uint64_t floor, std::size_t count) {
  std::vector<std::uint64_t> ps;
  std::uint64_t q = floor < 2 ? 2 : floor;
  while (ps.size() < count) {
    q = next_prime_at_least(q);
    ps.push_back(q);
    ++q;
  }
  return ps;
}

// Lagrange interpolation through (x_i, y_i), exact rational arithmetic.
std::vector<cpp_rational> interpolate(const std::vector<std::uint64_t>& xs,
                                      const std::vector<std::uint64_t>& ys) {
  const std::size_t m = xs.size();
  std::vector<cpp_rational> acc(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<cpp_rational> basis{1};
    cpp_rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      // basis *= (x - xs[j])
      basis.push_back(0);
      for (std::size_t t = basis.size(); t-- > 0;) {
        cpp_rational v = (t > 0 ? basis[t - 1] : cpp_rational(0)) -
                         cpp_rational(BigInt(xs[j])) * basis[t];
        basis[t] = v;
      }
      denom *= cpp_rational(BigInt(xs[i])) - cpp_rational(BigInt(xs[j]));
    }
    cpp_rational scale = cpp_rational(BigInt(ys[i])) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
  }
  return acc;
}

}  // namespace

CharpolyResult charpoly_finite_field(const Arrangement& a, std::uint64_t prime_floor,
                                     unsigned threads) {
  const std::size_t n = a.dimension;
  if (prime_floor < 2) prime_floor = 2;
  constexpr int kMaxAttempts = 8;
  std::uint64_t floor = prime_floor;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, floor *= 2) {
    const auto primes = primes_from(floor, n + 2);
    std::vector<std::uint64_t> xs(primes.begin(), primes.begin() + n + 1);
    std::vector<std::uint64_t> ys;
    ys.reserve(xs.size());
    for (auto q : xs) ys.push_back(count_proper_points(a, q, threads));
    const auto coeffs = interpolate(xs, ys);
    bool ok = coeffs.size() == n + 1;
    std::vector<BigInt> ints;
    if (ok) {
      for (const auto& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1) {
          ok = false;
          break;
        }
        ints.push_back(BigInt(boost::multiprecision::numerator(c)));
      }
    }
    if (ok && (ints.size() != n + 1 || ints.back() != 1)) ok = false;
    if (ok) {
      IntPolynomial chi(ints);
      if (chi.degree() != static_cast<int>(n)) ok = false;
      const std::uint64_t check_prime = primes[n + 1];
      if (ok && chi.evaluate(BigInt(check_prime)) !=
                    BigInt(count_proper_points(a, check_prime, threads)))
        ok = false;
      if (ok) {
        CharpolyResult res;
        res.chi = std::move(chi);
        res.primes_used = primes;
        return res;
      }
    }
  }
  fail(errc::interpolation_inconsistent,
       "no consistent monic integer interpolation; primes too small or arrangement invalid");
}

IntPolynomial closed_form_charpoly(ClosedFamily family, unsigned n) {
  std::vector<BigInt> roots;
  switch (family) {
    case ClosedFamily::EvenCycle:
      if (n % 2 != 0) fail(errc::bad_parity, "even cycle needs even n");
      if (n < 4) fail(errc::too_small, "even cycle needs n >= 4");
      roots.push_back(1);
      for (unsigned i = 0; i + 1 < n; ++i) roots.push_back(n);
      break;
    case ClosedFamily::OddCycle:
      if (n % 2 != 1) fail(errc::bad_parity, "odd cycle needs odd n");
      if (n < 3) fail(errc::too_small, "odd cycle needs n >= 3");
      for (unsigned c = 1; c <= 2 * n - 3; c += 2) roots.push_back(c);
      roots.push_back(n - 1);
      break;
    case ClosedFamily::TriangleTail:
      if (n < 4) fail(errc::too_small, "triangle with tail needs n >= 4");
      roots.push_back(1);
      for (unsigned c = 3; c <= n - 2; ++c) roots.push_back(c);
      roots.push_back(n - 1);
      roots.push_back(n - 1);
      roots.push_back(n);
      break;
  }
  return IntPolynomial::from_roots(roots);
}

BigInt region_count(const IntPolynomial& chi, std::size_t n) {
  if (chi.degree() != static_cast<int>(n))
    fail(errc::non_positive_result, "polynomial degree does not match dimension");
  BigInt r = chi.evaluate(BigInt(-1));
  if (n % 2 == 1) r = -r;
  if (r <= 0) fail(errc::non_positive_result, "(-1)^n chi(-1) = " + r.str());
  return r;
}

}  // namespace matcharr
