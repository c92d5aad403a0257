#pragma once

// Brute-force references kept independent of the library algorithms.

#include <algorithm>
#include <random>
#include <vector>

#include "eqhom/chain.hpp"

namespace oracles {

// Rank mod p by plain elimination on residues.
inline std::size_t rank_mod(const eqhom::Matrix& a, long p) {
  std::vector<std::vector<long>> w(a.rows(), std::vector<long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      long x = a(i, j).get_num().get_si() % p;
      w[i][j] = x < 0 ? x + p : x;
    }
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t piv = r;
    while (piv < a.rows() && w[piv][j] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(w[piv], w[r]);
    long inv = 1;
    for (long t = 1; t < p; ++t)
      if ((w[r][j] * t) % p == 1) inv = t;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || w[i][j] == 0) continue;
      long f = (w[i][j] * inv) % p;
      for (std::size_t t = 0; t < a.cols(); ++t) w[i][t] = ((w[i][t] - f * w[r][t]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Betti numbers of C (x) F_p from ranks mod p.
inline std::vector<std::size_t> betti_mod(const eqhom::ChainComplex& c, long p) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= c.top(); ++n)
    out.push_back(c.rank(n) - rank_mod(c.d(n), p) - rank_mod(c.d(n + 1), p));
  return out;
}

// Random integer complex with ranks <= 6 and entries in [-3, 3]. With three
// terms, the columns of d_2 are {-1, 0, 1} kernel vectors of d_1 found by
// exhaustive search.
inline eqhom::ChainComplex random_complex(std::mt19937& rng) {
  using eqhom::Matrix;
  std::uniform_int_distribution<int> rank_dist(1, 6), entry(-3, 3), coin(0, 1);
  const bool three = coin(rng) == 1;
  std::size_t r0 = static_cast<std::size_t>(rank_dist(rng)), r1 = static_cast<std::size_t>(rank_dist(rng));
  if (three) r0 = std::min<std::size_t>(r0, 3);
  Matrix d1(r0, r1);
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < r1; ++j) d1(i, j) = entry(rng);
  if (!three) return eqhom::ChainComplex(eqhom::Ring::integers(), {r0, r1}, {d1});

  std::vector<std::vector<int>> kernel_vectors;
  std::vector<int> x(r1, -1);
  for (;;) {
    bool nonzero = false, in_kernel = true;
    for (int t : x) nonzero = nonzero || t != 0;
    for (std::size_t i = 0; i < r0 && in_kernel; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < r1; ++j) acc += d1(i, j).get_num().get_si() * x[j];
      in_kernel = acc == 0;
    }
    if (nonzero && in_kernel) kernel_vectors.push_back(x);
    std::size_t k = 0;
    while (k < r1 && x[k] == 1) x[k++] = -1;
    if (k == r1) break;
    ++x[k];
  }
  const std::size_t r2 = static_cast<std::size_t>(rank_dist(rng));
  Matrix d2(r1, r2);
  if (!kernel_vectors.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, kernel_vectors.size() - 1);
    for (std::size_t c = 0; c < r2; ++c) {
      if (coin(rng) == 0 && c > 0) continue;
      const auto& kv = kernel_vectors[pick(rng)];
      const int s = coin(rng) ? 1 : -1;
      for (std::size_t j = 0; j < r1; ++j) d2(j, c) = s * kv[j];
    }
  }
  return eqhom::ChainComplex(eqhom::Ring::integers(), {r0, r1, r2}, {d1, d2});
}

}  // namespace oracles
