#pragma once

// Shared test utilities: independent oracles (naive elimination, cofactor
// determinants, convolution recurrences) and deterministic random data.
// Everything here stays independent of the library code paths it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "gfstream/rat.hpp"
#include "gfstream/series.hpp"

namespace gfs::test {

inline Rat rat(const std::string& s) { return rat_from_string(s); }

inline Series series(const std::vector<std::string>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(rat(c));
  return Series(std::move(v));
}

// Raw 64-bit modulo keeps the values identical across platforms.
inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rat rand_rat(std::mt19937_64& rng) {
  return make_rat(rand_int(rng, -9, 9), rand_int(rng, 1, 9));
}

inline std::vector<Rat> rand_int_stream(std::mt19937_64& rng, std::size_t n,
                                        long lo = -9, long hi = 9) {
  std::vector<Rat> z;
  z.reserve(n);
  for (std::size_t i = 0; i < n; ++i) z.emplace_back(rand_int(rng, lo, hi));
  return z;
}

// Plain rational Gaussian elimination; no Bareiss, no denominator clearing.
inline std::size_t naive_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Cofactor expansion along the first row; fine for the small sizes used.
inline Rat naive_det(const std::vector<std::vector<Rat>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 1) return m[0][0];
  Rat acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rat>> minor(n - 1, std::vector<Rat>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor[i - 1][cc++] = m[i][c];
    Rat term = m[0][j] * naive_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

inline std::vector<std::vector<Rat>> hankel_matrix(const Series& a,
                                                   std::size_t I,
                                                   std::size_t J) {
  std::vector<std::vector<Rat>> m(I + 1, std::vector<Rat>(J + 1));
  for (std::size_t i = 0; i <= I; ++i)
    for (std::size_t j = 0; j <= J; ++j) m[i][j] = a.coeff(i + j);
  return m;
}

// Dense lower-triangular Toeplitz multiply: (T[a] z)_t for t < |z|.
inline std::vector<Rat> toeplitz_apply(const Series& a,
                                       const std::vector<Rat>& z) {
  std::vector<Rat> out(z.size(), Rat(0));
  for (std::size_t t = 0; t < z.size(); ++t)
    for (std::size_t j = 0; j <= t; ++j) out[t] += a.coeff(t - j) * z[j];
  return out;
}

// Newton iteration for the series square root, as an oracle for the
// coefficient-recurrence implementation: g <- (g + f/g)/2 doubles the number
// of correct coefficients each round.
inline Series newton_sqrt(const Series& f) {
  Series g = Series::constant(1, f.order());
  Rat half = make_rat(1, 2);
  std::size_t correct = 1;
  while (correct <= f.order()) {
    g = scale(half, add(g, div(f, g)));
    correct *= 2;
  }
  return g;
}

}  // namespace gfs::test
