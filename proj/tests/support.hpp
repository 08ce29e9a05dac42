#pragma once

// Independent oracles for the tests. Nothing here calls the library's
// elimination, Smith form or boundary code; dense textbook algorithms only.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hgl/group.hpp"
#include "hgl/rational.hpp"
#include "hgl/wedge.hpp"

namespace oracle {

using hgl::Rational;
using Dense = std::vector<std::vector<Rational>>;

// Gauss-Jordan rank on a copy.
inline std::size_t dense_rank(Dense m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline Rational dense_det(Dense m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<std::int64_t> invariant_factors(const hgl::IntMatrix& a) {
  const std::size_t kmax = std::min(a.rows(), a.cols());
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense m(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        const Rational d = dense_det(m);
        g = std::gcd(g, std::abs(d.get_num().get_si()));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

using Vec = std::vector<std::int64_t>;

inline std::int64_t raw_pairing(const hgl::IntMatrix& form, const Vec& x, const Vec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * form(i, j) * y[j];
  return s;
}

// The CE differential from its definition, on generator coordinates.
inline hgl::WedgeChain naive_boundary(const hgl::GroupSpec& spec, const std::vector<Vec>& factors) {
  const std::size_t p = factors.size();
  hgl::WedgeChain out(p - 1);
  if (p < 2) return out;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const auto w = raw_pairing(spec.form(), factors[i], factors[j]);
      if (w == 0) continue;
      Vec sum(factors[i].size());
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = factors[i][k] + factors[j][k];
      std::vector<hgl::GroupElement> term{spec.element(sum)};
      for (std::size_t k = 0; k < p; ++k)
        if (k != i && k != j) term.push_back(spec.element(factors[k]));
      const int sign = ((i + j) % 2 == 0) ? 1 : -1;  // 0-based i+j has the parity of 1-based i+j
      out.add(std::span<const hgl::GroupElement>(term), Rational(sign * w));
    }
  return out;
}

// Random presentation: an alternating form on `free` generators plus
// optional torsion generators with zero form rows.
inline hgl::GroupSpec random_spec(std::mt19937_64& rng) {
  const std::size_t free = 2 + rng() % 3;
  const std::size_t tors = rng() % 2;
  const std::size_t n = free + tors;
  hgl::IntMatrix form(n, n);
  bool nonzero = false;
  while (!nonzero) {
    for (std::size_t i = 0; i < free; ++i)
      for (std::size_t j = i + 1; j < free; ++j) {
        const std::int64_t v = static_cast<std::int64_t>(rng() % 5) - 2;
        form(i, j) = v;
        form(j, i) = -v;
        nonzero |= v != 0;
      }
  }
  hgl::IntMatrix rel(tors, n);
  for (std::size_t t = 0; t < tors; ++t) rel(t, free + t) = 2 + static_cast<std::int64_t>(rng() % 2);
  return hgl::GroupSpec(n, rel, form);
}

inline hgl::GroupElement random_element(const hgl::GroupSpec& spec, std::mt19937_64& rng, std::int64_t radius) {
  Vec c(spec.n_generators());
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % (2 * radius + 1)) - radius;
  return spec.element(c);
}

}  // namespace oracle
