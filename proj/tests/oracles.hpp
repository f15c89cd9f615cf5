#pragma once

// Test-only reference implementations. Each takes the slow, literal route and
// shares no code path with the engine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "bvring/bvring.hpp"

namespace bvring::oracle {

/// Reduced row echelon form over Q by plain Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> a, std::vector<std::size_t>* pivots = nullptr) {
  if (a.empty()) return a;
  const std::size_t nr = a.size(), nc = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

inline std::size_t rank(const std::vector<std::vector<Rational>>& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

inline std::vector<std::vector<Rational>> rows_of(const Matrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

/// Counts standard fillings of a shape by trying all d! fillings.
inline std::uint64_t count_standard_fillings(const IntPartition& shape) {
  const int d = shape.size();
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    std::vector<std::vector<int>> rows;
    int k = 0;
    for (int len : shape.parts()) {
      rows.emplace_back(perm.begin() + k, perm.begin() + k + len);
      k += len;
    }
    for (std::size_t r = 0; r < rows.size() && ok; ++r) {
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] > rows[r][c]) ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Pairing of tau_a and tau_b computed by the rewriting engine in R(S^d).
inline Rational ring_tau_pairing(const PerfectMatching& a, const PerfectMatching& b, const Rational& x) {
  const int d = a.ground_size();
  const RingParams p(d, {}, x);
  RingElement ea = RingElement::one(p), eb = RingElement::one(p);
  for (auto [i, j] : a.pairs()) ea = ea * gen_tau(p, i, j);
  for (auto [i, j] : b.pairs()) eb = eb * gen_tau(p, i, j);
  return pair(ea, eb);
}

/// The ideal slice generated literally: every injective relabeling of the
/// Kimura relation (built by ring multiplication of tau generators) times
/// every complementary-support monomial. Returns coordinate rows over Mon^m(n).
inline std::vector<std::vector<Rational>> brute_force_slice(const RingParams& p, int m) {
  const int x = static_cast<int>(p.x().get_num().get_si());
  const int k = x + 1, w = 2 * k, n = p.n();
  const auto basis = enumerate_monomials(p, m);
  std::vector<std::vector<Rational>> out;
  if (n < w || m < w) return out;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  std::set<std::vector<int>> seen_maps;
  // every injective map {1..w} -> {1..n}, as the first w entries of a permutation
  do {
    std::vector<int> iota_map(idx.begin(), idx.begin() + w);
    if (!seen_maps.insert(iota_map).second) continue;
    RingElement rel = RingElement::zero(p);
    for (const auto& g : all_permutations(k)) {
      RingElement prod = RingElement::one(p);
      for (int i = 1; i <= k; ++i) prod = prod * gen_tau(p, iota_map[i - 1], iota_map[k + g(i) - 1]);
      rel = rel + Rational(sgn(g)) * prod;
    }
    std::vector<bool> used(n + 1, false);
    for (int v : iota_map) used[v] = true;
    for (const auto& mono : enumerate_monomials(p, m - w)) {
      const auto s = mono.support();
      if (std::any_of(s.begin(), s.end(), [&](int v) { return used[v]; })) continue;
      const RingElement e = rel * RingElement::monomial(p, mono);
      std::vector<Rational> row(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) row[i] = e.coefficient(basis[i]);
      out.push_back(std::move(row));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace bvring::oracle
