#pragma once

// Self-contained verification routines shared by the CLI `verify` command and
// the acceptance suite. Each returns a small report; none of them throws on a
// failed check.

#include <cstdint>
#include <random>
#include <vector>

#include "bvring/combinat.hpp"
#include "bvring/ring.hpp"
#include "bvring/spectral.hpp"

namespace bvring {

struct RelationReport {
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool passed() const { return instances > 0 && failures == 0; }
};

namespace detail {

inline void expect(RelationReport& r, const RingElement& lhs, const RingElement& rhs) {
  ++r.instances;
  if (!(lhs == rhs)) ++r.failures;
}

}  // namespace detail

/// The local rewriting relations, for every ordered index pattern i, j, k and
/// every divisor label pair.
inline RelationReport check_bv_relations(const RingParams& p) {
  RelationReport r;
  const int n = p.n();
  const auto zero = RingElement::zero(p);
  for (int i = 1; i <= n; ++i) {
    const auto oi = gen_o(p, i);
    detail::expect(r, oi * oi, zero);
    for (int s = 1; s <= p.rho(); ++s) {
      const auto ls = gen_l(p, s, i);
      detail::expect(r, ls * oi, zero);
      detail::expect(r, ls * ls, p.degree(s) * oi);
      for (int t = 1; t <= p.rho(); ++t) {
        if (t != s) detail::expect(r, ls * gen_l(p, t, i), zero);
      }
    }
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const auto tij = gen_tau(p, i, j);
      detail::expect(r, tij * oi, zero);
      for (int s = 1; s <= p.rho(); ++s) detail::expect(r, tij * gen_l(p, s, i), zero);
      detail::expect(r, tij * tij, p.x() * (oi * gen_o(p, j)));
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        detail::expect(r, tij * gen_tau(p, i, k), gen_tau(p, j, k) * oi);
      }
    }
  }
  return r;
}

/// The original relations in terms of delta_{i,j}. They hold verbatim only
/// under the K3 convention x = 22 - rho.
inline RelationReport check_delta_closure(const RingParams& p) {
  RelationReport r;
  const int n = p.n();
  for (int i = 1; i <= n; ++i) {
    const auto oi = gen_o(p, i);
    for (int s = 1; s <= p.rho(); ++s) {
      const auto ls = gen_l(p, s, i);
      detail::expect(r, ls * ls, p.degree(s) * oi);
    }
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const auto oj = gen_o(p, j);
      const auto dij = gen_delta(p, i, j);
      detail::expect(r, dij * oi, oi * oj);
      for (int s = 1; s <= p.rho(); ++s) {
        detail::expect(r, dij * gen_l(p, s, i), gen_l(p, s, i) * oj + oi * gen_l(p, s, j));
      }
      detail::expect(r, dij * dij, Rational(24) * (oi * oj));
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        const auto ok = gen_o(p, k);
        const auto dik = gen_delta(p, i, k);
        const auto djk = gen_delta(p, j, k);
        const auto rhs = dij * ok + dik * oj + djk * oi - oi * oj - oi * ok - oj * ok;
        detail::expect(r, dij * dik, rhs);
      }
    }
  }
  return r;
}

/// Random element with up to `max_terms` monomials of mixed codegree and small
/// integer coefficients.
inline RingElement random_element(const RingParams& p, std::mt19937_64& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, 2 * p.n());
  std::uniform_int_distribution<int> coef(-5, 5);
  RingElement::Terms t;
  const int count = nterms(rng);
  for (int k = 0; k < count; ++k) {
    const auto monos = enumerate_monomials(p, deg(rng));
    if (monos.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    t.add_term(monos[pick(rng)], coef(rng));
  }
  return RingElement(p, std::move(t));
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

/// Sampled commutativity, associativity, distributivity, unit and
/// permutation-equivariance checks.
inline RelationReport check_ring_axioms(const RingParams& p, std::uint64_t seed, int samples) {
  RelationReport r;
  std::mt19937_64 rng(seed);
  const auto one = RingElement::one(p);
  for (int k = 0; k < samples; ++k) {
    const auto a = random_element(p, rng);
    const auto b = random_element(p, rng);
    const auto c = random_element(p, rng);
    const auto g = random_permutation(p.n(), rng);
    detail::expect(r, a * b, b * a);
    detail::expect(r, (a * b) * c, a * (b * c));
    detail::expect(r, a * (b + c), a * b + a * c);
    detail::expect(r, one * a, a);
    detail::expect(r, apply_permutation(g, a * b), apply_permutation(g, a) * apply_permutation(g, b));
  }
  return r;
}

struct BlockStructureReport {
  std::size_t pairs_checked = 0;
  std::size_t nonzero = 0;
  std::size_t support_exceptions = 0;  // nonzero entry violating I'=I, J'=J, beta'=beta, K'=complement
  std::size_t value_mismatches = 0;    // entry differing from x^loops * prod d_beta(j)
  bool passed() const { return pairs_checked > 0 && support_exceptions == 0 && value_mismatches == 0; }
};

namespace detail {

inline std::vector<int> tau_support(const Monomial& m) {
  std::vector<int> s;
  for (auto [a, b] : m.tau) {
    s.push_back(a);
    s.push_back(b);
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Exhaustive check of the block shape of every pairing matrix
/// Mon^m(n) x Mon^{2n-m}(n), together with the closed form of the entries in
/// the admissible blocks.
inline BlockStructureReport check_block_structure(const RingParams& p) {
  BlockStructureReport rep;
  const int n = p.n();
  for (int m = 0; m <= 2 * n; ++m) {
    const auto rows = enumerate_monomials(p, m);
    const auto cols = enumerate_monomials(p, 2 * n - m);
    for (const auto& a : rows) {
      const auto dual_o = complement_dual(a, n).o;
      for (const auto& b : cols) {
        ++rep.pairs_checked;
        const Rational value = pair(RingElement::monomial(p, a), RingElement::monomial(p, b));
        const bool admissible = detail::tau_support(a) == detail::tau_support(b) && a.l == b.l && b.o == dual_o;
        if (value != 0) {
          ++rep.nonzero;
          if (!admissible) ++rep.support_exceptions;
        }
        if (admissible) {
          Rational expected = pow(p.x(), static_cast<unsigned>(loop_count(PerfectMatching(a.tau), PerfectMatching(b.tau))));
          for (auto [j, s] : a.l) expected *= p.degree(s);
          if (value != expected) ++rep.value_mismatches;
        }
      }
    }
  }
  return rep;
}

struct OracleReport {
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  bool passed() const { return pairs > 0 && disagreements == 0; }
};

/// x^loop_count(a, b) against the rewriting engine's pairing of tau_a and tau_b
/// in R(S^d), over every pair of matchings.
inline OracleReport check_loop_count_oracle(int d, const Rational& x) {
  OracleReport rep;
  const RingParams p(d, {}, x);
  const auto ms = enumerate_matchings(d);
  for (const auto& a : ms) {
    const auto ea = RingElement::monomial(p, Monomial{a.pairs(), {}, {}});
    for (const auto& b : ms) {
      const auto eb = RingElement::monomial(p, Monomial{b.pairs(), {}, {}});
      ++rep.pairs;
      if (pair(ea, eb) != pow(x, static_cast<unsigned>(loop_count(a, b)))) ++rep.disagreements;
    }
  }
  return rep;
}

/// Two-column tableau with rows (i, x+1+i).
inline YoungTableau kimura_tableau(int x) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= x + 1; ++i) rows.push_back({i, x + 1 + i});
  return YoungTableau(std::move(rows));
}

struct KimuraIdentityReport {
  int x = 0;
  std::size_t terms = 0;
  bool equal = false;
};

/// phi(E_T) for the two-column tableau against (x+1)! times the Kimura relation.
inline KimuraIdentityReport check_kimura_identity(int x) {
  KimuraIdentityReport rep;
  rep.x = x;
  const TauVector lhs = phi_polytabloid(kimura_tableau(x));
  Integer fact = 1;
  for (int k = 2; k <= x + 1; ++k) fact *= k;
  const TauVector rhs = Rational(fact) * kimura_tau_vector(x);
  rep.terms = lhs.size();
  rep.equal = lhs == rhs;
  return rep;
}

struct EigenReport {
  int d = 0;
  Rational x;
  std::vector<SpechtBlock> blocks;
  std::size_t kernel_dim = 0;
  std::uint64_t predicted_dim = 0;
  bool passed() const {
    return kernel_dim == predicted_dim &&
           std::all_of(blocks.begin(), blocks.end(), [](const SpechtBlock& b) { return b.consistent(); });
  }
};

/// Specht eigenspaces of T_{d/2}(x) and the kernel dimension by elimination.
inline EigenReport check_eigen(int d, const Rational& x, const Bounds& bounds = {}) {
  EigenReport rep;
  rep.d = d;
  rep.x = x;
  const GramMatrix g = build_gram(d, x, bounds);
  rep.blocks = specht_blocks(g);
  rep.kernel_dim = kernel(g.evaluated()).size();
  rep.predicted_dim = predicted_kernel_dim(d, x);
  return rep;
}

}  // namespace bvring
