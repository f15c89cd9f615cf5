#pragma once

// Gram matrix of the pairing on pure-tau monomials, its Specht eigenspaces,
// the Kimura alternating relation and the verifiers that compare the pairing
// kernel with the ideal generated by that relation.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bvring/combinat.hpp"
#include "bvring/error.hpp"
#include "bvring/linalg.hpp"
#include "bvring/ring.hpp"

namespace bvring {

/// Size limit for dense exact matrices. BVRING_MAX_DIM overrides the default.
struct Bounds {
  std::size_t max_dim = 5000;

  static Bounds from_env() {
    Bounds b;
    if (const char* env = std::getenv("BVRING_MAX_DIM"); env && *env) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*end != '\0' || v == 0) throw std::invalid_argument("BVRING_MAX_DIM must be a positive integer");
      b.max_dim = static_cast<std::size_t>(v);
    }
    return b;
  }

  void check(std::uint64_t dim, const std::string& what) const {
    if (dim > max_dim) {
      throw ResourceError(what + " needs dimension " + std::to_string(dim) + ", above the bound " +
                          std::to_string(max_dim) + " (set BVRING_MAX_DIM to raise it)");
    }
  }
};

using TauVector = LinearCombination<PerfectMatching>;

/// Number of alternating cycles in the superposition of two perfect matchings
/// of the same ground set.
inline int loop_count(const PerfectMatching& a, const PerfectMatching& b) {
  const auto ground = a.ground_set();
  if (ground != b.ground_set()) throw std::invalid_argument("loop_count: matchings on different ground sets");
  if (ground.empty()) return 0;
  const int top = ground.back();
  std::vector<int> pa(top + 1), pb(top + 1);
  for (auto [u, v] : a.pairs()) pa[u] = v, pa[v] = u;
  for (auto [u, v] : b.pairs()) pb[u] = v, pb[v] = u;
  std::vector<bool> seen(top + 1, false);
  int loops = 0;
  for (int start : ground) {
    if (seen[start]) continue;
    ++loops;
    int v = start;
    do {
      seen[v] = true;
      const int w = pa[v];
      seen[w] = true;
      v = pb[w];
    } while (v != start);
  }
  return loops;
}

inline TauVector act_on_tau_vector(const Permutation& g, const TauVector& v) {
  TauVector out;
  for (const auto& [m, c] : v) out.add_term(m.relabeled(g), c);
  return out;
}

/// Pairing matrix on the (d-1)!! perfect matchings of {1..d}. Entries are kept
/// as loop-count exponents; the evaluated entry is x^exponent.
class GramMatrix {
 public:
  GramMatrix(int d, Rational x, std::vector<PerfectMatching> basis, std::vector<std::vector<int>> exponents)
      : d_(d), x_(std::move(x)), basis_(std::move(basis)), exponents_(std::move(exponents)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  int d() const { return d_; }
  const Rational& x() const { return x_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<PerfectMatching>& basis() const { return basis_; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  Rational entry(std::size_t i, std::size_t j) const { return pow(x_, static_cast<unsigned>(exponents_[i][j])); }

  Matrix evaluated() const { return evaluated_at(x_); }

  Matrix evaluated_at(const Rational& x) const {
    std::vector<Rational> powers(d_ / 2 + 1);
    for (int k = 0; k <= d_ / 2; ++k) powers[k] = pow(x, static_cast<unsigned>(k));
    Matrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) m(i, j) = powers[exponents_[i][j]];
    }
    return m;
  }

  std::size_t index_of(const PerfectMatching& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("matching is not on the ground set {1.." + std::to_string(d_) + "}");
    return it->second;
  }

  Vector coordinates(const TauVector& v) const {
    Vector out(size());
    for (const auto& [m, c] : v) out[index_of(m)] = c;
    return out;
  }

  TauVector from_coordinates(const Vector& v) const {
    TauVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term(basis_[i], v[i]);
    return out;
  }

 private:
  int d_;
  Rational x_;
  std::vector<PerfectMatching> basis_;
  std::vector<std::vector<int>> exponents_;
  std::map<PerfectMatching, std::size_t> index_;
};

/// Builds T_{d/2}(x). Rows are split across `threads` workers; the result does
/// not depend on the thread count.
inline GramMatrix build_gram(int d, Rational x, const Bounds& bounds = {}, unsigned threads = 1) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("build_gram needs an even d >= 2");
  bounds.check(double_factorial_odd(d), "Gram matrix");
  auto basis = enumerate_matchings(d);
  const std::size_t n = basis.size();
  std::vector<std::vector<int>> exps(n, std::vector<int>(n));
  auto work = [&](std::size_t offset, std::size_t stride) {
    for (std::size_t i = offset; i < n; i += stride) {
      for (std::size_t j = i; j < n; ++j) exps[i][j] = loop_count(basis[i], basis[j]);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) exps[i][j] = exps[j][i];
  }
  return GramMatrix(d, std::move(x), std::move(basis), std::move(exps));
}

// ---------------------------------------------------------------------------
// Specht embedding

/// phi({T}) = prod over rows of (sum of all perfect matchings of that row).
inline TauVector phi(const Tabloid& t) {
  std::vector<PerfectMatching> partial{PerfectMatching{}};
  for (const auto& row : t.rows()) {
    if (row.size() % 2 != 0) throw std::invalid_argument("phi needs rows of even length");
    const auto row_matchings = enumerate_matchings_of(row);
    std::vector<PerfectMatching> next;
    next.reserve(partial.size() * row_matchings.size());
    for (const auto& p : partial) {
      for (const auto& r : row_matchings) next.push_back(p.joined(r));
    }
    partial = std::move(next);
  }
  TauVector out;
  for (auto& m : partial) out.add_term(m, 1);
  return out;
}

inline TauVector phi(const TabloidVector& v) {
  TauVector out;
  for (const auto& [t, c] : v) out += c * phi(t);
  return out;
}

inline TauVector phi_polytabloid(const YoungTableau& t) {
  if (!t.shape().all_even()) throw std::invalid_argument("phi needs rows of even length");
  return phi(polytabloid(t));
}

/// Returns c when G v = c v exactly, nothing otherwise.
inline std::optional<Rational> eigencheck(const GramMatrix& g, const TauVector& v) {
  if (v.empty()) throw std::invalid_argument("eigencheck needs a nonzero vector");
  const Vector coords = g.coordinates(v);
  const Vector image = g.evaluated() * coords;
  std::size_t lead = 0;
  while (coords[lead] == 0) ++lead;
  const Rational c = image[lead] / coords[lead];
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (image[i] != c * coords[i]) return std::nullopt;
  }
  return c;
}

inline std::vector<TauVector> kernel_basis(const GramMatrix& g) {
  std::vector<TauVector> out;
  for (const auto& v : kernel(g.evaluated())) out.push_back(g.from_coordinates(v));
  return out;
}

// ---------------------------------------------------------------------------
// Kimura relation and its ideal

inline int require_positive_integer(const Rational& x) {
  if (!is_integer(x) || x < 1 || !x.get_num().fits_sint_p()) {
    throw std::invalid_argument("the Kimura relation needs x to be a positive integer, got " + x.get_str());
  }
  return static_cast<int>(x.get_num().get_si());
}

/// sum over g in S_{x+1} of sgn(g) prod_i tau_{i, x+1+g(i)} on the ground set {1..2(x+1)}.
inline TauVector kimura_tau_vector(int x) {
  if (x < 1) throw std::invalid_argument("kimura relation needs x >= 1");
  const int k = x + 1;
  TauVector out;
  for (const auto& g : all_permutations(k)) {
    std::vector<PerfectMatching::Pair> pairs;
    for (int i = 1; i <= k; ++i) pairs.emplace_back(i, k + g(i));
    out.add_term(PerfectMatching(std::move(pairs)), sgn(g));
  }
  return out;
}

inline RingElement from_tau_vector(const RingParams& p, const TauVector& v) {
  RingElement::Terms t;
  for (const auto& [m, c] : v) {
    Monomial mono{m.pairs(), {}, {}};
    RingElement::validate(p, mono);
    t.add_term(mono, c);
  }
  return RingElement(p, std::move(t));
}

/// Pure-tau element read back as a combination of matchings. Throws if any
/// monomial carries an l or o factor.
inline TauVector to_tau_vector(const RingElement& a) {
  TauVector out;
  for (const auto& [m, c] : a.terms()) {
    if (!m.is_pure_tau()) throw std::invalid_argument("element is not a combination of pure tau monomials");
    out.add_term(PerfectMatching(m.tau), c);
  }
  return out;
}

/// The Kimura relation in R(S^{2(x+1)}) with no divisor classes.
inline RingElement kimura_relation(int x) {
  return from_tau_vector(RingParams(2 * (x + 1), {}, x), kimura_tau_vector(x));
}

namespace detail {

inline void subsets_rec(const std::vector<int>& pool, std::size_t from, std::size_t k, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
  if (acc.size() == k) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i + (k - acc.size()) <= pool.size(); ++i) {
    acc.push_back(pool[i]);
    subsets_rec(pool, i + 1, k, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> subsets(const std::vector<int>& pool, std::size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  subsets_rec(pool, 0, k, acc, out);
  return out;
}

struct TermsLess {
  bool operator()(const RingElement::Terms& a, const RingElement::Terms& b) const { return a.terms() < b.terms(); }
};

}  // namespace detail

/// Spanning set of the codegree-m slice of the ideal generated by all index
/// relabelings of the Kimura relation: each relabeling times every canonical
/// monomial of codegree m - 2(x+1) supported on the unused indices.
///
/// Relabelings that differ by a permutation inside either block of x+1
/// indices, or by swapping the two blocks, give the same element up to sign,
/// so only one relabeling per unordered pair of disjoint blocks is used.
/// Results are deduplicated up to sign.
inline std::vector<RingElement> kimura_ideal_slice(const RingParams& p, int m) {
  const int x = require_positive_integer(p.x());
  const int k = x + 1;
  const int w = 2 * k;
  const int n = p.n();
  if (m < 0 || m > 2 * n) throw RangeError("codegree out of range");
  std::vector<RingElement> out;
  if (n < w || m < w) return out;

  const TauVector rel = kimura_tau_vector(x);
  const int rest = n - w;
  std::vector<Monomial> multipliers;
  if (rest == 0) {
    if (m == w) multipliers.push_back(Monomial{});
  } else if (m - w <= 2 * rest) {
    multipliers = enumerate_monomials(p.with_n(rest), m - w);
  }
  if (multipliers.empty()) return out;

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;

  std::set<RingElement::Terms, detail::TermsLess> seen;
  for (const auto& a : detail::subsets(all, k)) {
    std::vector<int> remaining;
    std::set_difference(all.begin(), all.end(), a.begin(), a.end(), std::back_inserter(remaining));
    for (const auto& b : detail::subsets(remaining, k)) {
      if (b.front() < a.front()) continue;
      // relabel i -> a[i-1], k+i -> b[i-1]
      std::vector<int> label(w + 1);
      for (int i = 1; i <= k; ++i) {
        label[i] = a[i - 1];
        label[k + i] = b[i - 1];
      }
      std::vector<int> complement;
      std::vector<int> used = a;
      used.insert(used.end(), b.begin(), b.end());
      std::sort(used.begin(), used.end());
      std::set_difference(all.begin(), all.end(), used.begin(), used.end(), std::back_inserter(complement));

      RingElement::Terms base;
      for (const auto& [mt, c] : rel) {
        Monomial mono;
        for (auto [u, v] : mt.pairs()) mono.tau.emplace_back(label[u], label[v]);
        mono.canonicalize();
        base.add_term(mono, c);
      }
      for (const auto& mult : multipliers) {
        Monomial shifted;
        for (auto [u, v] : mult.tau) shifted.tau.emplace_back(complement[u - 1], complement[v - 1]);
        for (auto [j, s] : mult.l) shifted.l.emplace_back(complement[j - 1], s);
        for (int kk : mult.o) shifted.o.push_back(complement[kk - 1]);
        shifted.canonicalize();
        RingElement::Terms prod;
        for (const auto& [mono, c] : base) {
          if (auto r = multiply_monomials(p, mono, shifted)) prod.add_term(r->second, c * r->first);
        }
        if (prod.empty()) continue;
        if (prod.begin()->second < 0) prod *= -1;
        if (seen.insert(prod).second) out.emplace_back(p, prod);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verifiers

/// Sum of dim V_lambda over even lambda |- d with at least x+1 parts.
inline std::uint64_t predicted_kernel_dim(int d, const Rational& x) {
  std::uint64_t total = 0;
  for (const auto& lam : enumerate_even_partitions(d)) {
    if (lam.length() >= x + 1) total += hook_length_dim(lam);
  }
  return total;
}

struct KernelGenReport {
  int d = 0;
  int x = 0;
  std::size_t basis_size = 0;
  std::size_t kernel_dim = 0;
  std::size_t slice_size = 0;
  std::size_t slice_rank = 0;
  std::uint64_t predicted_dim = 0;
  bool equal = false;
  bool passed() const { return equal && kernel_dim == predicted_dim; }
};

/// Compares the kernel of T_{d/2}(x) with the pure-tau part of the Kimura
/// ideal slice in R(S^d).
inline KernelGenReport verify_kernel_generated(int d, int x, const Bounds& bounds = {}) {
  if (x < 1) throw std::invalid_argument("verify_kernel_generated needs x >= 1");
  KernelGenReport rep;
  rep.d = d;
  rep.x = x;
  const GramMatrix g = build_gram(d, x, bounds);
  rep.basis_size = g.size();
  const auto ker = kernel(g.evaluated());
  rep.kernel_dim = ker.size();

  std::vector<Vector> slice;
  for (const auto& e : kimura_ideal_slice(RingParams(d, {}, x), d)) {
    const bool pure = std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.is_pure_tau(); });
    if (pure) slice.push_back(g.coordinates(to_tau_vector(e)));
  }
  rep.slice_size = slice.size();
  rep.slice_rank = span_rank(slice, g.size());
  std::vector<Vector> joint = ker;
  joint.insert(joint.end(), slice.begin(), slice.end());
  const std::size_t joint_rank = span_rank(joint, g.size());
  rep.equal = rep.kernel_dim == rep.slice_rank && joint_rank == rep.kernel_dim;
  rep.predicted_dim = predicted_kernel_dim(d, x);
  return rep;
}

/// Full pairing matrix between Mon^m(n) (rows) and Mon^{2n-m}(n) (columns).
inline Matrix pairing_matrix(const RingParams& p, const std::vector<Monomial>& rows, const std::vector<Monomial>& cols) {
  const Monomial top = top_monomial(p.n());
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (auto r = multiply_monomials(p, rows[i], cols[j]); r && r->second == top) out(i, j) = r->first;
    }
  }
  return out;
}

struct PerfectPairingReport {
  int n = 0;
  int m = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t slice_size = 0;
  std::size_t slice_rank = 0;
  bool kernel_in_ideal = false;
  bool ideal_in_kernel = false;
  bool passed() const { return kernel_in_ideal && ideal_in_kernel; }
};

/// Checks that the kernel of the pairing R^m x R^{2n-m} -> Q is exactly the
/// span of the Kimura ideal slice in codegree m. When x is not a positive
/// integer there is no Kimura relation and the slice is empty.
inline PerfectPairingReport verify_perfect_pairing(const RingParams& p, int m, const Bounds& bounds = {}) {
  PerfectPairingReport rep;
  rep.n = p.n();
  rep.m = m;
  const auto rows = enumerate_monomials(p, m);
  const auto cols = enumerate_monomials(p, 2 * p.n() - m);
  rep.rows = rows.size();
  rep.cols = cols.size();
  bounds.check(std::max(rows.size(), cols.size()), "pairing matrix");

  const Matrix pm = pairing_matrix(p, rows, cols);
  const Matrix pt = pm.transposed();
  const auto ker = kernel(pt);
  rep.kernel_dim = ker.size();
  rep.rank = rows.size() - ker.size();

  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  std::vector<Vector> slice;
  const bool has_relation = is_integer(p.x()) && p.x() >= 1;
  if (has_relation) {
    for (const auto& e : kimura_ideal_slice(p, m)) {
      Vector v(rows.size());
      for (const auto& [mono, c] : e.terms()) v[index.at(mono)] = c;
      slice.push_back(std::move(v));
    }
  }
  rep.slice_size = slice.size();
  rep.slice_rank = span_rank(slice, rows.size());
  rep.ideal_in_kernel = std::all_of(slice.begin(), slice.end(), [&](const Vector& v) {
    const Vector img = pt * v;
    return std::all_of(img.begin(), img.end(), [](const Rational& q) { return q == 0; });
  });
  rep.kernel_in_ideal = span_contains(slice, ker, rows.size());
  return rep;
}

/// One even shape lambda |- d and how its Specht module sits in T_{d/2}(x).
struct SpechtBlock {
  IntPartition shape;
  std::uint64_t hook_dim = 0;
  std::size_t tableaux = 0;
  std::size_t phi_rank = 0;           // rank of {phi(E_T) : T standard}
  std::optional<Rational> eigenvalue;  // set when every phi(E_T) shares one eigenvalue
  bool predicted_zero = false;        // parts(lambda) >= x+1

  bool consistent() const {
    return eigenvalue && phi_rank == hook_dim && tableaux == hook_dim && ((*eigenvalue == 0) == predicted_zero);
  }
};

inline std::vector<SpechtBlock> specht_blocks(const GramMatrix& g) {
  std::vector<SpechtBlock> out;
  for (const auto& lam : enumerate_even_partitions(g.d())) {
    SpechtBlock blk;
    blk.shape = lam;
    blk.hook_dim = hook_length_dim(lam);
    blk.predicted_zero = lam.length() >= g.x() + 1;
    const auto tabs = enumerate_standard_tableaux(lam);
    blk.tableaux = tabs.size();
    std::vector<Vector> images;
    bool shared = true;
    std::optional<Rational> value;
    for (const auto& t : tabs) {
      const TauVector v = phi_polytabloid(t);
      images.push_back(g.coordinates(v));
      auto c = eigencheck(g, v);
      if (!c || (value && *value != *c)) shared = false;
      if (c && !value) value = c;
    }
    blk.phi_rank = span_rank(images, g.size());
    if (shared) blk.eigenvalue = value;
    out.push_back(std::move(blk));
  }
  return out;
}

}  // namespace bvring
