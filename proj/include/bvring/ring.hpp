#pragma once

// The graded ring R(S^n) generated by point classes o_i, divisor classes l^s_i
// and transcendental diagonal classes tau_{i,j}, presented by local rewriting
// rules. Elements are exact Q-linear combinations of square-free canonical
// monomials tau_{I,alpha} * l_{J,beta} * o_K.

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvring/combinat.hpp"
#include "bvring/error.hpp"
#include "bvring/linear_combination.hpp"
#include "bvring/rational.hpp"

namespace bvring {

/// Parameters fixing one ring instance: number of factors n, the
/// self-intersection numbers d_s of an orthogonal divisor basis (rho = their
/// count), and the transcendental rank x. Copies share one immutable payload.
class RingParams {
 public:
  RingParams(int n, std::vector<Rational> degrees, Rational x)
      : data_(std::make_shared<const Data>(Data{n, std::move(degrees), std::move(x)})) {
    if (n < 1) throw std::invalid_argument("ring needs n >= 1");
    for (const auto& d : data_->degrees) {
      if (d == 0) throw std::invalid_argument("divisor self-intersection must be nonzero");
    }
  }

  /// K3 convention: x = 22 - rho.
  static RingParams k3(int n, std::vector<Rational> degrees) {
    Rational x = 22 - static_cast<long>(degrees.size());
    return RingParams(n, std::move(degrees), std::move(x));
  }

  int n() const { return data_->n; }
  int rho() const { return static_cast<int>(data_->degrees.size()); }
  const Rational& x() const { return data_->x; }
  /// d_s for 1 <= s <= rho.
  const Rational& degree(int s) const { return data_->degrees.at(s - 1); }
  const std::vector<Rational>& degrees() const { return data_->degrees; }

  /// Same parameters with a different number of factors.
  RingParams with_n(int n) const { return RingParams(n, data_->degrees, data_->x); }

  friend bool operator==(const RingParams& a, const RingParams& b) {
    return a.data_ == b.data_ ||
           (a.n() == b.n() && a.x() == b.x() && a.data_->degrees == b.data_->degrees);
  }

 private:
  struct Data {
    int n;
    std::vector<Rational> degrees;
    Rational x;
  };
  std::shared_ptr<const Data> data_;
};

/// Canonical square-free monomial tau_{I,alpha} * l_{J,beta} * o_K.
///
/// `tau` holds the pairs of alpha as (min,max), sorted; `l` holds (j, beta(j))
/// sorted by index; `o` is K sorted. The member order is also the canonical
/// monomial order: lexicographic on (tau, l, o).
struct Monomial {
  std::vector<std::pair<int, int>> tau;
  std::vector<std::pair<int, int>> l;
  std::vector<int> o;

  int codegree() const { return static_cast<int>(2 * tau.size() + l.size() + 2 * o.size()); }
  bool is_unit() const { return tau.empty() && l.empty() && o.empty(); }
  bool is_pure_tau() const { return l.empty() && o.empty(); }

  /// Indices used by the monomial, sorted.
  std::vector<int> support() const {
    std::vector<int> s;
    for (auto [a, b] : tau) {
      s.push_back(a);
      s.push_back(b);
    }
    for (auto [j, lab] : l) s.push_back(j);
    s.insert(s.end(), o.begin(), o.end());
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Re-sorts the three factor lists; pairs are oriented (min,max).
  void canonicalize() {
    for (auto& [a, b] : tau) {
      if (a > b) std::swap(a, b);
    }
    std::sort(tau.begin(), tau.end());
    std::sort(l.begin(), l.end());
    std::sort(o.begin(), o.end());
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

namespace detail {

/// What a single index carries inside a square-free monomial.
struct Slot {
  enum Kind : unsigned char { kFree, kO, kL, kTau };
  Kind kind = kFree;
  int value = 0;  // divisor label for kL, partner index for kTau
};

/// Mutable per-index view of one monomial, used while multiplying in factors.
class LocalState {
 public:
  LocalState(const RingParams& p, const Monomial& m) : params_(p), slots_(p.n() + 1) {
    for (auto [a, b] : m.tau) {
      slots_[a] = {Slot::kTau, b};
      slots_[b] = {Slot::kTau, a};
    }
    for (auto [j, s] : m.l) slots_[j] = {Slot::kL, s};
    for (int k : m.o) slots_[k] = {Slot::kO, 0};
  }

  const Rational& coef() const { return coef_; }

  // Each of these returns false when the product vanishes.

  bool times_o(int i) {
    if (slots_[i].kind != Slot::kFree) return false;  // o*o, l*o, tau*o all vanish
    slots_[i] = {Slot::kO, 0};
    return true;
  }

  bool times_l(int s, int i) {
    Slot& slot = slots_[i];
    if (slot.kind == Slot::kFree) {
      slot = {Slot::kL, s};
      return true;
    }
    if (slot.kind != Slot::kL || slot.value != s) return false;  // l*o, tau*l, l^s*l^t (s != t)
    coef_ *= params_.degree(s);
    slot = {Slot::kO, 0};
    return true;
  }

  bool times_tau(int i, int j) {
    for (;;) {
      Slot& si = slots_[i];
      Slot& sj = slots_[j];
      if (si.kind == Slot::kO || si.kind == Slot::kL || sj.kind == Slot::kO || sj.kind == Slot::kL) {
        return false;
      }
      if (si.kind == Slot::kTau && si.value == j) {
        // tau_{i,j}^2 = x o_i o_j
        if (params_.x() == 0) return false;
        coef_ *= params_.x();
        si = {Slot::kO, 0};
        sj = {Slot::kO, 0};
        return true;
      }
      if (si.kind == Slot::kTau) {
        // tau_{i,k} tau_{i,j} = tau_{k,j} o_i
        const int k = si.value;
        si = {Slot::kO, 0};
        slots_[k] = {};
        i = k;
        continue;
      }
      if (sj.kind == Slot::kTau) {
        const int k = sj.value;
        sj = {Slot::kO, 0};
        slots_[k] = {};
        j = k;
        continue;
      }
      si = {Slot::kTau, j};
      sj = {Slot::kTau, i};
      return true;
    }
  }

  Monomial monomial() const {
    Monomial m;
    for (int i = 1; i < static_cast<int>(slots_.size()); ++i) {
      const Slot& s = slots_[i];
      switch (s.kind) {
        case Slot::kFree:
          break;
        case Slot::kO:
          m.o.push_back(i);
          break;
        case Slot::kL:
          m.l.emplace_back(i, s.value);
          break;
        case Slot::kTau:
          if (i < s.value) m.tau.emplace_back(i, s.value);
          break;
      }
    }
    return m;
  }

 private:
  const RingParams& params_;
  std::vector<Slot> slots_;
  Rational coef_ = 1;
};

}  // namespace detail

/// Product of two canonical monomials: either zero or a single scalar
/// multiple of a canonical monomial.
inline std::optional<std::pair<Rational, Monomial>> multiply_monomials(const RingParams& p, const Monomial& a,
                                                                      const Monomial& b) {
  detail::LocalState st(p, a);
  for (int k : b.o) {
    if (!st.times_o(k)) return std::nullopt;
  }
  for (auto [j, s] : b.l) {
    if (!st.times_l(s, j)) return std::nullopt;
  }
  for (auto [i, j] : b.tau) {
    if (!st.times_tau(i, j)) return std::nullopt;
  }
  return std::make_pair(st.coef(), st.monomial());
}

/// Element of R(S^n): a finite exact-rational combination of canonical
/// monomials over a fixed RingParams.
class RingElement {
 public:
  using Terms = LinearCombination<Monomial>;

  explicit RingElement(RingParams p) : params_(std::move(p)) {}
  RingElement(RingParams p, Terms terms) : params_(std::move(p)), terms_(std::move(terms)) {}

  static RingElement zero(const RingParams& p) { return RingElement(p); }
  static RingElement one(const RingParams& p) { return RingElement(p, Terms(Monomial{})); }

  /// Single monomial after validating it against the parameters.
  static RingElement monomial(const RingParams& p, Monomial m, const Rational& coef = 1) {
    m.canonicalize();
    validate(p, m);
    return RingElement(p, Terms(std::move(m), coef));
  }

  const RingParams& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const { return terms_.coefficient(m); }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  static void validate(const RingParams& p, const Monomial& m) {
    auto s = m.support();
    if (!s.empty() && (s.front() < 1 || s.back() > p.n())) {
      throw RangeError("monomial index out of range 1.." + std::to_string(p.n()));
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("monomial is not square-free");
    }
    for (auto [j, lab] : m.l) {
      if (lab < 1 || lab > p.rho()) throw RangeError("divisor label out of range 1.." + std::to_string(p.rho()));
    }
  }

 private:
  RingParams params_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Generators

namespace detail {
inline void check_index(const RingParams& p, int i) {
  if (i < 1 || i > p.n()) {
    throw RangeError("index " + std::to_string(i) + " out of range 1.." + std::to_string(p.n()));
  }
}
inline void check_label(const RingParams& p, int s) {
  if (s < 1 || s > p.rho()) {
    throw RangeError("divisor label " + std::to_string(s) + " out of range 1.." + std::to_string(p.rho()));
  }
}
}  // namespace detail

inline RingElement gen_o(const RingParams& p, int i) {
  detail::check_index(p, i);
  return RingElement::monomial(p, Monomial{{}, {}, {i}});
}

inline RingElement gen_l(const RingParams& p, int s, int i) {
  detail::check_label(p, s);
  detail::check_index(p, i);
  return RingElement::monomial(p, Monomial{{}, {{i, s}}, {}});
}

inline RingElement gen_tau(const RingParams& p, int i, int j) {
  detail::check_index(p, i);
  detail::check_index(p, j);
  if (i == j) throw RangeError("tau needs two distinct indices");
  return RingElement::monomial(p, Monomial{{{i, j}}, {}, {}});
}

/// delta_{i,j} = tau_{i,j} + o_i + o_j + sum_s l^s_i l^s_j / d_s.
inline RingElement gen_delta(const RingParams& p, int i, int j) {
  RingElement::Terms t = gen_tau(p, i, j).terms();
  t.add_term(Monomial{{}, {}, {std::min(i, j)}}, 1);
  t.add_term(Monomial{{}, {}, {std::max(i, j)}}, 1);
  for (int s = 1; s <= p.rho(); ++s) {
    Monomial m{{}, {{i, s}, {j, s}}, {}};
    m.canonicalize();
    t.add_term(m, 1 / p.degree(s));
  }
  return RingElement(p, std::move(t));
}

// ---------------------------------------------------------------------------
// Arithmetic

inline void check_same_params(const RingElement& a, const RingElement& b) {
  if (!(a.params() == b.params())) throw ParamsMismatch();
}

inline RingElement add(const RingElement& a, const RingElement& b) {
  check_same_params(a, b);
  return RingElement(a.params(), a.terms() + b.terms());
}

inline RingElement scale(const Rational& c, const RingElement& a) { return RingElement(a.params(), c * a.terms()); }

inline RingElement mul(const RingElement& a, const RingElement& b) {
  check_same_params(a, b);
  RingElement::Terms out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (auto prod = multiply_monomials(a.params(), ma, mb)) {
        out.add_term(prod->second, ca * cb * prod->first);
      }
    }
  }
  return RingElement(a.params(), std::move(out));
}

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return add(a, scale(-1, b)); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline RingElement operator*(const Rational& c, const RingElement& a) { return scale(c, a); }

/// a^k by repeated multiplication; a^0 is the unit.
inline RingElement power(const RingElement& a, unsigned k) {
  RingElement r = RingElement::one(a.params());
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

inline std::optional<int> homogeneous_degree(const RingElement& a) {
  if (a.is_zero()) return std::nullopt;
  const int m = a.terms().begin()->first.codegree();
  for (const auto& [mono, c] : a.terms()) {
    if (mono.codegree() != m) return std::nullopt;
  }
  return m;
}

/// Common codegree of a homogeneous nonzero element.
inline int degree(const RingElement& a) {
  auto m = homogeneous_degree(a);
  if (!m) throw DegreeError("not homogeneous");
  return *m;
}

// ---------------------------------------------------------------------------
// Symmetry, duality and the top-degree pairing

inline Monomial relabel(const Monomial& m, const Permutation& g) {
  Monomial out;
  for (auto [a, b] : m.tau) out.tau.emplace_back(g(a), g(b));
  for (auto [j, s] : m.l) out.l.emplace_back(g(j), s);
  for (int k : m.o) out.o.push_back(g(k));
  out.canonicalize();
  return out;
}

inline RingElement apply_permutation(const Permutation& g, const RingElement& a) {
  if (g.size() != a.params().n()) {
    throw RangeError("permutation degree " + std::to_string(g.size()) + " differs from n = " +
                     std::to_string(a.params().n()));
  }
  RingElement::Terms out;
  for (const auto& [m, c] : a.terms()) out.add_term(relabel(m, g), c);
  return RingElement(a.params(), std::move(out));
}

/// tau_{I,alpha} l_{J,beta} o_K  <->  tau_{I,alpha} l_{J,beta} o_{(I u J u K)^c}.
inline Monomial complement_dual(const Monomial& m, int n) {
  Monomial out{m.tau, m.l, {}};
  std::vector<bool> used(n + 1, false);
  for (auto [a, b] : m.tau) used[a] = used[b] = true;
  for (auto [j, s] : m.l) used[j] = true;
  for (int k : m.o) used[k] = true;
  for (int i = 1; i <= n; ++i) {
    if (!used[i]) out.o.push_back(i);
  }
  return out;
}

inline Monomial top_monomial(int n) {
  Monomial m;
  for (int i = 1; i <= n; ++i) m.o.push_back(i);
  return m;
}

/// Coefficient of o_1 ... o_n in an element of top codegree 2n.
inline Rational top_coefficient(const RingElement& a) {
  if (a.is_zero()) return 0;
  const int n = a.params().n();
  auto m = homogeneous_degree(a);
  if (!m || *m != 2 * n) throw DegreeError("top_coefficient needs codegree " + std::to_string(2 * n));
  return a.coefficient(top_monomial(n));
}

/// Intersection pairing R^m x R^{2n-m} -> Q.
inline Rational pair(const RingElement& a, const RingElement& b) {
  check_same_params(a, b);
  if (a.is_zero() || b.is_zero()) return 0;
  auto da = homogeneous_degree(a);
  auto db = homogeneous_degree(b);
  if (!da || !db) throw DegreeError("pairing needs homogeneous arguments");
  if (*da + *db != 2 * a.params().n()) {
    throw DegreeError("pairing degrees " + std::to_string(*da) + " + " + std::to_string(*db) + " != 2n");
  }
  return top_coefficient(mul(a, b));
}

// ---------------------------------------------------------------------------
// Monomial enumeration

namespace detail {

inline void enumerate_rec(const RingParams& p, int i, int budget, std::vector<Slot>& slots,
                          std::vector<Monomial>& out) {
  const int n = p.n();
  while (i <= n && slots[i].kind != Slot::kFree) ++i;
  if (i > n) {
    if (budget != 0) return;
    Monomial m;
    for (int k = 1; k <= n; ++k) {
      const Slot& s = slots[k];
      if (s.kind == Slot::kO) m.o.push_back(k);
      if (s.kind == Slot::kL) m.l.emplace_back(k, s.value);
      if (s.kind == Slot::kTau && k < s.value) m.tau.emplace_back(k, s.value);
    }
    out.push_back(std::move(m));
    return;
  }
  if (budget < 0) return;
  // index i stays unused
  enumerate_rec(p, i + 1, budget, slots, out);
  if (budget >= 2) {
    slots[i] = {Slot::kO, 0};
    enumerate_rec(p, i + 1, budget - 2, slots, out);
    slots[i] = {};
  }
  if (budget >= 1) {
    for (int s = 1; s <= p.rho(); ++s) {
      slots[i] = {Slot::kL, s};
      enumerate_rec(p, i + 1, budget - 1, slots, out);
    }
    slots[i] = {};
  }
  if (budget >= 2) {
    for (int j = i + 1; j <= n; ++j) {
      if (slots[j].kind != Slot::kFree) continue;
      slots[i] = {Slot::kTau, j};
      slots[j] = {Slot::kTau, i};
      enumerate_rec(p, i + 1, budget - 2, slots, out);
      slots[j] = {};
    }
    slots[i] = {};
  }
}

}  // namespace detail

/// Mon^m(n): every canonical monomial of codegree m, in canonical order.
inline std::vector<Monomial> enumerate_monomials(const RingParams& p, int m) {
  if (m < 0 || m > 2 * p.n()) {
    throw RangeError("codegree " + std::to_string(m) + " out of range 0.." + std::to_string(2 * p.n()));
  }
  std::vector<detail::Slot> slots(p.n() + 1);
  std::vector<Monomial> out;
  detail::enumerate_rec(p, 1, m, slots, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bvring
