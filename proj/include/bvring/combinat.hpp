#pragma once

// Symmetric-group and tableau combinatorics: permutations, perfect matchings,
// integer partitions, Young tableaux, tabloids and polytabloids.
//
// Every ground set here is {1..d}; all enumerations come out in a fixed,
// documented order so that matrices built over them have reproducible layouts.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bvring/linear_combination.hpp"

namespace bvring {

// ---------------------------------------------------------------------------
// Permutations

/// Bijection of {1..n}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > size() || seen[v]) {
        throw std::invalid_argument("permutation images must be a bijection of {1.." +
                                    std::to_string(size()) + "}");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  static Permutation transposition(int n, int a, int b) {
    auto p = identity(n);
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("transposition out of range");
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// (g * h)(i) = g(h(i)).
  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> img(h.size());
    for (int i = 1; i <= h.size(); ++i) img[i - 1] = g(h(i));
    Permutation out;
    out.images_ = std::move(img);
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (int i = 1; i <= size(); ++i) out.images_[(*this)(i) - 1] = i;
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Signature: +1 for even permutations, -1 for odd.
inline int sgn(const Permutation& g) {
  const int n = g.size();
  std::vector<bool> visited(n + 1, false);
  int parity = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    int len = 0;
    for (int j = i; !visited[j]; j = g(j)) {
      visited[j] = true;
      ++len;
    }
    parity ^= (len + 1) & 1;  // a cycle of length L is L-1 transpositions
  }
  return parity ? -1 : 1;
}

/// All n! permutations in lexicographic order of their image lists.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Perfect matchings

/// Partition of an even-sized ground set into unordered pairs. Pairs are
/// stored as (min, max) and sorted, so equal matchings compare equal.
class PerfectMatching {
 public:
  using Pair = std::pair<int, int>;

  PerfectMatching() = default;

  explicit PerfectMatching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (auto& [a, b] : pairs_) {
      if (a == b) throw std::invalid_argument("matching pair joins an element to itself");
      if (a > b) std::swap(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
    auto ground = ground_set();
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
      throw std::invalid_argument("matching pairs are not disjoint");
    }
  }

  const std::vector<Pair>& pairs() const { return pairs_; }
  int ground_size() const { return 2 * static_cast<int>(pairs_.size()); }

  std::vector<int> ground_set() const {
    std::vector<int> g;
    g.reserve(pairs_.size() * 2);
    for (auto [a, b] : pairs_) {
      g.push_back(a);
      g.push_back(b);
    }
    std::sort(g.begin(), g.end());
    return g;
  }

  PerfectMatching relabeled(const Permutation& g) const {
    std::vector<Pair> out;
    out.reserve(pairs_.size());
    for (auto [a, b] : pairs_) out.emplace_back(g(a), g(b));
    return PerfectMatching(std::move(out));
  }

  /// Union with a matching on a disjoint ground set.
  PerfectMatching joined(const PerfectMatching& other) const {
    std::vector<Pair> out = pairs_;
    out.insert(out.end(), other.pairs_.begin(), other.pairs_.end());
    return PerfectMatching(std::move(out));
  }

  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  std::vector<Pair> pairs_;
};

namespace detail {

inline void matchings_rec(std::vector<int>& rest, std::vector<PerfectMatching::Pair>& acc,
                          std::vector<PerfectMatching>& out) {
  if (rest.empty()) {
    out.emplace_back(acc);
    return;
  }
  const int first = rest.front();
  for (std::size_t k = 1; k < rest.size(); ++k) {
    const int partner = rest[k];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != k) next.push_back(rest[t]);
    }
    acc.emplace_back(first, partner);
    matchings_rec(next, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

/// All perfect matchings of an arbitrary finite set, in lexicographic order of
/// their sorted pair lists. The empty set has exactly one (empty) matching.
inline std::vector<PerfectMatching> enumerate_matchings_of(std::span<const int> ground) {
  if (ground.size() % 2 != 0) throw std::invalid_argument("odd ground set has no perfect matching");
  std::vector<int> rest(ground.begin(), ground.end());
  std::sort(rest.begin(), rest.end());
  std::vector<PerfectMatching> out;
  std::vector<PerfectMatching::Pair> acc;
  detail::matchings_rec(rest, acc, out);
  return out;
}

/// All (d-1)!! perfect matchings of {1..d}.
inline std::vector<PerfectMatching> enumerate_matchings(int d) {
  if (d < 0 || d % 2 != 0) throw std::invalid_argument("enumerate_matchings needs an even d >= 0");
  std::vector<int> ground(d);
  std::iota(ground.begin(), ground.end(), 1);
  return enumerate_matchings_of(ground);
}

/// (d-1)!! for even d, the number of perfect matchings of a d-set.
inline std::uint64_t double_factorial_odd(int d) {
  std::uint64_t r = 1;
  for (int k = d - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

// ---------------------------------------------------------------------------
// Partitions and tableaux

/// Integer partition, parts weakly decreasing and positive.
class IntPartition {
 public:
  IntPartition() = default;
  explicit IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool all_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  }
  /// Length of column c (0-based), i.e. the conjugate partition.
  int column_length(int c) const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [c](int p) { return p > c; }));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

 private:
  std::vector<int> parts_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, int step, std::vector<int>& acc,
                           std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= step; p -= step) {
    if (p % step != 0) continue;
    acc.push_back(p);
    partitions_rec(remaining - p, p, step, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

/// Partitions of d into even parts, in reverse lexicographic order
/// ((d) first, (2,...,2) last). Empty for odd d; {()} for d = 0.
inline std::vector<IntPartition> enumerate_even_partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative partition size");
  std::vector<IntPartition> out;
  if (d % 2 != 0) return out;
  std::vector<int> acc;
  detail::partitions_rec(d, d - (d % 2), 2, acc, out);
  return out;
}

/// All partitions of d in reverse lexicographic order.
inline std::vector<IntPartition> enumerate_partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative partition size");
  std::vector<IntPartition> out;
  std::vector<int> acc;
  detail::partitions_rec(d, d, 1, acc, out);
  return out;
}

/// d! / prod(hooks): the number of standard tableaux of the shape.
inline std::uint64_t hook_length_dim(const IntPartition& shape) {
  Integer num = 1, den = 1;
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape.parts()[r]; ++c) {
      const int arm = shape.parts()[r] - c - 1;
      const int leg = shape.column_length(c) - r - 1;
      den *= arm + leg + 1;
    }
  }
  Integer q = num / den;
  return q.get_ui();
}

/// Filling of a Young diagram with 1..d, each exactly once.
class YoungTableau {
 public:
  YoungTableau() = default;
  explicit YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = IntPartition(parts);
    const int d = shape_.size();
    std::vector<bool> seen(d + 1, false);
    for (const auto& r : rows_) {
      for (int v : r) {
        if (v < 1 || v > d || seen[v]) throw std::invalid_argument("tableau entries must be exactly 1..d");
        seen[v] = true;
      }
    }
  }

  const IntPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  std::vector<std::vector<int>> columns() const {
    std::vector<std::vector<int>> cols(shape_.length() ? shape_.parts()[0] : 0);
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) cols[c].push_back(r[c]);
    }
    return cols;
  }

  bool is_standard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c > 0 && rows_[r][c - 1] >= rows_[r][c]) return false;
        if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
      }
    }
    return true;
  }

  YoungTableau relabeled(const Permutation& g) const {
    auto rows = rows_;
    for (auto& r : rows) {
      for (int& v : r) v = g(v);
    }
    return YoungTableau(std::move(rows));
  }

  friend auto operator<=>(const YoungTableau& a, const YoungTableau& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const YoungTableau& a, const YoungTableau& b) { return a.rows_ == b.rows_; }

 private:
  IntPartition shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

inline void syt_rec(int next, int d, const std::vector<int>& parts, std::vector<std::vector<int>>& rows,
                    std::vector<YoungTableau>& out) {
  if (next > d) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const std::size_t len = rows[r].size();
    if (static_cast<int>(len) >= parts[r]) continue;
    if (r > 0 && rows[r - 1].size() <= len) continue;
    rows[r].push_back(next);
    syt_rec(next + 1, d, parts, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace detail

/// Standard tableaux of a shape, generated by placing 1..d in turn into every
/// admissible row (top row first).
inline std::vector<YoungTableau> enumerate_standard_tableaux(const IntPartition& shape) {
  std::vector<std::vector<int>> rows(shape.length());
  std::vector<YoungTableau> out;
  detail::syt_rec(1, shape.size(), shape.parts(), rows, out);
  return out;
}

// ---------------------------------------------------------------------------
// Tabloids

/// Tableau with the order inside each row forgotten. Rows are kept sorted and
/// in shape order.
class Tabloid {
 public:
  Tabloid() = default;
  explicit Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (auto& r : rows_) std::sort(r.begin(), r.end());
  }
  explicit Tabloid(const YoungTableau& t) : Tabloid(t.rows()) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

using TabloidVector = LinearCombination<Tabloid>;

inline Tabloid act_on_tabloid(const Permutation& g, const Tabloid& t) {
  auto rows = t.rows();
  for (auto& r : rows) {
    for (int& v : r) v = g(v);
  }
  return Tabloid(std::move(rows));
}

inline TabloidVector act_on_tabloids(const Permutation& g, const TabloidVector& v) {
  TabloidVector out;
  for (const auto& [t, c] : v) out.add_term(act_on_tabloid(g, t), c);
  return out;
}

/// Column stabilizer Q_T: the product of the symmetric groups on the columns
/// of T. Elements are materialized on demand.
class ColumnStabilizer {
 public:
  explicit ColumnStabilizer(const YoungTableau& t) : d_(t.size()), columns_(t.columns()) {}

  const std::vector<std::vector<int>>& columns() const { return columns_; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& c : columns_) {
      for (std::size_t k = 2; k <= c.size(); ++k) n *= k;
    }
    return n;
  }

  /// Calls fn(g, sgn(g)) for every g in the group.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    std::vector<std::vector<int>> images = columns_;
    for (auto& img : images) std::sort(img.begin(), img.end());
    visit(0, images, fn);
  }

 private:
  template <typename Fn>
  void visit(std::size_t col, std::vector<std::vector<int>>& images, Fn& fn) const {
    if (col == columns_.size()) {
      std::vector<int> img(d_);
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        auto sorted = columns_[c];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k) img[sorted[k] - 1] = images[c][k];
      }
      Permutation g(std::move(img));
      const int s = sgn(g);
      fn(g, s);
      return;
    }
    auto& img = images[col];
    std::sort(img.begin(), img.end());
    do {
      visit(col + 1, images, fn);
    } while (std::next_permutation(img.begin(), img.end()));
  }

  int d_;
  std::vector<std::vector<int>> columns_;
};

inline ColumnStabilizer column_stabilizer(const YoungTableau& t) { return ColumnStabilizer(t); }

/// E_T = sum over g in Q_T of sgn(g) {g(T)}.
inline TabloidVector polytabloid(const YoungTableau& t) {
  TabloidVector out;
  const Tabloid base(t);
  column_stabilizer(t).for_each([&](const Permutation& g, int sign) { out.add_term(act_on_tabloid(g, base), sign); });
  return out;
}

}  // namespace bvring
