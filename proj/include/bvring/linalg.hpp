#pragma once

// Exact dense linear algebra over Q. Elimination is fraction-free (Bareiss):
// each row is first cleared of denominators, then all arithmetic stays in Z
// with exact divisions by the previous pivot.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bvring/rational.hpp"

namespace bvring {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j] != 0 && (*this)(i, j) != 0) acc += (*this)(i, j) * v[j];
      }
      out[i] = acc;
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Integer row echelon form produced by fraction-free elimination.
struct EchelonForm {
  std::vector<std::vector<Integer>> rows;  // only the first rank() rows are nonzero
  std::vector<std::size_t> pivots;         // pivot column of each nonzero row
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

inline EchelonForm echelon_form(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  EchelonForm ef;
  ef.cols = nc;
  ef.rows.assign(nr, std::vector<Integer>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) {
      if (m(i, j) != 0) ef.rows[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
    }
  }

  auto& a = ef.rows;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      const bool lead_zero = a[i][c] == 0;
      for (std::size_t j = c + 1; j < nc; ++j) {
        tmp = a[r][c] * a[i][j];
        if (!lead_zero) tmp -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ef.pivots.push_back(c);
    ++r;
  }
  return ef;
}

inline std::size_t rank(const Matrix& m) { return echelon_form(m).rank(); }

/// Scales v to a primitive integer vector whose first nonzero entry is positive.
inline void make_primitive(Vector& v) {
  Integer den = 1, num = 0;
  for (const auto& q : v) {
    if (q == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  if (num == 0) return;
  Rational f(den, num);
  f.canonicalize();
  for (const auto& q : v) {
    if (q != 0) {
      if (q < 0) f = -f;
      break;
    }
  }
  for (auto& q : v) q *= f;
}

/// Basis of {v : m v = 0}, one primitive integer vector per free column.
inline std::vector<Vector> kernel(const Matrix& m) {
  const EchelonForm ef = echelon_form(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : ef.pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vector v(nc);
    v[f] = 1;
    for (std::size_t k = ef.rank(); k-- > 0;) {
      const std::size_t pc = ef.pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < nc; ++j) {
        if (v[j] != 0 && ef.rows[k][j] != 0) acc += Rational(ef.rows[k][j]) * v[j];
      }
      v[pc] = -acc / Rational(ef.rows[k][pc]);
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Dimension of the span of a family of vectors of length `dim`.
inline std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, dim));
}

/// True when every vector of `sub` lies in the span of `super`.
inline bool span_contains(const std::vector<Vector>& super, const std::vector<Vector>& sub, std::size_t dim) {
  if (sub.empty()) return true;
  std::vector<Vector> joint = super;
  joint.insert(joint.end(), sub.begin(), sub.end());
  return span_rank(joint, dim) == span_rank(super, dim);
}

}  // namespace bvring
