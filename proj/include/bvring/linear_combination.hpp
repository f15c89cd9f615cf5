#pragma once

#include <map>
#include <utility>

#include "bvring/rational.hpp"

namespace bvring {

/// Finite formal Q-linear combination of keys. Zero coefficients are never
/// stored, so the zero vector has no terms and equality is structural.
template <typename Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coef = 1) { add_term(std::move(key), coef); }

  void add_term(const Key& key, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

 private:
  map_type terms_;
};

}  // namespace bvring
