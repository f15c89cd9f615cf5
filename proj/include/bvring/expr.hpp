#pragma once

// Expression language for ring elements.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := 'o(' idx ')' | 'l(' idx ',' idx ')' | 'tau(' idx ',' idx ')'
//           | 'delta(' idx ',' idx ')' | '(' expr ')'
//   rational := uint ['/' uint]
//
// Whitespace between tokens is ignored. Indices are positive; `l(s,i)` takes
// the divisor label first. A bare rational term is the scalar multiple of 1.

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bvring/error.hpp"
#include "bvring/rational.hpp"
#include "bvring/ring.hpp"

namespace bvring {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr;

struct Atom {
  enum class Kind { kO, kL, kTau, kDelta, kGroup };
  Kind kind = Kind::kO;
  int a = 0;
  int b = 0;
  std::shared_ptr<const Expr> group;
  Span span;
};

struct Factor {
  Atom atom;
  unsigned power = 1;
  Span span;
};

struct Term {
  Rational coef = 1;
  std::vector<Factor> factors;
  Span span;
};

struct Expr {
  std::vector<Term> terms;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail = {})
      : Error(format(offset, expected, detail)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected, const std::string& detail) {
    std::string s = "syntax error at byte " + std::to_string(offset);
    if (!detail.empty()) s += ": " + detail;
    if (!expected.empty()) {
      s += "; expected one of:";
      for (const auto& e : expected) s += " '" + e + "'";
    }
    return s;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Evaluation failure tied to a region of the source text.
class EvalError : public RangeError {
 public:
  EvalError(Span span, const std::string& what)
      : RangeError(what + " (bytes " + std::to_string(span.begin) + ".." + std::to_string(span.end) + ")"), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"+", "-", "end of input"});
    return e;
  }

 private:
  static inline const std::vector<std::string> kTermStart = {"integer", "o(", "l(", "tau(", "delta(", "("};

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) const {
    throw ParseError(pos_, std::move(expected), detail);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string digits() {
    if (!peek_digit()) fail({"integer"});
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  int index() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string d = digits();
    Integer v(d);
    if (v == 0) {
      pos_ = start;
      fail({"positive integer"}, "index 0 is not allowed");
    }
    if (!v.fits_sint_p()) {
      pos_ = start;
      fail({"positive integer"}, "index too large");
    }
    return static_cast<int>(v.get_si());
  }

  unsigned exponent() {
    skip_ws();
    const std::size_t start = pos_;
    Integer v(digits());
    if (!v.fits_uint_p() || v > 1000000) {
      pos_ = start;
      fail({"integer"}, "exponent too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  Rational rational() {
    Integer num(digits());
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = Integer(digits());
      if (den == 0) {
        pos_ = at;
        fail({"positive integer"}, "zero denominator");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Expr expr() {
    Expr e;
    Rational sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    e.terms.push_back(term(sign));
    for (;;) {
      if (accept('+')) {
        e.terms.push_back(term(1));
      } else if (accept('-')) {
        e.terms.push_back(term(-1));
      } else {
        break;
      }
    }
    return e;
  }

  Term term(const Rational& sign) {
    skip_ws();
    Term t;
    t.span.begin = pos_;
    if (peek_digit()) {
      t.coef = rational();
      if (!accept('*')) {
        t.coef *= sign;
        t.span.end = pos_;
        return t;
      }
    }
    t.coef *= sign;
    t.factors.push_back(factor());
    while (accept('*')) t.factors.push_back(factor());
    t.span.end = pos_;
    return t;
  }

  Factor factor() {
    Factor f;
    f.atom = atom();
    f.span = f.atom.span;
    if (accept('^')) {
      f.power = exponent();
      f.span.end = pos_;
    }
    return f;
  }

  bool keyword(std::string_view kw) {
    skip_ws();
    if (src_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }

  Atom atom() {
    skip_ws();
    Atom a;
    a.span.begin = pos_;
    if (accept('(')) {
      a.kind = Atom::Kind::kGroup;
      a.group = std::make_shared<const Expr>(expr());
      expect(')');
    } else if (keyword("tau")) {
      a.kind = Atom::Kind::kTau;
      two_args(a);
    } else if (keyword("delta")) {
      a.kind = Atom::Kind::kDelta;
      two_args(a);
    } else if (keyword("o")) {
      a.kind = Atom::Kind::kO;
      expect('(');
      a.a = index();
      expect(')');
    } else if (keyword("l")) {
      a.kind = Atom::Kind::kL;
      two_args(a);
    } else {
      fail(kTermStart);
    }
    a.span.end = pos_;
    return a;
  }

  void two_args(Atom& a) {
    expect('(');
    a.a = index();
    expect(',');
    a.b = index();
    expect(')');
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view src) { return detail::Parser(src).parse(); }

inline RingElement eval_expr(const Expr& e, const RingParams& p);

namespace detail {

inline RingElement eval_atom(const Atom& a, const RingParams& p) {
  try {
    switch (a.kind) {
      case Atom::Kind::kO:
        return gen_o(p, a.a);
      case Atom::Kind::kL:
        return gen_l(p, a.a, a.b);
      case Atom::Kind::kTau:
        return gen_tau(p, a.a, a.b);
      case Atom::Kind::kDelta:
        return gen_delta(p, a.a, a.b);
      case Atom::Kind::kGroup:
        return eval_expr(*a.group, p);
    }
  } catch (const EvalError&) {
    throw;
  } catch (const RangeError& err) {
    throw EvalError(a.span, err.what());
  }
  return RingElement::zero(p);
}

}  // namespace detail

/// Folds the AST through the generators and ring operations.
inline RingElement eval_expr(const Expr& e, const RingParams& p) {
  RingElement acc = RingElement::zero(p);
  for (const auto& t : e.terms) {
    RingElement prod = RingElement::one(p);
    for (const auto& f : t.factors) prod = mul(prod, power(detail::eval_atom(f.atom, p), f.power));
    acc = add(acc, scale(t.coef, prod));
  }
  return acc;
}

inline RingElement evaluate(std::string_view src, const RingParams& p) { return eval_expr(parse_expr(src), p); }

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string monomial_expr(const Monomial& m) {
  std::string s;
  auto sep = [&] {
    if (!s.empty()) s += "*";
  };
  for (auto [a, b] : m.tau) {
    sep();
    s += "tau(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  for (auto [j, lab] : m.l) {
    sep();
    s += "l(" + std::to_string(lab) + "," + std::to_string(j) + ")";
  }
  for (int k : m.o) {
    sep();
    s += "o(" + std::to_string(k) + ")";
  }
  return s;
}

inline std::string superscript(int v) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(v)) s += digits[c - '0'];
  return s;
}

inline std::string monomial_text(const Monomial& m) {
  std::string s;
  auto sep = [&] {
    if (!s.empty()) s += "·";
  };
  for (auto [a, b] : m.tau) {
    sep();
    s += "τ_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }
  for (auto [j, lab] : m.l) {
    sep();
    s += "l" + superscript(lab) + "_" + std::to_string(j);
  }
  for (int k : m.o) {
    sep();
    s += "o_" + std::to_string(k);
  }
  return s;
}

template <typename MonoFn>
std::string format_element(const RingElement& a, MonoFn mono, const char* times) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono(m);
    } else {
      out += mag.get_str() + times + mono(m);
    }
  }
  return out;
}

}  // namespace detail

/// Canonical text that `parse_expr` reads back to the same element.
inline std::string to_expr_string(const RingElement& a) {
  return detail::format_element(a, detail::monomial_expr, "*");
}

/// Human-readable form: τ_{i,j}, lˢ_i, o_k joined by a centred dot.
inline std::string to_text(const RingElement& a) { return detail::format_element(a, detail::monomial_text, "·"); }

}  // namespace bvring
