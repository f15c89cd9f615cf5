#include <gtest/gtest.h>

#include <random>

#include "bvring/checks.hpp"
#include "bvring/expr.hpp"
#include "bvring/serialize.hpp"

using namespace bvring;

TEST(Parse, Generators) {
  const RingParams p(3, {2}, 21);
  EXPECT_EQ(evaluate("o(1)", p), gen_o(p, 1));
  EXPECT_EQ(evaluate("l(1,2)", p), gen_l(p, 1, 2));
  EXPECT_EQ(evaluate("tau(3,1)", p), gen_tau(p, 1, 3));
  EXPECT_EQ(evaluate("delta(1,2)", p), gen_delta(p, 1, 2));
}

TEST(Parse, ArithmeticAndWhitespace) {
  const RingParams p(3, {}, 4);
  EXPECT_EQ(evaluate(" 2 * tau(1, 2) * o(3) - o(1)*o(2) ", p),
            Rational(2) * (gen_tau(p, 1, 2) * gen_o(p, 3)) - gen_o(p, 1) * gen_o(p, 2));
  EXPECT_EQ(evaluate("tau(1,2)^2", p), Rational(4) * (gen_o(p, 1) * gen_o(p, 2)));
  EXPECT_EQ(evaluate("(o(1) + o(2))^2", p), Rational(2) * (gen_o(p, 1) * gen_o(p, 2)));
  EXPECT_EQ(evaluate("-3/6*o(1)", p), Rational(-1, 2) * gen_o(p, 1));
  EXPECT_EQ(evaluate("1", p), RingElement::one(p));
  EXPECT_TRUE(evaluate("o(1) - o(1)", p).is_zero());
  EXPECT_EQ(evaluate("tau(1,2)^0", p), RingElement::one(p));
}

TEST(Parse, DeltaProductExpansion) {
  const RingParams p = RingParams::k3(3, {2});
  const auto lhs = evaluate("delta(1,2)*delta(1,3)", p);
  const auto rhs = evaluate(
      "delta(1,2)*o(3) + delta(1,3)*o(2) + delta(2,3)*o(1) - o(1)*o(2) - o(1)*o(3) - o(2)*o(3)", p);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(evaluate("delta(1,2)*l(1,1)", p), evaluate("l(1,1)*o(2) + o(1)*l(1,2)", p));
  EXPECT_EQ(evaluate("delta(1,2)^2", p), evaluate("24*o(1)*o(2)", p));
}

TEST(ParseErrors, OffsetsAndExpectations) {
  try {
    parse_expr("o(1) + ");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse_expr("tau(1 2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{","});
  }
  EXPECT_THROW(parse_expr("o(0)"), ParseError);
  EXPECT_THROW(parse_expr("x(1)"), ParseError);
  EXPECT_THROW(parse_expr("o(1))"), ParseError);
  EXPECT_THROW(parse_expr("1/0*o(1)"), ParseError);
  EXPECT_THROW(parse_expr(""), ParseError);
  EXPECT_THROW(parse_expr("o(1)^"), ParseError);
}

TEST(EvalErrors, RangeWithSpan) {
  const RingParams p(2, {}, 1);
  try {
    evaluate("o(1) + tau(1,3)", p);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.span().begin, 7u);
    EXPECT_EQ(e.span().end, 15u);
  }
  EXPECT_THROW(evaluate("l(1,1)", p), RangeError);
  EXPECT_THROW(evaluate("tau(2,2)", p), RangeError);
}

TEST(Printing, ExprAndText) {
  const RingParams p(3, {2}, 21);
  const auto e = evaluate("1/2*l(1,1)*l(1,2)*o(3) - tau(1,2)", p);
  EXPECT_EQ(to_expr_string(e), "1/2*l(1,1)*l(1,2)*o(3) - tau(1,2)");
  EXPECT_EQ(to_text(e), "1/2·l¹_1·l¹_2·o_3 - τ_{1,2}");
  EXPECT_EQ(to_expr_string(evaluate("-tau(1,2)", p)), "-tau(1,2)");
  EXPECT_EQ(to_expr_string(RingElement::zero(p)), "0");
  EXPECT_EQ(to_expr_string(Rational(3) * RingElement::one(p)), "3");
}

TEST(RoundTrip, PrintedFormParsesBack) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    const RingParams p(n, {2, Rational(-1, 3)}, 3);
    for (int k = 0; k < 25; ++k) {
      const auto a = random_element(p, rng, 5);
      EXPECT_EQ(evaluate(to_expr_string(a), p), a) << to_expr_string(a);
      const std::string twice = to_expr_string(evaluate(to_expr_string(a), p));
      EXPECT_EQ(twice, to_expr_string(a));
    }
  }
}

TEST(Json, ElementSchema) {
  const RingParams p(3, {2}, 21);
  const auto e = evaluate("1/2*l(1,1)*l(1,2)*o(3) + 4*tau(2,3)", p);
  const Json j = element_json(e);
  EXPECT_EQ(j["n"], 3);
  ASSERT_EQ(j["terms"].size(), 2u);
  const auto& first = j["terms"][0];
  EXPECT_EQ(first["coef"], "1/2");
  EXPECT_EQ(first["tau_pairs"], Json::array());
  EXPECT_EQ(first["l_factors"], Json::parse("[[1,1],[1,2]]"));
  EXPECT_EQ(first["o_indices"], Json::parse("[3]"));
  const auto& second = j["terms"][1];
  EXPECT_EQ(second["coef"], "4/1");
  EXPECT_EQ(second["tau_pairs"], Json::parse("[[2,3]]"));
  EXPECT_EQ(j.dump(), element_json(evaluate("4*tau(3,2) + 1/2*o(3)*l(1,2)*l(1,1)", p)).dump());
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(3);
  const RingParams p(4, {2, 6}, 16);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_element(p, rng, 6);
    EXPECT_EQ(element_from_json(Json::parse(element_json(a).dump()), p), a);
  }
  EXPECT_THROW(element_from_json(element_json(gen_o(p, 1)), RingParams(3, {2, 6}, 16)), std::invalid_argument);
}

TEST(Json, GramEncoding) {
  EXPECT_EQ(gram_json(build_gram(4, 3)).dump(), "[[9,3,3],[3,9,3],[3,3,9]]");
  EXPECT_EQ(gram_json(build_gram(2, Rational(1, 2))).dump(), "[[\"1/2\"]]");
}
