#include <gtest/gtest.h>

#include "bvring/checks.hpp"
#include "bvring/spectral.hpp"
#include "oracles.hpp"

using namespace bvring;

namespace {

std::vector<std::vector<Rational>> as_rows(const std::vector<RingElement>& elems, const std::vector<Monomial>& basis) {
  std::vector<std::vector<Rational>> out;
  for (const auto& e : elems) {
    std::vector<Rational> row(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) row[i] = e.coefficient(basis[i]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

TEST(LoopCount, SmallCases) {
  const PerfectMatching a({{1, 2}, {3, 4}}), b({{1, 3}, {2, 4}});
  EXPECT_EQ(loop_count(a, a), 2);
  EXPECT_EQ(loop_count(a, b), 1);
  EXPECT_EQ(loop_count(PerfectMatching{}, PerfectMatching{}), 0);
  EXPECT_THROW(loop_count(a, PerfectMatching({{1, 2}})), std::invalid_argument);
}

TEST(LoopCount, MatchesRingPairing) {
  for (int d : {2, 4, 6}) {
    for (int x : {1, 2, 5}) {
      const auto ms = enumerate_matchings(d);
      for (const auto& a : ms) {
        for (const auto& b : ms) {
          EXPECT_EQ(oracle::ring_tau_pairing(a, b, x), pow(Rational(x), static_cast<unsigned>(loop_count(a, b))));
        }
      }
    }
  }
}

TEST(LoopCount, SymmetricAndInvariant) {
  const auto ms = enumerate_matchings(6);
  const Permutation g({3, 1, 6, 2, 5, 4});
  for (const auto& a : ms) {
    EXPECT_EQ(loop_count(a, a), 3);
    for (const auto& b : ms) {
      EXPECT_EQ(loop_count(a, b), loop_count(b, a));
      EXPECT_EQ(loop_count(a.relabeled(g), b.relabeled(g)), loop_count(a, b));
    }
  }
}

TEST(Gram, FourPoints) {
  const auto g = build_gram(4, 3);
  ASSERT_EQ(g.size(), 3u);
  const Matrix m = g.evaluated();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), i == j ? 9 : 3);
  EXPECT_EQ(build_gram(2, 7).evaluated()(0, 0), 7);
  EXPECT_THROW(build_gram(3, 1), std::invalid_argument);
}

TEST(Gram, ThreadCountDoesNotMatter) {
  const auto a = build_gram(8, 2, {}, 1);
  const auto b = build_gram(8, 2, {}, 4);
  EXPECT_EQ(a.exponents(), b.exponents());
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(Gram, BoundIsEnforced) {
  Bounds tight;
  tight.max_dim = 15;
  EXPECT_NO_THROW(build_gram(6, 1, tight));
  tight.max_dim = 14;
  EXPECT_THROW(build_gram(6, 1, tight), ResourceError);
}

TEST(Phi, RowMatchingProducts) {
  const TauVector one = phi(Tabloid({{1, 2}, {3, 4}}));
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.coefficient(PerfectMatching({{1, 2}, {3, 4}})), 1);

  const TauVector row = phi(Tabloid({{1, 2, 3, 4}}));
  EXPECT_EQ(row.size(), 3u);
  for (const auto& m : enumerate_matchings(4)) EXPECT_EQ(row.coefficient(m), 1);

  EXPECT_EQ(phi(Tabloid({{1, 2, 3, 4}, {5, 6}})).size(), 3u);
  EXPECT_THROW(phi(Tabloid({{1, 2, 3}, {4}})), std::invalid_argument);
}

TEST(Phi, PolytabloidOfTwoByTwo) {
  // {12|34} - {23|14} - {14|23} + {34|12}
  const TauVector v = phi_polytabloid(YoungTableau({{1, 2}, {3, 4}}));
  EXPECT_EQ(v.coefficient(PerfectMatching({{1, 2}, {3, 4}})), 2);
  EXPECT_EQ(v.coefficient(PerfectMatching({{1, 4}, {2, 3}})), -2);
  EXPECT_EQ(v.coefficient(PerfectMatching({{1, 3}, {2, 4}})), 0);
}

TEST(Phi, EquivariantUnderRelabeling) {
  const YoungTableau t({{1, 2, 3, 4}, {5, 6}});
  for (const auto& g : {Permutation({2, 1, 3, 4, 5, 6}), Permutation({6, 5, 4, 3, 2, 1}), Permutation({3, 5, 1, 6, 2, 4})}) {
    EXPECT_EQ(act_on_tau_vector(g, phi_polytabloid(t)), phi_polytabloid(t.relabeled(g)));
  }
}

TEST(Eigen, FourPoints) {
  const YoungTableau row({{1, 2, 3, 4}});
  const YoungTableau square({{1, 2}, {3, 4}});
  for (int x : {1, 2, 3, 7}) {
    const auto g = build_gram(4, x);
    EXPECT_EQ(eigencheck(g, phi_polytabloid(row)), Rational(x * x + 2 * x));
    EXPECT_EQ(eigencheck(g, phi_polytabloid(square)), Rational(x * x - x));
  }
  EXPECT_EQ(eigencheck(build_gram(4, 3), phi_polytabloid(square)), Rational(6));
  EXPECT_EQ(eigencheck(build_gram(4, 1), phi_polytabloid(square)), Rational(0));
  // a single matching is not an eigenvector
  EXPECT_FALSE(eigencheck(build_gram(4, 3), TauVector(PerfectMatching({{1, 2}, {3, 4}}))).has_value());
}

TEST(Eigen, BlocksAreConsistent) {
  for (int d : {2, 4, 6}) {
    for (int x : {1, 2, 3, 5}) {
      const auto rep = check_eigen(d, x);
      EXPECT_TRUE(rep.passed()) << "d=" << d << " x=" << x;
      for (const auto& b : rep.blocks) EXPECT_EQ(b.phi_rank, b.hook_dim) << b.shape.to_string();
    }
  }
}

TEST(Eigen, SixPointsAtTwo) {
  const auto rep = check_eigen(6, 2);
  std::map<std::vector<int>, Rational> ev;
  for (const auto& b : rep.blocks) ev[b.shape.parts()] = *b.eigenvalue;
  EXPECT_EQ(ev[(std::vector<int>{6})], 48);
  EXPECT_EQ(ev[(std::vector<int>{4, 2})], 8);
  EXPECT_EQ(ev[(std::vector<int>{2, 2, 2})], 0);
}

TEST(Kernel, Dimensions) {
  EXPECT_EQ(kernel_basis(build_gram(4, 1)).size(), 2u);
  EXPECT_EQ(kernel_basis(build_gram(6, 1)).size(), 14u);
  EXPECT_EQ(kernel_basis(build_gram(6, 2)).size(), 5u);
  EXPECT_EQ(kernel_basis(build_gram(6, 3)).size(), 0u);
  EXPECT_EQ(kernel_basis(build_gram(6, Rational(1, 2))).size(), 0u);
  EXPECT_EQ(predicted_kernel_dim(4, 1), 2u);
  EXPECT_EQ(predicted_kernel_dim(6, 2), 5u);
  EXPECT_EQ(predicted_kernel_dim(8, 3), 14u);
}

TEST(Kimura, TauVectorShape) {
  EXPECT_EQ(kimura_tau_vector(1).size(), 2u);
  EXPECT_EQ(kimura_tau_vector(2).size(), 6u);
  EXPECT_EQ(kimura_tau_vector(3).size(), 24u);
  const auto v = kimura_tau_vector(1);
  EXPECT_EQ(v.coefficient(PerfectMatching({{1, 3}, {2, 4}})), 1);
  EXPECT_EQ(v.coefficient(PerfectMatching({{1, 4}, {2, 3}})), -1);
  EXPECT_THROW(kimura_tau_vector(0), std::invalid_argument);
}

TEST(Kimura, RelationIsInKernel) {
  for (int x : {1, 2, 3}) {
    const auto g = build_gram(2 * (x + 1), x);
    EXPECT_EQ(eigencheck(g, kimura_tau_vector(x)), Rational(0));
  }
}

TEST(Kimura, RelationElementAndRoundTrip) {
  const auto r = kimura_relation(1);
  EXPECT_EQ(r.params().n(), 4);
  EXPECT_EQ(degree(r), 4);
  EXPECT_EQ(to_tau_vector(r), kimura_tau_vector(1));
  EXPECT_THROW(to_tau_vector(gen_o(r.params(), 1)), std::invalid_argument);
}

TEST(Kimura, IdentityWithPolytabloid) {
  for (int x : {1, 2, 3}) {
    const auto rep = check_kimura_identity(x);
    EXPECT_TRUE(rep.equal) << "x=" << x;
  }
}

struct SliceCase {
  int n;
  std::vector<Rational> degrees;
  int x;
  int m;
};

class SliceAgainstBruteForce : public ::testing::TestWithParam<SliceCase> {};

TEST_P(SliceAgainstBruteForce, SameSpan) {
  const auto& c = GetParam();
  const RingParams p(c.n, c.degrees, c.x);
  const auto basis = enumerate_monomials(p, c.m);
  const auto fast = as_rows(kimura_ideal_slice(p, c.m), basis);
  const auto slow = oracle::brute_force_slice(p, c.m);
  const std::size_t rf = oracle::rank(fast), rs = oracle::rank(slow);
  EXPECT_EQ(rf, rs);
  auto joint = fast;
  joint.insert(joint.end(), slow.begin(), slow.end());
  EXPECT_EQ(oracle::rank(joint), rf);
}

INSTANTIATE_TEST_SUITE_P(Cases, SliceAgainstBruteForce,
                         ::testing::Values(SliceCase{4, {}, 1, 4}, SliceCase{4, {}, 1, 6}, SliceCase{5, {}, 1, 4},
                                           SliceCase{5, {2}, 1, 5}, SliceCase{5, {2}, 1, 6}, SliceCase{6, {}, 2, 6},
                                           SliceCase{6, {}, 1, 8}, SliceCase{3, {}, 1, 4}));

TEST(Kimura, SliceIsEmptyBelowRelationDegree) {
  const RingParams p(4, {}, 1);
  EXPECT_TRUE(kimura_ideal_slice(p, 2).empty());
  EXPECT_TRUE(kimura_ideal_slice(RingParams(3, {}, 1), 6).empty());
  EXPECT_THROW(kimura_ideal_slice(RingParams(4, {}, Rational(1, 2)), 4), std::invalid_argument);
}

TEST(KernelGeneration, SmallCases) {
  for (auto [d, x] : {std::pair{4, 1}, {6, 1}, {6, 2}, {4, 2}}) {
    const auto rep = verify_kernel_generated(d, x);
    EXPECT_TRUE(rep.passed()) << "d=" << d << " x=" << x;
  }
}

TEST(PerfectPairing, FourPointsAtOne) {
  const RingParams p(4, {}, 1);
  for (int m = 0; m <= 8; ++m) {
    const auto rep = verify_perfect_pairing(p, m);
    EXPECT_TRUE(rep.passed()) << "m=" << m;
    EXPECT_EQ(rep.kernel_dim, rep.slice_rank) << "m=" << m;
  }
  EXPECT_EQ(verify_perfect_pairing(p, 4).kernel_dim, 2u);
}

TEST(PerfectPairing, NondegenerateWithoutRelation) {
  const RingParams p(3, {2}, 21);
  for (int m = 0; m <= 6; ++m) {
    const auto rep = verify_perfect_pairing(p, m);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.kernel_dim, 0u);
    EXPECT_EQ(rep.rank, rep.rows);
  }
}
