#include "enlarge/generators.hpp"
#include "enlarge/operator.hpp"
#include "test_util.hpp"

namespace enlarge::test {
namespace {

template <class F>
class MonotoneOps : public ::testing::Test {};
TYPED_TEST_SUITE(MonotoneOps, Fields);

TYPED_TEST(MonotoneOps, OperatorRepInvariants) {
  using F = TypeParam;
  EXPECT_THROW_CODE(Operator<F>::finite({}), InvalidArgument);
  const auto dup = Operator<F>::finite({pt<F>({1}, {2}), pt<F>({1}, {2}), pt<F>({0}, {0})});
  EXPECT_EQ(dup.points().size(), 2u);
  EXPECT_THROW_CODE(Operator<F>::finite({pt<F>({1}, {2}), pt<F>({1, 0}, {0, 0})}), DimensionMismatch);
  const auto lin = Operator<F>::affine(sub<F>({{1, 1}}, 1), pt<F>({0}, {0}));
  EXPECT_EQ(lin.kind(), OperatorKind::Linear);
  const auto aff = Operator<F>::affine(sub<F>({{0, 1}}, 1), pt<F>({2}, {0}));
  EXPECT_EQ(aff.kind(), OperatorKind::Affine);
  EXPECT_TRUE(aff.contains_point(pt<F>({2}, {-7})));
  EXPECT_FALSE(aff.contains_point(pt<F>({1}, {0})));
}

TYPED_TEST(MonotoneOps, IsMonotone) {
  using F = TypeParam;
  EXPECT_TRUE(is_monotone(Operator<F>::finite({pt<F>({0}, {0}), pt<F>({1}, {1})})));
  EXPECT_FALSE(is_monotone(Operator<F>::finite({pt<F>({0}, {0}), pt<F>({1}, {-1})})));
  EXPECT_FALSE(is_monotone(Operator<F>::linear(sub<F>({{1, -1}}, 1))));
  EXPECT_TRUE(is_monotone(Operator<F>::linear(Subspace<F>::graph(mat<F>({{0, -1}, {1, 0}})))));
  // translation cancels in differences
  EXPECT_TRUE(is_monotone(Operator<F>::affine(sub<F>({{1, 1}}, 1), pt<F>({3}, {-8}))));
}

TYPED_TEST(MonotoneOps, MaximalMonotoneLinear) {
  using F = TypeParam;
  EXPECT_TRUE(is_maximal_monotone_linear(Operator<F>::linear(sub<F>({{1, 1}}, 1))));
  EXPECT_FALSE(is_maximal_monotone_linear(Operator<F>::linear(Subspace<F>(1))));
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_TRUE(is_maximal_monotone_linear(Operator<F>::linear(Subspace<F>::vertical(n))));
  // monotone but not maximal: a line inside the graph of the identity in R^2
  EXPECT_FALSE(is_maximal_monotone_linear(Operator<F>::linear(sub<F>({{1, 1, 1, 1}}, 2))));
  // dimension n but not monotone
  EXPECT_FALSE(is_maximal_monotone_linear(Operator<F>::linear(sub<F>({{1, -1}}, 1))));
  EXPECT_THROW_CODE(is_maximal_monotone_linear(Operator<F>::finite({pt<F>({0}, {0})})), InvalidArgument);
}

TYPED_TEST(MonotoneOps, Negate) {
  using F = TypeParam;
  const auto id = Operator<F>::linear(sub<F>({{1, 1}}, 1));
  EXPECT_TRUE(same_operator(negate(id), Operator<F>::linear(sub<F>({{1, -1}}, 1))));
  const auto fin = negate(Operator<F>::finite({pt<F>({1}, {2})}));
  ASSERT_EQ(fin.points().size(), 1u);
  EXPECT_TRUE(points_close(fin.points()[0], pt<F>({1}, {-2})));
  const auto aff = Operator<F>::affine(sub<F>({{1, 2, 0, 1}}, 2), pt<F>({1, 0}, {3, 4}));
  EXPECT_TRUE(same_operator(negate(negate(aff)), aff));
  EXPECT_TRUE(negate(aff).contains_point(pt<F>({1, 0}, {-3, -4})));
}

TYPED_TEST(MonotoneOps, Translate) {
  using F = TypeParam;
  const auto l = Operator<F>::linear(sub<F>({{1, 1}}, 1));
  EXPECT_TRUE(same_operator(translate(l, pt<F>({0}, {0})), l));
  const auto moved = translate(l, pt<F>({1}, {0}));
  EXPECT_TRUE(moved.contains_point(pt<F>({1}, {0})));
  EXPECT_TRUE(moved.contains_point(pt<F>({2}, {1})));
  EXPECT_FALSE(moved.contains_point(pt<F>({1}, {1})));
  EXPECT_TRUE(same_operator(translate(moved, pt<F>({-1}, {0})), l));
  // a translation lying in the subspace is normalized away
  EXPECT_EQ(translate(l, pt<F>({3}, {3})).kind(), OperatorKind::Linear);
  const auto fin = translate(Operator<F>::finite({pt<F>({1}, {2})}), pt<F>({1}, {1}));
  EXPECT_TRUE(fin.contains_point(pt<F>({2}, {3})));
  EXPECT_THROW_CODE(translate(l, pt<F>({1, 1}, {1, 1})), DimensionMismatch);
}

TYPED_TEST(MonotoneOps, Adjoint) {
  using F = TypeParam;
  const auto m = Subspace<F>::graph(mat<F>({{1, 2}, {3, 4}}));
  EXPECT_TRUE(subspace_equal(adjoint(m), Subspace<F>::graph(mat<F>({{1, 3}, {2, 4}}))));
  const auto q = Subspace<F>::graph(mat<F>({{2, 1}, {1, 5}}));
  EXPECT_TRUE(subspace_equal(adjoint(q), q));
  const auto l = sub<F>({{1, 2, 0, 1}, {0, 0, 1, 3}}, 2);
  EXPECT_TRUE(subspace_equal(adjoint(adjoint(l)), l));
}

TYPED_TEST(MonotoneOps, Skew) {
  using F = TypeParam;
  EXPECT_TRUE(is_skew(Subspace<F>::graph(mat<F>({{0, -1}, {1, 0}}))));
  EXPECT_FALSE(is_skew(sub<F>({{1, 1}}, 1)));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(is_skew(Subspace<F>::vertical(n)));
}

TYPED_TEST(MonotoneOps, SelfCancelling) {
  using F = TypeParam;
  EXPECT_TRUE(is_self_cancelling(Subspace<F>(2)));
  EXPECT_TRUE(is_self_cancelling(Subspace<F>::graph(mat<F>({{0, -3}, {3, 0}}))));
  EXPECT_FALSE(is_self_cancelling(sub<F>({{1, 1}}, 1)));
  // each basis vector has zero duality but the pair does not cancel
  EXPECT_FALSE(is_self_cancelling(sub<F>({{1, 0, 0, 0}, {0, 0, 1, 0}}, 2)));
}

TYPED_TEST(MonotoneOps, MaximalSelfCancelling) {
  using F = TypeParam;
  EXPECT_TRUE(is_maximal_self_cancelling(Subspace<F>::graph(mat<F>({{0, -1}, {1, 0}}))));
  EXPECT_FALSE(is_maximal_self_cancelling(Subspace<F>(1)));
  EXPECT_FALSE(is_maximal_self_cancelling(Subspace<F>(3)));
  EXPECT_TRUE(is_maximal_self_cancelling(Subspace<F>::vertical(2)));
  // self-cancelling, dimension 1 < n
  EXPECT_FALSE(is_maximal_self_cancelling(sub<F>({{1, 0, 0, 0}}, 2)));
}

TYPED_TEST(MonotoneOps, VdashCommutesWithNegate) {
  using F = TypeParam;
  const auto l = sub<F>({{1, 2, 0, 1}, {0, 1, 1, 3}}, 2);
  EXPECT_TRUE(subspace_equal(vdash(negate(l)), negate(vdash(l))));
}

TEST(MonotoneOpsFloat, PsdToleranceAcceptsRoundoff) {
  // graph of a rotation by a float angle: skew up to roundoff
  const double c = std::cos(0.3), s = std::sin(0.3);
  Matrix<double> m(2, 2);
  m(0, 0) = 0;
  m(0, 1) = -s / c * c;
  m(1, 0) = s * c / c;
  m(1, 1) = 0;
  EXPECT_TRUE(is_monotone(Subspace<double>::graph(m)));
  m(0, 0) = -1e-6;
  EXPECT_FALSE(is_monotone(Subspace<double>::graph(m)));
}

TEST(MonotoneOpsExact, GeneratedFamilies) {
  for (gen::Seed s = 0; s < 20; ++s) {
    for (std::size_t n = 1; n <= 5; ++n) {
      EXPECT_TRUE(is_skew(gen::gen_skew(n, s)));
      const auto a = gen::gen_self_cancelling(n, n / 2, s);
      EXPECT_TRUE(is_self_cancelling(a));
      EXPECT_TRUE(contains(vdash(a), a));
      EXPECT_TRUE(is_maximal_monotone_linear(Operator<Rational>::linear(gen::gen_maximal_monotone(n, s))));
    }
  }
}

}  // namespace
}  // namespace enlarge::test
