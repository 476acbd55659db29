#include <cmath>

#include "enlarge/enlargeability.hpp"
#include "enlarge/generators.hpp"
#include "test_util.hpp"

namespace enlarge::test {
namespace {

template <class F>
class Enlargeability : public ::testing::Test {};
TYPED_TEST_SUITE(Enlargeability, Fields);

// Float bases are orthonormal rather than in reduced echelon form, so a float
// witness is a positive multiple of the exact one with eps scaled to match.
template <Field F>
void expect_witness(const Enlargeable<F>& e, const PairedPoint<F>& shift, const PairedPoint<F>& direction,
                    const F& eps) {
  const PairedPoint<F> w = e.witness - shift;
  if constexpr (is_exact_v<F>) {
    EXPECT_EQ(w, direction);
    EXPECT_EQ(e.witness_eps, eps);
  } else {
    const double c = std::sqrt(duality(w) / duality(direction));
    EXPECT_TRUE(points_close(w, c * direction));
    expect_value(e.witness_eps, c * c * eps);
  }
  expect_value(e.witness_eps, F(e.phi_value - e.duality_value));
}

template <Field F>
Subspace<F> rotation() {
  return Subspace<F>::graph(mat<F>({{0, -1}, {1, 0}}));
}

TYPED_TEST(Enlargeability, VdashVanishingCheck) {
  using F = TypeParam;
  EXPECT_TRUE(lemma21_item1_check(sub<F>({{1, 1}}, 1)));
  EXPECT_TRUE(lemma21_item1_check(rotation<F>()));
  EXPECT_TRUE(lemma21_item1_check(Subspace<F>::vertical(3)));
  EXPECT_THROW_CODE(lemma21_item1_check(Subspace<F>(1)), NotMaximalMonotone);
  EXPECT_THROW_CODE(lemma21_item1_check(sub<F>({{1, -1}}, 1)), NotMaximalMonotone);
}

TYPED_TEST(Enlargeability, MaxSelfCancellingPart) {
  using F = TypeParam;
  EXPECT_EQ(max_self_cancelling_part(sub<F>({{1, 1}}, 1)).dim(), 0u);
  EXPECT_TRUE(subspace_equal(max_self_cancelling_part(rotation<F>()), rotation<F>()));
  const auto part = max_self_cancelling_part(Subspace<F>::graph(mat<F>({{1, 0}, {0, 0}})));
  EXPECT_TRUE(subspace_equal(part, sub<F>({{0, 1, 0, 0}}, 2)));
  // tests/oracles/derive_expected.py: graph([[1,3],[-1,1]]), Q = [[1,1],[1,1]]
  const auto mixed = max_self_cancelling_part(Subspace<F>::graph(mat<F>({{1, 3}, {-1, 1}})));
  EXPECT_TRUE(subspace_equal(mixed, sub<F>({{1, -1, -2, -2}}, 2)));
  EXPECT_THROW_CODE(max_self_cancelling_part(Subspace<F>(2)), NotMaximalMonotone);
}

TYPED_TEST(Enlargeability, DecideSkewIsNonEnlargeable) {
  using F = TypeParam;
  const auto t = Operator<F>::affine(rotation<F>(), pt<F>({1, 0}, {0, 1}));
  const Verdict<F> v = decide_non_enlargeable(t);
  ASSERT_TRUE(v.non_enlargeable());
  EXPECT_TRUE(subspace_equal(v.certificate().pre_dual, rotation<F>()));
  EXPECT_TRUE(t.contains_point(v.certificate().base_point));

  const auto vert = Operator<F>::linear(Subspace<F>::vertical(2));
  const Verdict<F> w = decide_non_enlargeable(vert);
  ASSERT_TRUE(w.non_enlargeable());
  EXPECT_TRUE(subspace_equal(w.certificate().pre_dual, Subspace<F>::vertical(2)));
}

TYPED_TEST(Enlargeability, DecideIdentityWitness) {
  using F = TypeParam;
  const Verdict<F> v = decide_non_enlargeable(Operator<F>::linear(sub<F>({{1, 1}}, 1)));
  ASSERT_FALSE(v.non_enlargeable());
  const auto& e = v.enlargement();
  expect_witness(e, pt<F>({0}, {0}), pt<F>({1}, {-1}), F(1));
  expect_value(e.phi_value, F(0));
}

TYPED_TEST(Enlargeability, DecideFrozenWitnesses) {
  using F = TypeParam;
  // tests/oracles/derive_expected.py
  const Verdict<F> v = decide_non_enlargeable(Operator<F>::linear(Subspace<F>::graph(mat<F>({{1, 0}, {0, 0}}))));
  ASSERT_FALSE(v.non_enlargeable());
  expect_witness(v.enlargement(), pt<F>({0, 0}, {0, 0}), pt<F>({1, 0}, {-1, 0}), F(1));
  // translated identity: the witness moves with the stored translation
  const Verdict<F> w = decide_non_enlargeable(Operator<F>::affine(sub<F>({{1, 1}}, 1), pt<F>({1}, {0})));
  ASSERT_FALSE(w.non_enlargeable());
  expect_witness(w.enlargement(), pt<F>({1}, {0}), pt<F>({1}, {-1}), F(1));
  if constexpr (is_exact_v<F>) {
    EXPECT_EQ(w.enlargement().phi_value, F(-1));
  }
}

TYPED_TEST(Enlargeability, DecideRequiresMaximalMonotone) {
  using F = TypeParam;
  EXPECT_THROW_CODE(decide_non_enlargeable(Operator<F>::linear(Subspace<F>(1))), NotMaximalMonotone);
  EXPECT_THROW_CODE(decide_non_enlargeable(Operator<F>::linear(sub<F>({{1, -1}}, 1))), NotMaximalMonotone);
  EXPECT_THROW_CODE(decide_non_enlargeable(Operator<F>::finite({pt<F>({0}, {0})})), InvalidArgument);
}

TYPED_TEST(Enlargeability, ConstructFromSelfCancelling) {
  using F = TypeParam;
  const auto t = construct_from_self_cancelling(rotation<F>(), pt<F>({0, 0}, {0, 0}));
  EXPECT_TRUE(same_operator(t, Operator<F>::linear(rotation<F>())));
  EXPECT_TRUE(is_maximal_monotone_linear(t));
  EXPECT_TRUE(decide_non_enlargeable(t).non_enlargeable());

  EXPECT_THROW_CODE(construct_from_self_cancelling(Subspace<F>(1), pt<F>({0}, {0})), DualNotMonotone);
  EXPECT_THROW_CODE(construct_from_self_cancelling(sub<F>({{1, 1}}, 1), pt<F>({0}, {0})), NotSelfCancelling);

  const auto line = construct_from_self_cancelling(Subspace<F>::vertical(1), pt<F>({2}, {3}));
  EXPECT_TRUE(line.contains_point(pt<F>({2}, {-40})));
  EXPECT_FALSE(line.contains_point(pt<F>({1}, {3})));
  EXPECT_TRUE(decide_non_enlargeable(line).non_enlargeable());
}

TYPED_TEST(Enlargeability, SignDisambiguation) {
  using F = TypeParam;
  EXPECT_EQ(disambiguate_sign(rotation<F>()), SignTag::Plus);
  EXPECT_EQ(disambiguate_sign(Subspace<F>::vertical(2)), SignTag::Plus);
  EXPECT_EQ(disambiguate_sign(negate(rotation<F>())), SignTag::Plus);
  EXPECT_THROW_CODE(disambiguate_sign(Subspace<F>(1)), NotMaximalSelfCancelling);
  EXPECT_THROW_CODE(disambiguate_sign(sub<F>({{1, 1}}, 1)), NotMaximalSelfCancelling);
}

TYPED_TEST(Enlargeability, DualSignClassification) {
  using F = TypeParam;
  EXPECT_EQ(classify_dual_sign(sub<F>({{1, 1}}, 1)), SignTag::Plus);
  EXPECT_EQ(classify_dual_sign(sub<F>({{1, -1}}, 1)), SignTag::Minus);
  EXPECT_EQ(classify_dual_sign(Subspace<F>::graph(mat<F>({{1, 0}, {0, -1}}))), SignTag::Neither);
  EXPECT_EQ(to_string(SignTag::Minus), "minus");
}

TYPED_TEST(Enlargeability, DualMonotoneShortcut) {
  using F = TypeParam;
  EXPECT_TRUE(lemma31_shortcut(rotation<F>()));
  EXPECT_EQ(vdash(rotation<F>()).dim(), 2u);
  EXPECT_FALSE(lemma31_shortcut(Subspace<F>(1)));
  const auto horizontal = sub<F>({{1, 0, 0, 0}}, 2);
  EXPECT_EQ(vdash(horizontal).dim(), 3u);
  EXPECT_FALSE(lemma31_shortcut(horizontal));
  EXPECT_TRUE(member(vdash(horizontal), pt<F>({0, 1}, {0, -1})));
  EXPECT_THROW_CODE(lemma31_shortcut(sub<F>({{1, 1}}, 1)), NotSelfCancelling);
}

TEST(EnlargeabilityExact, IdentityIsNotADualOfSelfCancelling) {
  // graph(identity) is maximal monotone but (graph id)^vdash = graph(-id) is not self-cancelling
  const auto id = sub<Rational>({{1, 1}}, 1);
  EXPECT_FALSE(is_self_cancelling(vdash(id)));
  EXPECT_FALSE(decide_non_enlargeable(Operator<Rational>::linear(id)).non_enlargeable());
}

TEST(EnlargeabilityExact, GeneratedSkewRoundTrip) {
  for (gen::Seed s = 0; s < 40; ++s) {
    const std::size_t n = 1 + s % 6;
    const auto a = gen::gen_skew(n, s);
    const auto t = gen::gen_point(n, s + 1);
    const Verdict<Rational> v = decide_non_enlargeable(construct_from_self_cancelling(a, t));
    ASSERT_TRUE(v.non_enlargeable());
    EXPECT_TRUE(v.certificate().pre_dual == a);
  }
}

}  // namespace
}  // namespace enlarge::test
