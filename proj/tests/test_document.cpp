#include <string>

#include "enlarge/document.hpp"
#include "enlarge/generators.hpp"
#include "test_util.hpp"

namespace enlarge::test {
namespace {

using io::emit_operator;
using io::parse_operator;

TEST(Document, ParsesFlowExamples) {
  const auto id = parse_operator(R"({kind: linear, n: 1, basis: [["1","1"]]})");
  EXPECT_TRUE(same_operator(id.op, Operator<Rational>::linear(sub<Rational>({{1, 1}}, 1))));
  EXPECT_TRUE(id.warnings.empty());

  const auto line = parse_operator(R"({kind: affine, n: 1, basis: [["0","1"]], translation: [["2"],["0"]]})");
  EXPECT_EQ(line.op.kind(), OperatorKind::Affine);
  EXPECT_TRUE(line.op.contains_point(pt<Rational>({2}, {17})));
  EXPECT_FALSE(line.op.contains_point(pt<Rational>({1}, {0})));

  const auto origin = parse_operator(R"({kind: finite, n: 2, pairs: [[[0,0],[0,0]]]})");
  ASSERT_EQ(origin.op.points().size(), 1u);
  EXPECT_TRUE(origin.op.points()[0].is_zero());
}

TEST(Document, ParsesBlockStyleAndRationals) {
  const auto d = parse_operator(
      "kind: affine\n"
      "n: 2\n"
      "basis:\n"
      "  - [\"1\", \"0\", \"1/3\", \"0.5\"]\n"
      "  - [0, 1, -2, 7e-1]\n"
      "translation: [[\"-1/7\", 0], [0, \"2.25\"]]\n");
  EXPECT_EQ(d.op.linear_part().dim(), 2u);
  EXPECT_TRUE(d.op.contains_point(PairedPoint<Rational>(Vec<Rational>{Rational(6, 7), Rational(0)},
                                                        Vec<Rational>{Rational(1, 3), Rational(11, 4)})));
}

TEST(Document, DiagnosticsNameLineAndField) {
  auto message = [](const std::string& text) {
    try {
      parse_operator(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const std::string bad_number = message("kind: linear\nn: 1\nbasis:\n  - [\"1\", \"x\"]\n");
  EXPECT_NE(bad_number.find("line 4"), std::string::npos) << bad_number;
  EXPECT_NE(bad_number.find("basis"), std::string::npos) << bad_number;
  const std::string zero_den = message("kind: linear\nn: 1\nbasis:\n  - [\"1/0\", \"1\"]\n");
  EXPECT_NE(zero_den.find("line 4"), std::string::npos) << zero_den;
  const std::string width = message("kind: linear\nn: 2\nbasis:\n  - [1, 2, 3]\n");
  EXPECT_NE(width.find("expected 4 numbers"), std::string::npos) << width;
  EXPECT_NE(message("n: 1\nbasis: []\n").find("kind"), std::string::npos);
  EXPECT_NE(message("kind: weird\nn: 1\n").find("unknown kind"), std::string::npos);
  EXPECT_NE(message("kind: linear\nn: 0\nbasis: []\n").find("'n'"), std::string::npos);
  EXPECT_NE(message("kind: affine\nn: 1\nbasis: [[0, 1]]\n").find("translation"), std::string::npos);
  EXPECT_NE(message("kind: finite\nn: 1\npairs: []\n").find("pairs"), std::string::npos);
  EXPECT_NE(message("kind: [unclosed\n").find("line"), std::string::npos);
}

TEST(Document, Warnings) {
  const auto dep = parse_operator("kind: linear\nn: 1\nbasis:\n  - [1, 1]\n  - [2, 2]\n");
  EXPECT_EQ(dep.op.linear_part().dim(), 1u);
  ASSERT_EQ(dep.warnings.size(), 1u);
  EXPECT_NE(dep.warnings[0].find("dependent"), std::string::npos);

  const auto dup = parse_operator("kind: finite\nn: 1\npairs:\n  - [[1], [1]]\n  - [[1], [1]]\n");
  EXPECT_EQ(dup.op.points().size(), 1u);
  EXPECT_EQ(dup.warnings.size(), 1u);

  const auto inside = parse_operator("kind: affine\nn: 1\nbasis: [[1, 1]]\ntranslation: [[2], [2]]\n");
  EXPECT_EQ(inside.op.kind(), OperatorKind::Linear);
  EXPECT_EQ(inside.warnings.size(), 1u);
}

TEST(Document, EmitIsCanonicalText) {
  const auto t = Operator<Rational>::affine(sub<Rational>({{0, 2}}, 1), PairedPoint<Rational>(
                                                                            Vec<Rational>{Rational(5, 2)}, Vec<Rational>{Rational(0)}));
  EXPECT_EQ(emit_operator(t),
            "kind: affine\n"
            "n: 1\n"
            "basis:\n"
            "  - [\"0\", \"1\"]\n"
            "translation: [[\"5/2\"], [\"0\"]]\n");
}

TEST(Document, RoundTripsGeneratedInstancesExactly) {
  for (gen::Seed s = 0; s < 60; ++s) {
    const std::size_t n = 1 + s % 6;
    std::vector<Operator<Rational>> ops = {
        Operator<Rational>::linear(gen::gen_subspace(n, s)),
        Operator<Rational>::affine(gen::gen_maximal_monotone(n, s), gen::gen_point(n, s, 9, 7)),
        Operator<Rational>::finite({gen::gen_point(n, s + 1, 3, 5), gen::gen_point(n, s + 2, 3, 5)}),
    };
    for (const auto& t : ops) {
      const std::string text = emit_operator(t);
      const auto back = parse_operator(text);
      EXPECT_TRUE(same_operator(back.op, t)) << text;
      EXPECT_EQ(emit_operator(back.op), text);
    }
  }
}

TEST(Document, FloatEmissionRoundTripsDoubles) {
  Matrix<double> m(1, 1);
  m(0, 0) = 0.1;
  const auto t = Operator<double>::affine(Subspace<double>::graph(m), PairedPoint<double>(Vec<double>{1.0 / 3.0}, Vec<double>{0}));
  const auto back = convert_operator<double>(parse_operator(emit_operator(t)).op);
  // the float basis is re-orthonormalized after parsing
  EXPECT_DOUBLE_EQ(back.linear_part().basis()(0, 0), t.linear_part().basis()(0, 0));
  EXPECT_DOUBLE_EQ(back.linear_part().basis()(0, 1), t.linear_part().basis()(0, 1));
  EXPECT_EQ(back.translation(), t.translation());
}

TEST(Document, Points) {
  EXPECT_EQ(io::parse_point("1,2;3,4", 2), pt<Rational>({1, 2}, {3, 4}));
  EXPECT_EQ(io::parse_point("1 2 3/2 -4", 2),
            PairedPoint<Rational>(Vec<Rational>{1, 2}, Vec<Rational>{Rational(3, 2), Rational(-4)}));
  EXPECT_EQ(io::parse_point("0;1", 1), pt<Rational>({0}, {1}));
  EXPECT_THROW_CODE(io::parse_point("1,2;3", 2), ParseError);
  EXPECT_THROW_CODE(io::parse_point("1,a;3,4", 2), ParseError);
  EXPECT_EQ(io::format_point(pt<Rational>({1}, {-1})), "[[\"1\"], [\"-1\"]]");
}

}  // namespace
}  // namespace enlarge::test
