#include <gtest/gtest.h>

#include "expr_gen.hpp"
#include "skewring/cli/expression.hpp"
#include "skewring/cli/session.hpp"

namespace skewring::cli {
namespace {

TEST(Expression, RenderParseFixedPoint) {
    TreeGen gen(2024);
    for (int t = 0; t < 500; ++t) {
        auto e = gen.tree(4);
        auto text = render(e);
        auto back = parse(text);
        ASSERT_TRUE(same_tree(e, back)) << text << " reparsed as " << render(back);
        ASSERT_EQ(render(back), text);
    }
}

TEST(Expression, MultiplicationIsLeftAssociative) {
    auto e = parse("a*b*c");
    EXPECT_TRUE(same_tree(e, parse("(a*b)*c")));
    EXPECT_FALSE(same_tree(e, parse("a*(b*c)")));
    EXPECT_EQ(render(parse("a*(b*c)")), "a*(b*c)");
    EXPECT_EQ(render(parse("(a*b)*c")), "a*b*c");
    EXPECT_EQ(render(parse("((a))")), "a");
    EXPECT_EQ(render(parse("a - (b - c)")), "a - (b - c)");
    EXPECT_EQ(render(parse("(a - b) - c")), "a - b - c");
    EXPECT_EQ(render(parse("-(a*b)")), "-(a*b)");
    EXPECT_EQ(render(parse("-a*b")), "-a*b");
}

TEST(Expression, AssociationIsPreserved) {
    EXPECT_FALSE(same_tree(parse("i*(X*i)"), parse("(i*X)*i")));
}

TEST(Expression, Numbers) {
    EXPECT_EQ(std::get<Number>(parse("3/4")->node).value, Rational(BigInt(3), BigInt(4)));
    EXPECT_EQ(std::get<Number>(parse("0.25")->node).value, Rational(BigInt(1), BigInt(4)));
    EXPECT_EQ(std::get<Number>(parse("6/4")->node).value, Rational(BigInt(3), BigInt(2)));
    EXPECT_THROW(parse("1/0"), ParseError);
    EXPECT_THROW(parse("1."), ParseError);
}

TEST(Expression, ErrorsCarryPositions) {
    auto position = [](std::string_view text, const Lexicon& lex = Lexicon::permissive()) -> std::size_t {
        try {
            parse(text, lex);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position("1 + * 2"), 4u);
    EXPECT_EQ(position("(1 + 2"), 6u);
    EXPECT_EQ(position("X^2^3"), 3u);
    EXPECT_EQ(position("2^3"), 1u);
    EXPECT_EQ(position("1 2"), 2u);
    EXPECT_EQ(position(""), 0u);
    EXPECT_EQ(position("[[1, 2], [3]]"), 12u);
    EXPECT_EQ(position("[[1, 2]]"), 0u);

    Lexicon ore;
    ore.constants = {"Y"};
    ore.indeterminates = {"X"};
    EXPECT_EQ(position("Y + q", ore), 4u);
    EXPECT_EQ(position("X^-1", ore), 3u);
    EXPECT_EQ(position("Y^-1", ore), 3u);
    EXPECT_EQ(position("1 + O(X^3)", ore), 4u);
}

// Evaluation follows the tree: (ab)c - a(bc) of the parsed values equals the
// associator computed directly on the operands.
TEST(Expression, EvaluationDiffersExactlyByTheAssociator) {
    auto cfg = config_from_text(R"({"ring": "complexes", "structure": "laurent",
                                    "sigma": {"kind": "sigma_q_complex", "q": "2"}})");
    Session s(cfg);
    Sampler sampler(9);
    int nonzero = 0;
    for (int t = 0; t < 100; ++t) {
        auto p = std::get<LaurentPoly>(s.random(sampler));
        auto q = std::get<LaurentPoly>(s.random(sampler));
        auto r = std::get<LaurentPoly>(s.random(sampler));
        auto P = "(" + to_string(p) + ")", Q = "(" + to_string(q) + ")", R = "(" + to_string(r) + ")";
        auto flat = s.eval(P + "*" + Q + "*" + R);
        auto left = s.eval("(" + P + "*" + Q + ")*" + R);
        auto right = s.eval(P + "*(" + Q + "*" + R + ")");
        ASSERT_EQ(flat, left);
        auto diff = std::get<LaurentPoly>(Session::sub(left, right));
        ASSERT_EQ(diff, poly_associator(p, q, r));
        ASSERT_EQ(left == right, poly_associator(p, q, r).is_zero());
        nonzero += !diff.is_zero();
    }
    EXPECT_GT(nonzero, 10);
    // X sits in the middle nucleus, so this pair agrees.
    auto i = LaurentPoly::constant(s.laurent(), cd_basis(s.ring(), 1));
    auto x = LaurentPoly::x_power(s.laurent(), 1);
    EXPECT_EQ(Session::sub(s.eval("(i*X)*i"), s.eval("i*(X*i)")), Value(poly_associator(i, x, i)));
    EXPECT_EQ(to_string(s.eval("(i*X)*i")), "-2*X");
    EXPECT_EQ(to_string(s.eval("(X*i)*i - X*(i*i)")), "-3*X");
}

}  // namespace
}  // namespace skewring::cli
