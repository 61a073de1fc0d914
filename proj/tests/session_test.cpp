#include <gtest/gtest.h>

#include "skewring/cli/suites.hpp"

namespace skewring::cli {
namespace {

Session session(const std::string& json) { return Session(config_from_text(json)); }

const char* kWeyl = R"({"ring": {"kind": "poly1"}, "structure": "ore", "sigma": "identity", "delta": "formal_derivative"})";
const char* kSigma2 = R"({"ring": "complexes", "structure": "laurent", "sigma": {"kind": "sigma_q_complex", "q": "2"}})";
const char* kQuatConj = R"({"ring": "quaternions", "structure": "ore", "sigma": "conjugation"})";
const char* kQuatSeries =
    R"({"ring": "quaternions", "structure": "laurent_series", "sigma": "conjugation", "precision": 8})";
const char* kOcto = R"({"ring": "octonions", "structure": "ore", "sigma": "identity"})";
const char* kTorus = R"({"ring": {"kind": "poly1"}, "structure": "iterated_laurent",
                         "sigmas": [{"kind": "quantum_torus_sigma", "q": "2"}, "identity"]})";

std::string eval(const Session& s, const std::string& text) { return to_string(s.eval(text)); }

TEST(Config, Weyl) {
    auto cfg = weyl_config();
    EXPECT_EQ(cfg.structure, Structure::Ore);
    EXPECT_EQ(cfg.ring, RingDescriptor::poly1());
    EXPECT_EQ(Session(cfg).name(), "Q[Y][X; id, d/dY]");
}

TEST(Config, Rejections) {
    EXPECT_THROW(config_from_text("{"), ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": "rationals", "sigma": "identity", "colour": 1})"), ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": "rationals", "structure": "laurent"})"), ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": "rationals", "structure": "power_series", "sigma": "identity"})"),
                 ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": "rationals", "sigma": "identity", "precision": 4})"), ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": "complexes", "sigma": {"kind": "sigma_q_complex", "q": 0.5}})"),
                 ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": "quaternions", "sigma": {"kind": "sigma_q_complex", "q": "2"}})"),
                 ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": {"kind": "poly1"}, "structure": "laurent", "sigma": "identity",
                                      "delta": "formal_derivative"})"),
                 ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": {"kind": "matrix", "n": 9}, "sigma": "identity"})"), ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": {"kind": "poly1", "variable": "X"}, "sigma": "identity"})"), ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": {"kind": "cayley_dickson", "level": 5}, "sigma": "identity"})"),
                 ConfigError);
    EXPECT_THROW(config_from_text(R"({"ring": {"kind": "poly1"}, "structure": "iterated_laurent", "sigmas": []})"),
                 ConfigError);
    EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, NestedRecordForm) {
    auto cfg = config_from_text(R"({"ring": {"matrix": {"n": 2, "base": "rationals"}}, "sigma": "transpose"})");
    EXPECT_EQ(cfg.ring, RingDescriptor::matrix(2));
    auto q = config_from_text(R"({"ring": "complexes", "structure": "laurent", "sigma": {"sigma_q_complex": {"q": "3"}}})");
    EXPECT_EQ(q.sigma->q(), Rational(3));
    auto hp = config_from_text(R"({"ring": {"jordan_plus": {"base": "quaternions"}}, "sigma": "identity"})");
    EXPECT_EQ(hp.ring, RingDescriptor::jordan_plus(RingDescriptor::quaternions()));
}

TEST(Config, DecimalRationals) {
    auto cfg = config_from_text(R"({"ring": "complexes", "sigma": {"kind": "sigma_q_complex", "q": "0.5"}})");
    EXPECT_EQ(cfg.sigma->q(), Rational(BigInt(1), BigInt(2)));
}

TEST(Session, StructuralRequirementsSurfaceAsConfigErrors) {
    // A Laurent ring needs an invertible twist.
    EXPECT_THROW(session(R"({"ring": {"kind": "poly1"}, "structure": "laurent", "sigma": "exponent_fold"})"), ConfigError);
    EXPECT_THROW(session(R"({"ring": {"kind": "poly1"}, "structure": "iterated_laurent",
                            "sigmas": ["identity", "exponent_fold"]})"),
                 ConfigError);
}

TEST(Session, Lexicon) {
    auto octo = session(kOcto);
    EXPECT_TRUE(octo.lexicon().constants.contains("e7"));
    EXPECT_TRUE(octo.lexicon().constants.contains("e0"));
    EXPECT_FALSE(octo.lexicon().constants.contains("i"));
    EXPECT_FALSE(octo.lexicon().negative_exponents);
    EXPECT_THROW(octo.parse("i"), ParseError);
    EXPECT_THROW(octo.parse("e8"), ParseError);

    auto quat = session(kQuatConj);
    for (auto name : {"i", "j", "k", "e1", "e3"}) EXPECT_TRUE(quat.lexicon().constants.contains(name)) << name;

    auto torus = session(kTorus);
    EXPECT_TRUE(torus.lexicon().indeterminates.contains("X2"));
    EXPECT_FALSE(torus.lexicon().indeterminates.contains("X"));
    EXPECT_TRUE(torus.lexicon().negative_exponents);

    auto series = session(kQuatSeries);
    EXPECT_TRUE(series.lexicon().tails);
    EXPECT_TRUE(series.lexicon().negative_exponents);

    auto power = session(R"({"ring": "rationals", "structure": "power_series", "sigma": "identity", "precision": 6})");
    EXPECT_FALSE(power.lexicon().negative_exponents);
    EXPECT_THROW(power.parse("X^-1"), ParseError);
}

TEST(Session, ParseExamples) {
    auto weyl = session(kWeyl);
    auto v = std::get<OrePoly>(weyl.eval("(2 - Y + 3*Y^2)*X^2"));
    EXPECT_EQ(v.terms().size(), 1u);
    EXPECT_EQ(v.degree().value(), 2);
    EXPECT_EQ(v.coefficient(2).terms().size(), 3u);
    EXPECT_EQ(to_string(v), "(2 - Y + 3*Y^2)*X^2");
    EXPECT_THROW(weyl.parse("X^-1"), ParseError);
    EXPECT_THROW(weyl.parse("q*X"), ParseError);
}

TEST(Session, EvalExamples) {
    EXPECT_EQ(eval(session(kWeyl), "X*Y - Y*X"), "1");
    EXPECT_EQ(eval(session(kWeyl), "X*Y^2"), "2*Y + Y^2*X");
    EXPECT_EQ(eval(session(kSigma2), "(X*i)*i - X*(i*i)"), "-3*X");
    EXPECT_EQ(eval(session(kSigma2), "X^-1*i*X"), "1/2*i");
    EXPECT_EQ(eval(session(kTorus), "X1*Y - 2*Y*X1"), "0");
    EXPECT_EQ(eval(session(kTorus), "X1*X2 - X2*X1"), "0");
    EXPECT_EQ(eval(session(kOcto), "e3*e5"), "-e6");
    EXPECT_EQ(eval(session(kOcto), "e0 + e1^2"), "0");
}

TEST(Session, MultiplyingByOneGivesCanonicalForm) {
    for (auto json : {kWeyl, kSigma2, kQuatConj, kOcto, kTorus}) {
        auto s = session(json);
        Sampler sampler(3);
        for (int t = 0; t < 40; ++t) {
            auto p = s.random(sampler);
            auto text = to_string(p);
            EXPECT_EQ(eval(s, "1*(" + text + ")"), text);
            EXPECT_EQ(s.eval(text), p) << text;
        }
    }
}

TEST(Session, RenderedValuesReparse) {
    const char* configs[] = {
        R"({"ring": {"kind": "matrix", "n": 2}, "sigma": "transpose"})",
        R"({"ring": {"kind": "jordan_plus", "base": "quaternions"}, "sigma": "identity"})",
        R"({"ring": {"kind": "jordan_plus", "base": {"kind": "matrix", "n": 2}}, "sigma": "identity"})",
        R"({"ring": {"kind": "cayley_dickson", "level": 2, "base": {"kind": "poly2"}}, "sigma": "conjugation"})",
        R"({"ring": "sedenions", "structure": "laurent", "sigma": "conjugation"})",
        R"({"ring": {"kind": "poly2"}, "sigma": "counterexample_sigma"})",
    };
    for (auto json : configs) {
        auto s = session(json);
        Sampler sampler(4);
        for (int t = 0; t < 30; ++t) {
            auto p = s.random(sampler);
            EXPECT_EQ(s.eval(to_string(p)), p) << json << ": " << to_string(p);
        }
    }
}

TEST(Session, SeriesValues) {
    auto s = session(kQuatSeries);
    EXPECT_EQ(eval(s, "(1 - X)*(1 + X + X^2 + X^3 + X^4 + X^5 + X^6 + X^7)"), "1 + O(X^8)");
    EXPECT_EQ(eval(s, "i*X^-2 + j + O(X^3)"), "i*X^-2 + j + O(X^3)");
    EXPECT_EQ(eval(s, "O(X^2)"), "O(X^2)");
    Sampler sampler(8);
    for (int t = 0; t < 30; ++t) {
        auto p = s.random(sampler);
        EXPECT_EQ(s.eval(to_string(p)), p) << to_string(p);
    }
    EXPECT_THROW(session(kWeyl).eval(Expr{Tail{3}, {}}), DomainError);
}

TEST(Session, ConstantsAndMatrices) {
    auto jordan = session(R"({"ring": {"kind": "jordan_plus", "base": "quaternions"}, "sigma": "identity"})");
    EXPECT_EQ(eval(jordan, "(i*i)*j - i*(i*j)"), "-j");
    auto m = session(R"({"ring": {"kind": "matrix", "n": 2}, "sigma": "transpose"})");
    EXPECT_EQ(eval(m, "[[1, 2], [3, 4]]*X - X*[[1, 2], [3, 4]]"), "[[0, -1], [1, 0]]*X");
    EXPECT_THROW(m.eval("[[1]]"), DomainError);
    auto jm = session(R"({"ring": {"kind": "jordan_plus", "base": {"kind": "matrix", "n": 2}}, "sigma": "identity"})");
    EXPECT_EQ(eval(jm, "[[0, 1], [0, 0]]*[[0, 0], [1, 0]]"), "[[1/2, 0], [0, 1/2]]");
    auto cdpoly = session(R"({"ring": {"kind": "cayley_dickson", "level": 1, "base": {"kind": "poly1"}}, "sigma": "identity"})");
    EXPECT_EQ(eval(cdpoly, "(Y*i)*(Y*i)"), "-Y^2");
    EXPECT_THROW(session(kSigma2).eval("[[X]]"), DomainError);
}

// ---------------------------------------------------------------------------
// Suites

TEST(Suites, NucleusOnWeyl) {
    SuiteOptions o;
    o.n = 3;
    o.trials = 200;
    auto rep = run_suite(session(kWeyl), "nucleus", o);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks.size(), 4u);
}

TEST(Suites, NucleusOnLaurentCoversNegativePowers) {
    SuiteOptions o;
    o.trials = 50;
    auto rep = run_suite(session(kSigma2), "nucleus", o);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks.size(), 7u);
    EXPECT_EQ(rep.checks.front().name, "nucleus(X^-3)");
}

TEST(Suites, Dichotomy) {
    for (const char* q : {"1", "-1"}) {
        auto rep = run_suite(session(std::string(R"({"ring": "complexes", "structure": "laurent", "sigma": {"kind": "sigma_q_complex", "q": ")") +
                                     q + "\"}}"),
                             "associativity-dichotomy", {});
        ASSERT_TRUE(rep.passed()) << q;
        EXPECT_TRUE(rep.checks.front().witnesses.empty());
        EXPECT_GE(rep.checks.front().trials, 500u);
    }
    auto rep = run_suite(session(kSigma2), "associativity-dichotomy", {});
    ASSERT_TRUE(rep.passed());
    ASSERT_EQ(rep.checks.front().witnesses.size(), 1u);
    EXPECT_EQ(rep.checks.front().witnesses.front(), "(X, i, i) = -3*X");

    auto octo = run_suite(session(kOcto), "associativity-dichotomy", {});
    EXPECT_TRUE(octo.passed());
    EXPECT_EQ(octo.checks.front().witnesses.size(), 1u);

    auto weyl = run_suite(session(kWeyl), "associativity-dichotomy", {});
    EXPECT_TRUE(weyl.passed());
    EXPECT_TRUE(weyl.checks.front().witnesses.empty());

    auto doubler = run_suite(session(R"({"ring": {"kind": "poly1"}, "sigma": "coefficient_doubler",
                                         "delta": "formal_derivative"})"),
                             "associativity-dichotomy", {});
    EXPECT_TRUE(doubler.passed());
    EXPECT_EQ(doubler.checks.front().witnesses.size(), 1u);
}

TEST(Suites, DivisionRoundtrip) {
    auto rep = run_suite(session(kQuatConj), "division-roundtrip", {});
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checks.front().trials, 100u);
    EXPECT_THROW(run_suite(session(kOcto), "division-roundtrip", {}), DomainError);
    EXPECT_THROW(run_suite(session(kTorus), "division-roundtrip", {}), DomainError);
}

TEST(Suites, EverySuitePassesWhereItApplies) {
    SuiteOptions o;
    o.trials = 30;
    for (auto json : {kWeyl, kSigma2, kQuatConj, kQuatSeries, kOcto, kTorus}) {
        auto s = session(json);
        for (const auto& name : suite_names()) {
            if (name == "counterexample") continue;
            try {
                auto rep = run_suite(s, name, o);
                EXPECT_TRUE(rep.passed()) << name << " on " << s.name() << "\n" << to_text(rep);
            } catch (const DomainError&) {
                EXPECT_TRUE(name == "division-roundtrip" || name == "series-precision") << name << " on " << s.name();
            }
        }
    }
}

TEST(Suites, Counterexample) {
    SuiteOptions o;
    o.m = 2;
    o.trials = 100;
    auto rep = run_suite(session(kWeyl), "counterexample", o);
    EXPECT_TRUE(rep.passed());
    ASSERT_EQ(rep.checks.size(), 2u);
    EXPECT_EQ(rep.checks[0].trials, 356u);
    o.m = 0;
    EXPECT_THROW(run_suite(session(kWeyl), "counterexample", o), ConfigError);
}

TEST(Suites, UnknownSuite) { EXPECT_THROW(run_suite(session(kWeyl), "bogus", {}), ConfigError); }

TEST(Suites, ReportsAreDeterministic) {
    SuiteOptions o;
    o.seed = 17;
    auto a = to_json(run_suite(session(kSigma2), "associativity-dichotomy", o)).dump();
    auto b = to_json(run_suite(session(kSigma2), "associativity-dichotomy", o)).dump();
    EXPECT_EQ(a, b);
    auto parsed = nlohmann::json::parse(a);
    EXPECT_EQ(parsed["suite"], "associativity-dichotomy");
    EXPECT_TRUE(parsed["passed"].get<bool>());
    EXPECT_EQ(parsed["checks"][0]["seed"], 17);
}

}  // namespace
}  // namespace skewring::cli
