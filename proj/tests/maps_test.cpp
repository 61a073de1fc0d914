#include <gtest/gtest.h>

#include <map>
#include <set>

#include "skewring/maps.hpp"

namespace skewring {
namespace {

const RingDescriptor C = RingDescriptor::complexes();
const RingDescriptor H = RingDescriptor::quaternions();
const RingDescriptor O = RingDescriptor::octonions();
const RingDescriptor QY = RingDescriptor::poly1();
const RingDescriptor QYZ = RingDescriptor::poly2();

RingElement complex(Rational re, Rational im) {
    return from_rational(C, re) + scale(im, cd_basis(C, 1));
}
RingElement y(unsigned a, Rational c = 1) { return monomial(QY, {a, 0}, c); }
RingElement yz(unsigned a, unsigned b, Rational c = 1) { return monomial(QYZ, {a, b}, c); }

TEST(Maps, SigmaQComplex) {
    auto s = TwistMap::sigma_q_complex(2);
    EXPECT_EQ(s.apply(complex(3, 4)), complex(3, 8));
    EXPECT_EQ(s.apply_inverse(complex(3, 8)), complex(3, 4));
    EXPECT_THROW(TwistMap::sigma_q_complex(0), DomainError);
    EXPECT_THROW(s.apply(one(H)), MismatchError);
}

TEST(Maps, CoefficientDoubler) {
    auto s = TwistMap::coefficient_doubler(QY);
    EXPECT_EQ(s.apply(y(0, 2) - y(1) + y(2, 3)), y(0, 2) - y(1, 2) + y(2, 3));
    EXPECT_EQ(s.apply_inverse(y(1, 2)), y(1));
}

TEST(Maps, FormalDerivative) {
    auto d = TwistMap::formal_derivative(QY);
    EXPECT_TRUE(d.apply(one(QY)).is_zero());
    EXPECT_EQ(d.apply(y(3, 2) + y(1)), y(2, 6) + one(QY));
    EXPECT_FALSE(d.has_inverse());
    EXPECT_THROW(d.apply_inverse(one(QY)), DomainError);
}

// Frozen from an independent enumeration of U x N in Cantor order.
TEST(Maps, CounterexampleSigmaOnMonomials) {
    auto s = TwistMap::counterexample_sigma();
    EXPECT_EQ(s.apply(yz(1, 3)), yz(2, 3));
    EXPECT_EQ(s.apply(yz(0, 1)), yz(0, 1));
    EXPECT_EQ(s.apply(yz(0, 2)), yz(1, 0));
    EXPECT_EQ(s.apply(yz(0, 4)), yz(3, 0));
    EXPECT_EQ(s.apply(yz(0, 6)), yz(1, 1));
    EXPECT_EQ(s.apply(yz(0, 10)), yz(3, 1));
    EXPECT_EQ(s.apply(yz(0, 12)), yz(1, 2));
    EXPECT_EQ(s.apply(yz(0, 7)), yz(0, 4));
    EXPECT_EQ(s.apply(one(QYZ)), one(QYZ));
}

TEST(Maps, CounterexampleSigmaInverseCases) {
    auto s = TwistMap::counterexample_sigma();
    EXPECT_EQ(s.apply_inverse(yz(0, 3)), yz(0, 5));  // a = 0: Z^(2b-1)
    EXPECT_EQ(s.apply_inverse(yz(4, 2)), yz(2, 2));  // a even: Y^(a/2) Z^b
    EXPECT_EQ(s.apply_inverse(yz(3, 1)), yz(0, 10)); // a odd: Z^(g^-1(a, b))
}

TEST(Maps, CounterexampleSigmaIsABijectionOnTheGrid) {
    std::set<Monomial> images;
    for (std::uint32_t a = 0; a <= 12; ++a)
        for (std::uint32_t b = 0; b <= 12; ++b) {
            Monomial m{a, b};
            auto image = counterexample::sigma(m);
            EXPECT_TRUE(images.insert(image).second) << a << "," << b;
            EXPECT_EQ(counterexample::sigma_inverse(image), m);
            EXPECT_EQ(counterexample::sigma(counterexample::sigma_inverse(m)), m);
        }
}

TEST(Maps, CounterexampleSigmaSendsMultiplesOfYIntoY2) {
    auto s = TwistMap::counterexample_sigma();
    Sampler sampler(17);
    std::vector<RingElement> gens{yz(2, 0)};
    for (int t = 0; t < 300; ++t) {
        auto h = sampler.element(QYZ);
        EXPECT_TRUE(monomial_ideal_member(s.apply(yz(1, 0) * h), gens));
    }
}

TEST(Maps, ConjugationIsAnInvolution) {
    auto c = TwistMap::conjugation(H);
    Sampler sampler(2);
    for (int t = 0; t < 50; ++t) {
        auto x = sampler.element(H);
        EXPECT_EQ(c.apply_inverse(x), conjugate(x));
        EXPECT_EQ(c.apply(c.apply(x)), x);
    }
}

TEST(Maps, QuantumTorusSigma) {
    auto s = TwistMap::quantum_torus_sigma(QY, 2);
    EXPECT_EQ(s.apply(y(1)), y(1, 2));
    EXPECT_EQ(s.apply(y(3) + one(QY)), y(3, 8) + one(QY));
    EXPECT_EQ(s.apply_inverse(y(2)), y(2, Rational(1, 4)));
}

TEST(Maps, ExponentFoldHasOnlyAPreimageChooser) {
    auto s = TwistMap::exponent_fold(QY);
    EXPECT_FALSE(s.has_inverse());
    EXPECT_TRUE(s.has_preimage());
    EXPECT_EQ(s.apply(y(1)), s.apply(y(2)));
    EXPECT_EQ(s.apply(y(0)), one(QY));
    auto p = y(3, 2) - y(1);
    EXPECT_EQ(s.apply(s.preimage(p)), p);
    EXPECT_THROW(s.apply_inverse(p), DomainError);
    EXPECT_TRUE(verify_surjective(s, 200, 4).passed);
}

TEST(Maps, VerifyAdditive) {
    EXPECT_TRUE(verify_additive(TwistMap::sigma_q_complex(5), 100).passed);
    EXPECT_TRUE(verify_additive(TwistMap::conjugation(O), 100).passed);
    auto Q = RingDescriptor::rationals();
    auto square = TwistMap::adhoc("square", Q, [](const RingElement& a) { return a * a; }, {Claim::Additive});
    auto wrapped = TwistMap::composition({square, TwistMap::identity(Q)});
    auto report = verify_additive(wrapped, 100);
    EXPECT_FALSE(report.passed);
    ASSERT_EQ(report.witnesses.size(), 1u);
}

TEST(Maps, VerifyUnitBehavior) {
    EXPECT_TRUE(verify_unit_behavior(TwistMap::sigma_q_complex(7)).passed);
    EXPECT_TRUE(verify_unit_behavior(TwistMap::formal_derivative(QY)).passed);
    EXPECT_TRUE(verify_unit_behavior(TwistMap::transpose(RingDescriptor::matrix(2))).passed);
    auto Q = RingDescriptor::rationals();
    auto shift = TwistMap::adhoc("shift", Q, [&](const RingElement& a) { return a + one(Q); }, {Claim::RespectsOne});
    EXPECT_FALSE(verify_unit_behavior(shift).passed);
}

TEST(Maps, VerifyMultiplicative) {
    auto r2 = verify_multiplicative(TwistMap::sigma_q_complex(2), 50);
    EXPECT_FALSE(r2.passed);
    ASSERT_FALSE(r2.witnesses.empty());
    EXPECT_NE(r2.witnesses.front().find("a = i, b = i"), std::string::npos) << r2.witnesses.front();
    // sigma(i i) = -1 while sigma(i) sigma(i) = (2i)(2i) = -4
    auto s = TwistMap::sigma_q_complex(2);
    auto i = cd_basis(C, 1);
    EXPECT_EQ(s.apply(i * i), from_rational(C, -1));
    EXPECT_EQ(s.apply(i) * s.apply(i), from_rational(C, -4));

    EXPECT_TRUE(verify_multiplicative(TwistMap::sigma_q_complex(-1), 200).passed);
    EXPECT_FALSE(verify_multiplicative(TwistMap::transpose(RingDescriptor::matrix(2)), 200).passed);
}

TEST(Maps, PowerAgreesWithRepeatedApplication) {
    Sampler sampler(12);
    std::vector<TwistMap> maps{TwistMap::sigma_q_complex(3), TwistMap::coefficient_doubler(QY),
                               TwistMap::counterexample_sigma(), TwistMap::formal_derivative(QY)};
    for (const auto& m : maps) {
        for (int e = 0; e <= 5; ++e) {
            auto p = TwistMap::power(m, e);
            for (int t = 0; t < 10; ++t) {
                auto x = sampler.element(m.domain());
                RingElement expected = x;
                for (int n = 0; n < e; ++n) expected = m.apply(expected);
                EXPECT_EQ(p.apply(x), expected) << m.name() << "^" << e;
            }
        }
        if (m.has_inverse()) {
            auto inv = TwistMap::power(m, -1);
            for (int t = 0; t < 10; ++t) {
                auto x = sampler.element(m.domain());
                EXPECT_EQ(inv.apply(x), m.apply_inverse(x));
                EXPECT_EQ(inv.apply_inverse(x), m.apply(x));
            }
        } else {
            EXPECT_THROW(TwistMap::power(m, -1), DomainError);
        }
    }
}

TEST(Maps, CompositionOrderAndInverse) {
    auto a = TwistMap::sigma_q_complex(2);
    auto b = TwistMap::conjugation(C);
    auto ab = TwistMap::composition({a, b});
    Sampler sampler(1);
    for (int t = 0; t < 20; ++t) {
        auto x = sampler.element(C);
        EXPECT_EQ(ab.apply(x), a.apply(b.apply(x)));
        EXPECT_EQ(ab.apply_inverse(ab.apply(x)), x);
    }
    EXPECT_THROW(TwistMap::composition({a, TwistMap::identity(H)}), MismatchError);
    auto weyl = TwistMap::composition({TwistMap::coefficient_doubler(QY), TwistMap::formal_derivative(QY)});
    EXPECT_TRUE(weyl.has_claim(Claim::AnnihilatesOne));
    EXPECT_FALSE(weyl.has_claim(Claim::RespectsOne));
}

// Every shipped kind: each declared claim survives its verifier at 200 samples.
TEST(Maps, DeclaredClaimsHold) {
    auto M2 = RingDescriptor::matrix(2);
    std::vector<TwistMap> shipped{
        TwistMap::identity(H),
        TwistMap::zero(QY),
        TwistMap::sigma_q_complex(2),
        TwistMap::sigma_q_complex(-1),
        TwistMap::sigma_q_complex(Rational(3, 5)),
        TwistMap::conjugation(C),
        TwistMap::conjugation(H),
        TwistMap::conjugation(O),
        TwistMap::conjugation(RingDescriptor::jordan_plus(H)),
        TwistMap::quantum_torus_sigma(QY, 2),
        TwistMap::formal_derivative(QY),
        TwistMap::coefficient_doubler(QY),
        TwistMap::counterexample_sigma(),
        TwistMap::exponent_fold(QY),
        TwistMap::transpose(M2),
        TwistMap::power(TwistMap::sigma_q_complex(2), -2),
        TwistMap::composition({TwistMap::coefficient_doubler(QY), TwistMap::quantum_torus_sigma(QY, 3)}),
    };
    for (const auto& m : shipped) {
        for (const auto& report : verify_claims(m, 200, 99)) {
            EXPECT_TRUE(report.passed) << report.name << ": "
                                       << (report.witnesses.empty() ? "" : report.witnesses.front());
        }
    }
}

TEST(Maps, CommutationCheck) {
    EXPECT_TRUE(verify_commute(TwistMap::quantum_torus_sigma(QY, 2), TwistMap::coefficient_doubler(QY), 100).passed);
    EXPECT_FALSE(verify_commute(TwistMap::sigma_q_complex(2), TwistMap::adhoc("times_i", C, [](const RingElement& a) {
                                    return a * cd_basis(C, 1);
                                }, {}), 100).passed);
}

}  // namespace
}  // namespace skewring
