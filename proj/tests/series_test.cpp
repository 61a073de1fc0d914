#include <gtest/gtest.h>

#include "skewring/series.hpp"

namespace skewring {
namespace {

const RingDescriptor Q = RingDescriptor::rationals();
const RingDescriptor C = RingDescriptor::complexes();
const RingDescriptor H = RingDescriptor::quaternions();
const RingDescriptor QY = RingDescriptor::poly1();

using Terms = std::vector<std::pair<std::int64_t, RingElement>>;

TruncatedSeries series(const SeriesContextPtr& ctx, Terms terms, std::int64_t precision) {
    return TruncatedSeries::from_terms(ctx, terms, precision);
}

TEST(Series, Telescoping) {
    for (const auto& sigma : {TwistMap::identity(Q), TwistMap::sigma_q_complex(2)}) {
        auto ctx = SeriesContext::power(sigma);
        const auto& R = ctx->ring();
        const std::int64_t N = 16;
        auto a = series(ctx, {{0, one(R)}, {1, from_rational(R, -1)}}, N);
        Terms geometric;
        for (std::int64_t e = 0; e < N; ++e) geometric.emplace_back(e, one(R));
        auto b = series(ctx, geometric, N);
        auto product = a * b;
        EXPECT_EQ(product.precision(), N);
        EXPECT_EQ(product, TruncatedSeries::one(ctx, N));
        EXPECT_EQ(to_string(product), "1 + O(X^16)");
    }
}

TEST(Series, MultiplyByOneKeepsPrecision) {
    auto ctx = SeriesContext::laurent(TwistMap::sigma_q_complex(3));
    Sampler sampler(2);
    for (int t = 0; t < 50; ++t) {
        auto p = random_series(ctx, sampler, 6);
        auto unit = TruncatedSeries::one(ctx, p.precision() - p.start());
        EXPECT_EQ(p * unit, p);
        EXPECT_EQ((p * unit).precision(), p.precision());
    }
}

TEST(Series, ComplexSigma2Square) {
    auto ctx = SeriesContext::power(TwistMap::sigma_q_complex(2));
    auto i = cd_basis(C, 1);
    auto ix = TruncatedSeries::monomial(ctx, i, 1, 8);
    auto sq = ix * ix;
    EXPECT_EQ(sq.precision(), 8);
    EXPECT_EQ(sq, TruncatedSeries::monomial(ctx, from_rational(C, -2), 2, 8));
    EXPECT_EQ(to_string(sq), "-2*X^2 + O(X^8)");
}

TEST(Series, PrecisionRule) {
    auto ctx = SeriesContext::laurent(TwistMap::identity(Q));
    auto p = series(ctx, {{-2, one(Q)}}, 3);
    auto q = series(ctx, {{1, one(Q)}}, 5);
    auto pq = p * q;
    EXPECT_EQ(pq.start(), p.start() + q.start());
    EXPECT_EQ(pq.precision(), std::min(p.precision() + q.start(), q.precision() + p.start()));
    EXPECT_EQ(pq.precision(), 3);
}

TEST(Series, Order) {
    auto ctx = SeriesContext::power(TwistMap::identity(Q));
    auto p = series(ctx, {{3, one(Q)}, {5, one(Q)}}, 10);
    EXPECT_EQ(series_order(p), 3);
    EXPECT_EQ(series_leading_coefficient(p), one(Q));

    auto z = series(ctx, {}, 10);
    EXPECT_FALSE(series_order(z).has_value());
    EXPECT_THROW(series_leading_coefficient(z), DomainError);
    EXPECT_EQ(to_string(z), "O(X^10)");

    auto lctx = SeriesContext::laurent(TwistMap::coefficient_doubler(QY));
    auto y = monomial(QY, {1, 0});
    auto l = series(lctx, {{-2, y}, {1, one(QY)}}, 4);
    EXPECT_EQ(series_order(l), -2);
    EXPECT_EQ(series_leading_coefficient(l), y);
    EXPECT_EQ(to_string(l), "Y*X^-2 + X + O(X^4)");
}

TEST(Series, UnknownCoefficientsAreNotZero) {
    auto ctx = SeriesContext::power(TwistMap::identity(Q));
    auto p = series(ctx, {{1, one(Q)}, {7, one(Q)}}, 4);
    EXPECT_EQ(p.coefficient(1), one(Q));
    EXPECT_THROW(p.coefficient(4), DomainError);
    EXPECT_THROW(p.coefficient(7), DomainError);
    EXPECT_THROW(p.truncate(5), DomainError);
    EXPECT_EQ(p.truncate(2).precision(), 2);
}

TEST(Series, Validation) {
    EXPECT_THROW(SeriesContext::power(OreContext::make(TwistMap::identity(QY), TwistMap::formal_derivative(QY))),
                 DomainError);
    EXPECT_THROW(SeriesContext::laurent(TwistMap::exponent_fold(QY)), DomainError);
    auto ctx = SeriesContext::power(TwistMap::identity(Q));
    EXPECT_THROW(TruncatedSeries(ctx, -1, {one(Q)}, 0), DomainError);
    EXPECT_THROW(TruncatedSeries(ctx, 0, {one(Q)}, 3), DomainError);
    EXPECT_THROW(TruncatedSeries(ctx, 2, {}, 1), DomainError);
    EXPECT_THROW(series(ctx, {{0, one(C)}}, 3), MismatchError);
    auto other = SeriesContext::power(TwistMap::identity(Q));
    EXPECT_THROW(TruncatedSeries::one(ctx, 3) * TruncatedSeries::one(other, 3), MismatchError);
}

template <class Context>
void check_soundness(const std::shared_ptr<const Context>& pctx, const SeriesContextPtr& sctx, std::int64_t lo,
                     std::int64_t hi) {
    Sampler sampler(77);
    for (int t = 0; t < 100; ++t) {
        auto p = random_poly(pctx, sampler, lo, hi);
        auto q = random_poly(pctx, sampler, lo, hi);
        auto sp = TruncatedSeries::from_poly(sctx, p, sampler.uniform(hi - 2, hi + 3));
        auto sq = TruncatedSeries::from_poly(sctx, q, sampler.uniform(hi - 2, hi + 3));
        auto product = sp * sq;
        auto exact = TruncatedSeries::from_poly(sctx, p * q, product.precision());
        ASSERT_EQ(product, exact) << to_string(product) << " vs " << to_string(exact);
    }
}

TEST(Series, AgreesWithPolynomialsBelowPrecision) {
    auto ore = OreContext::make(TwistMap::sigma_q_complex(2));
    check_soundness(ore, SeriesContext::power(ore), 0, 4);
    auto qt = OreContext::make(TwistMap::exponent_fold(QY));
    check_soundness(qt, SeriesContext::power(qt), 0, 4);
    auto laurent = LaurentContext::make(TwistMap::conjugation(H));
    check_soundness(laurent, SeriesContext::laurent(laurent), -3, 3);
    auto s2 = LaurentContext::make(TwistMap::sigma_q_complex(2));
    check_soundness(s2, SeriesContext::laurent(s2), -3, 3);
}

TEST(Series, OrderIsAdditiveOverDivisionRings) {
    for (const auto& ctx : {SeriesContext::laurent(TwistMap::sigma_q_complex(2)),
                            SeriesContext::laurent(TwistMap::conjugation(H)), SeriesContext::power(TwistMap::identity(Q))}) {
        Sampler sampler(5);
        int checked = 0;
        for (int t = 0; t < 200; ++t) {
            auto p = random_series(ctx, sampler, 6);
            auto q = random_series(ctx, sampler, 6);
            auto pq = p * q;
            auto op = series_order(p), oq = series_order(q);
            if (!op || !oq || *op + *oq >= pq.precision()) continue;
            ASSERT_EQ(series_order(pq), *op + *oq) << ctx->name();
            ++checked;
        }
        EXPECT_GT(checked, 50);
    }
}

TEST(Series, NucleusAtPrecision8) {
    for (const auto& ctx :
         {SeriesContext::laurent(TwistMap::sigma_q_complex(2)), SeriesContext::power(TwistMap::sigma_q_complex(2))}) {
        for (std::int64_t n : {0, 1, 3}) {
            auto r = series_nucleus_check(ctx, n, 60);
            EXPECT_TRUE(r.passed) << r.witnesses.front();
        }
    }
    auto r = series_nucleus_check(SeriesContext::laurent(TwistMap::sigma_q_complex(2)), -2, 60);
    EXPECT_TRUE(r.passed);
}

TEST(SeriesReduce, RationalExample) {
    auto ctx = SeriesContext::power(TwistMap::identity(Q));
    auto q = series(ctx, {{2, one(Q)}, {3, one(Q)}}, 8);
    std::vector<TruncatedSeries> gens{series(ctx, {{2, one(Q)}}, 8)};
    auto [next, step] = series_reduce_step(q, gens);
    EXPECT_EQ(step.generator, 0u);
    EXPECT_EQ(step.shift, 0);
    EXPECT_EQ(step.multiplier, one(Q));
    EXPECT_EQ(next, series(ctx, {{3, one(Q)}}, 8));
    EXPECT_GE(series_order(next), 3);
}

TEST(SeriesReduce, QuaternionExample) {
    auto ctx = SeriesContext::laurent(TwistMap::conjugation(H));
    auto i = cd_basis(H, 1), j = cd_basis(H, 2), k = cd_basis(H, 3);
    auto q = TruncatedSeries::monomial(ctx, j, 1, 6);
    std::vector<TruncatedSeries> gens{TruncatedSeries::monomial(ctx, i, 1, 6)};
    auto [next, step] = series_reduce_step(q, gens);
    EXPECT_EQ(step.multiplier, ctx->sigma().apply_inverse(inverse(i) * j));
    EXPECT_EQ(step.multiplier, k);
    EXPECT_EQ(step.shift, 0);
    EXPECT_FALSE(series_order(next).has_value());
}

TEST(SeriesReduce, IteratesToACombination) {
    std::vector<SeriesContextPtr> contexts{SeriesContext::laurent(TwistMap::sigma_q_complex(2)),
                                           SeriesContext::laurent(TwistMap::conjugation(H)),
                                           SeriesContext::power(TwistMap::conjugation(C))};
    Sampler sampler(50);
    for (const auto& ctx : contexts)
        for (int t = 0; t < 50; ++t) {
            auto q = random_series(ctx, sampler, 7, 5);
            std::vector<TruncatedSeries> gens;
            for (int g = 0; g < 2; ++g) {
                auto s = random_series(ctx, sampler, 7, 3);
                if (!series_order(s)) s = TruncatedSeries::one(ctx, 7);
                gens.push_back(s);
            }
            auto r = series_reduce(q, gens);
            std::int64_t last = std::numeric_limits<std::int64_t>::min();
            TruncatedSeries rem = q;
            for (const auto& step : r.steps) {
                auto o = series_order(rem);
                ASSERT_TRUE(o.has_value());
                ASSERT_GT(*o, last);
                last = *o;
                rem = rem - series_mul_term(gens[step.generator], step.multiplier, step.shift);
            }
            auto back = replay(r, gens);
            ASSERT_EQ(back, q.truncate(back.precision())) << ctx->name();
        }
}

TEST(SeriesReduce, Preconditions) {
    auto poly = SeriesContext::power(TwistMap::identity(QY));
    auto one_poly = TruncatedSeries::one(poly, 4);
    std::vector<TruncatedSeries> poly_gens{one_poly};
    EXPECT_THROW(series_reduce_step(one_poly, poly_gens), DomainError);

    auto octo = SeriesContext::power(TwistMap::identity(RingDescriptor::octonions()));
    auto one_octo = TruncatedSeries::one(octo, 4);
    std::vector<TruncatedSeries> octo_gens{one_octo};
    EXPECT_THROW(series_reduce_step(one_octo, octo_gens), DomainError);

    auto ctx = SeriesContext::power(TwistMap::identity(Q));
    std::vector<TruncatedSeries> high{TruncatedSeries::monomial(ctx, one(Q), 3, 8)};
    EXPECT_THROW(series_reduce_step(TruncatedSeries::monomial(ctx, one(Q), 1, 8), high), DomainError);
    EXPECT_THROW(series_reduce_step(series(ctx, {}, 8), high), DomainError);
}

}  // namespace
}  // namespace skewring
