#pragma once

// Truncated skew power series R[[X; sigma]] and skew Laurent series
// R((X; sigma)). A series knows its coefficients on the window
// [start, precision); everything from `precision` up is unknown, everything
// below `start` is zero.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maps.hpp"
#include "report.hpp"
#include "rings.hpp"
#include "sampling.hpp"
#include "skewpoly.hpp"

namespace skewring {

enum class SeriesKind { Power, Laurent };

class SeriesContext {
public:
    /// R[[X; sigma]] from an Ore context whose derivation is zero.
    static std::shared_ptr<const SeriesContext> power(OreContextPtr ore) {
        if (!ore) throw DomainError("null context");
        if (!ore->delta_is_zero()) throw DomainError("power series need delta = 0");
        return std::shared_ptr<const SeriesContext>(new SeriesContext(SeriesKind::Power, ore->sigma()));
    }
    static std::shared_ptr<const SeriesContext> power(TwistMap sigma) { return power(OreContext::make(std::move(sigma))); }

    /// R((X; sigma)); sigma must be invertible.
    static std::shared_ptr<const SeriesContext> laurent(LaurentContextPtr ctx) {
        if (!ctx) throw DomainError("null context");
        return std::shared_ptr<const SeriesContext>(new SeriesContext(SeriesKind::Laurent, ctx->sigma()));
    }
    static std::shared_ptr<const SeriesContext> laurent(TwistMap sigma) {
        return laurent(LaurentContext::make(std::move(sigma)));
    }

    SeriesKind kind() const noexcept { return kind_; }
    const TwistMap& sigma() const noexcept { return sigma_; }
    const RingDescriptor& ring() const noexcept { return sigma_.domain(); }

    std::string name() const {
        return kind_ == SeriesKind::Power ? ring().name() + "[[X; " + sigma_.name() + "]]"
                                          : ring().name() + "((X; " + sigma_.name() + "))";
    }

private:
    SeriesContext(SeriesKind kind, TwistMap sigma) : kind_(kind), sigma_(std::move(sigma)) {}

    SeriesKind kind_;
    TwistMap sigma_;
};

using SeriesContextPtr = std::shared_ptr<const SeriesContext>;

class TruncatedSeries {
public:
    using Exponent = std::int64_t;

    /// Coefficients for exponents start, start + 1, ..., precision - 1.
    TruncatedSeries(SeriesContextPtr ctx, Exponent start, std::vector<RingElement> coefficients, Exponent precision)
        : ctx_(std::move(ctx)), start_(start), coefficients_(std::move(coefficients)), precision_(precision) {
        if (!ctx_) throw DomainError("null context");
        if (start_ > precision_) throw DomainError("series start above its precision");
        if (ctx_->kind() == SeriesKind::Power && start_ < 0) throw DomainError("power series start below 0");
        if (coefficients_.size() != static_cast<std::size_t>(precision_ - start_))
            throw DomainError("series window holds " + std::to_string(precision_ - start_) + " coefficients, got " +
                              std::to_string(coefficients_.size()));
        for (const auto& c : coefficients_)
            if (!(c.ring() == ctx_->ring())) throw MismatchError("coefficient outside " + ctx_->ring().name());
    }

    /// Sum of c X^e over the given terms, known up to `precision`; terms at or
    /// above the precision are dropped.
    static TruncatedSeries from_terms(SeriesContextPtr ctx, std::span<const std::pair<Exponent, RingElement>> terms,
                                      Exponent precision) {
        Exponent start = ctx->kind() == SeriesKind::Power ? 0 : std::min<Exponent>(0, precision);
        for (const auto& [e, c] : terms)
            if (e < start && !c.is_zero()) start = e;
        if (start > precision) throw DomainError("series start above its precision");
        std::vector<RingElement> coeffs(static_cast<std::size_t>(precision - start), zero(ctx->ring()));
        for (const auto& [e, c] : terms) {
            if (e >= precision || c.is_zero()) continue;
            auto& slot = coeffs[static_cast<std::size_t>(e - start)];
            slot = add(slot, c);
        }
        return TruncatedSeries(std::move(ctx), start, std::move(coeffs), precision);
    }

    template <class Context>
    static TruncatedSeries from_poly(SeriesContextPtr ctx, const SkewPoly<Context>& p, Exponent precision) {
        if (!(p.context()->sigma().domain() == ctx->ring())) throw MismatchError("polynomial over a different ring");
        return from_terms(std::move(ctx), p.terms(), precision);
    }

    static TruncatedSeries monomial(SeriesContextPtr ctx, RingElement c, Exponent e, Exponent precision) {
        std::pair<Exponent, RingElement> t{e, std::move(c)};
        return from_terms(std::move(ctx), std::span(&t, 1), precision);
    }

    static TruncatedSeries one(SeriesContextPtr ctx, Exponent precision) {
        auto c = skewring::one(ctx->ring());
        return monomial(std::move(ctx), std::move(c), 0, precision);
    }

    const SeriesContextPtr& context() const noexcept { return ctx_; }
    Exponent start() const noexcept { return start_; }
    Exponent precision() const noexcept { return precision_; }
    const std::vector<RingElement>& coefficients() const noexcept { return coefficients_; }

    /// Zero below the window; unknown (an error) at or above the precision.
    RingElement coefficient(Exponent e) const {
        if (e >= precision_) throw DomainError("coefficient of X^" + std::to_string(e) + " is beyond the precision");
        if (e < start_) return zero(ctx_->ring());
        return coefficients_[static_cast<std::size_t>(e - start_)];
    }

    /// Same series known only up to a lower precision.
    TruncatedSeries truncate(Exponent precision) const {
        if (precision > precision_) throw DomainError("cannot raise precision by truncation");
        Exponent start = std::min(start_, precision);
        std::vector<RingElement> coeffs;
        for (Exponent e = start; e < precision; ++e) coeffs.push_back(coefficient(e));
        return TruncatedSeries(ctx_, start, std::move(coeffs), precision);
    }

    TruncatedSeries operator-() const {
        std::vector<RingElement> coeffs;
        coeffs.reserve(coefficients_.size());
        for (const auto& c : coefficients_) coeffs.push_back(neg(c));
        return TruncatedSeries(ctx_, start_, std::move(coeffs), precision_);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same(b, "add");
        Exponent precision = std::min(a.precision_, b.precision_);
        Exponent start = std::min({a.start_, b.start_, precision});
        std::vector<RingElement> coeffs;
        for (Exponent e = start; e < precision; ++e) coeffs.push_back(add(a.coefficient(e), b.coefficient(e)));
        return TruncatedSeries(a.ctx_, start, std::move(coeffs), precision);
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

    /// Same precision and the same known coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.ctx_ != b.ctx_ || a.precision_ != b.precision_) return false;
        for (Exponent e = std::min(a.start_, b.start_); e < a.precision_; ++e)
            if (!(a.coefficient(e) == b.coefficient(e))) return false;
        return true;
    }

    void require_same(const TruncatedSeries& other, const char* op) const {
        if (ctx_ != other.ctx_) throw MismatchError(std::string(op) + ": series over different contexts");
    }

private:
    SeriesContextPtr ctx_;
    Exponent start_;
    std::vector<RingElement> coefficients_;
    Exponent precision_;
};

/// Exact below min(p.precision + q.start, q.precision + p.start).
inline TruncatedSeries series_mul(const TruncatedSeries& p, const TruncatedSeries& q) {
    p.require_same(q, "series_mul");
    const auto& sigma = p.context()->sigma();
    auto start = p.start() + q.start();
    auto precision = std::min(p.precision() + q.start(), q.precision() + p.start());
    std::vector<RingElement> coeffs(static_cast<std::size_t>(precision - start), zero(p.context()->ring()));
    for (auto m = p.start(); m < p.precision(); ++m) {
        const auto& r = p.coefficient(m);
        if (r.is_zero()) continue;
        for (auto n = q.start(); n < q.precision() && m + n < precision; ++n) {
            const auto& s = q.coefficient(n);
            if (s.is_zero()) continue;
            auto& slot = coeffs[static_cast<std::size_t>(m + n - start)];
            slot = add(slot, mul(r, sigma_power(sigma, m, s)));
        }
    }
    return TruncatedSeries(p.context(), start, std::move(coeffs), precision);
}

inline TruncatedSeries operator*(const TruncatedSeries& p, const TruncatedSeries& q) { return series_mul(p, q); }

/// Least exponent with a nonzero known coefficient; nullopt when the window
/// is all zero (truncation cannot certify that the series vanishes).
inline std::optional<std::int64_t> series_order(const TruncatedSeries& p) {
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        if (!p.coefficients()[k].is_zero()) return p.start() + static_cast<std::int64_t>(k);
    return std::nullopt;
}

inline RingElement series_leading_coefficient(const TruncatedSeries& p) {
    auto o = series_order(p);
    if (!o) throw DomainError("leading coefficient unknown at precision " + std::to_string(p.precision()));
    return p.coefficient(*o);
}

/// g (k X^e) for a single term: coefficient g_m sigma^m(k) at m + e, exact up to g.precision + e.
inline TruncatedSeries series_mul_term(const TruncatedSeries& g, const RingElement& k, std::int64_t e) {
    const auto& sigma = g.context()->sigma();
    std::vector<std::pair<std::int64_t, RingElement>> terms;
    for (auto m = g.start(); m < g.precision(); ++m) {
        const auto& c = g.coefficient(m);
        if (!c.is_zero()) terms.emplace_back(m + e, mul(c, sigma_power(sigma, m, k)));
    }
    if (g.context()->kind() == SeriesKind::Power && g.start() + e < 0) throw DomainError("negative exponent in a power series");
    auto out = TruncatedSeries::from_terms(g.context(), terms, g.precision() + e);
    return out;
}

inline std::string to_string(const TruncatedSeries& p) {
    std::vector<std::string> out;
    for (auto e = p.start(); e < p.precision(); ++e) {
        const auto& c = p.coefficient(e);
        if (c.is_zero()) continue;
        auto coeff = render_terms(c);
        if (e == 0) {
            if (coeff.size() == 1)
                out.push_back(to_string(c));
            else
                out.insert(out.end(), coeff.begin(), coeff.end());
            continue;
        }
        std::string x = "X";
        if (e != 1) x += "^" + std::to_string(e);
        out.push_back(detail::attach(coeff, x));
    }
    std::string tail = "O(X" + (p.precision() == 1 ? std::string() : "^" + std::to_string(p.precision())) + ")";
    out.push_back(tail);
    return detail::join_terms(out);
}

// ---------------------------------------------------------------------------
// Order reduction

struct SeriesStep {
    std::size_t generator = 0;
    RingElement multiplier;  // k in g (k X^shift)
    std::int64_t shift = 0;
};

/// One step q' = q - g (k X^(o-d)) with o = order(q), d = order(g) <= o and
/// k = sigma^-d(c^-1 r); order(q') > o.
inline std::pair<TruncatedSeries, SeriesStep> series_reduce_step(const TruncatedSeries& q,
                                                                 std::span<const TruncatedSeries> gens) {
    const auto& ctx = q.context();
    const auto& ring = ctx->ring();
    if (!ring.is_associative_division())
        throw DomainError("series reduction needs an associative division ring, got " + ring.name());
    if (!ctx->sigma().has_preimage()) throw DomainError("series reduction needs a surjective sigma");
    auto o = series_order(q);
    if (!o) throw DomainError("order of q is unknown at precision " + std::to_string(q.precision()));
    for (std::size_t idx = 0; idx < gens.size(); ++idx) {
        const auto& g = gens[idx];
        q.require_same(g, "series_reduce_step");
        auto d = series_order(g);
        if (!d || *d > *o) continue;
        auto c = g.coefficient(*d);
        auto k = ctx->sigma().apply_power(-static_cast<int>(*d), mul(inverse(c), q.coefficient(*o)));
        auto next = q - series_mul_term(g, k, *o - *d);
        if (next.precision() > *o && !next.coefficient(*o).is_zero())
            throw DomainError("leading coefficient not cancelled");
        return {std::move(next), SeriesStep{idx, std::move(k), *o - *d}};
    }
    throw DomainError("no generator of order <= " + std::to_string(*o));
}

struct SeriesReduction {
    std::vector<SeriesStep> steps;
    TruncatedSeries remainder;
};

/// Repeats series_reduce_step until the order of the remainder is unknown,
/// no generator fits, or max_steps is reached.
inline SeriesReduction series_reduce(const TruncatedSeries& q, std::span<const TruncatedSeries> gens,
                                     std::size_t max_steps = 64) {
    SeriesReduction out{{}, q};
    while (out.steps.size() < max_steps) {
        auto o = series_order(out.remainder);
        if (!o) break;
        bool fits = false;
        for (const auto& g : gens)
            if (auto d = series_order(g); d && *d <= *o) fits = true;
        if (!fits) break;
        auto [next, step] = series_reduce_step(out.remainder, gens);
        out.remainder = std::move(next);
        out.steps.push_back(std::move(step));
    }
    return out;
}

/// sum of g (k X^shift) over the steps, plus the remainder.
inline TruncatedSeries replay(const SeriesReduction& r, std::span<const TruncatedSeries> gens) {
    TruncatedSeries out = r.remainder;
    for (const auto& step : r.steps) out = out + series_mul_term(gens[step.generator], step.multiplier, step.shift);
    return out;
}

// ---------------------------------------------------------------------------
// Sampling

inline TruncatedSeries random_series(const SeriesContextPtr& ctx, Sampler& sampler, std::int64_t precision,
                                     int max_terms = 4) {
    std::int64_t lo = ctx->kind() == SeriesKind::Power ? 0 : -2;
    std::vector<std::pair<std::int64_t, RingElement>> terms;
    auto count = sampler.uniform(0, max_terms);
    for (std::int64_t t = 0; t < count; ++t) terms.emplace_back(sampler.uniform(lo, precision - 1), sampler.element(ctx->ring()));
    return TruncatedSeries::from_terms(ctx, terms, precision);
}

/// (p, X^n, q) and (p, q, X^n) vanish at the precision they are known to.
inline CheckReport series_nucleus_check(const SeriesContextPtr& ctx, std::int64_t n, std::size_t trials,
                                        std::int64_t precision = 8, std::uint64_t seed = 1) {
    CheckReport r{.name = "series-nucleus(X^" + std::to_string(n) + ")", .trials = trials, .seed = seed};
    Sampler sampler(seed);
    auto xn = TruncatedSeries::monomial(ctx, one(ctx->ring()), n, n + precision);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto p = random_series(ctx, sampler, precision);
        auto q = random_series(ctx, sampler, precision);
        auto a = (p * xn) * q - p * (xn * q);
        auto b = (p * q) * xn - p * (q * xn);
        if (series_order(a)) r.fail("(p, X^n, q) = " + to_string(a) + " for p = " + to_string(p) + ", q = " + to_string(q));
        else if (series_order(b))
            r.fail("(p, q, X^n) = " + to_string(b) + " for p = " + to_string(p) + ", q = " + to_string(q));
    }
    r.summary = r.passed ? "no nucleus violation below the tracked precision" : "nuclearity violated";
    return r;
}

}  // namespace skewring
