#pragma once

// Non-associative Ore extensions R[X; sigma, delta] and skew Laurent
// polynomial rings R[X^+-; sigma].
//
//   Ore:      (r X^m)(s X^n) = sum_i (r pi_i^m(s)) X^(i+n)
//   Laurent:  (r X^m)(s X^n) = (r sigma^m(s)) X^(m+n)
//
// where pi_i^m is the sum of all words with i copies of sigma and m-i copies
// of delta. Neither product is assumed associative.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extended_int.hpp"
#include "maps.hpp"
#include "report.hpp"
#include "rings.hpp"
#include "sampling.hpp"

namespace skewring {

class OreContext {
public:
    static constexpr bool kNegativeExponents = false;

    /// Validates the declared claims and checks sigma(1) = 1, delta(1) = 0 exactly.
    static std::shared_ptr<const OreContext> make(TwistMap sigma, TwistMap delta) {
        return std::shared_ptr<const OreContext>(new OreContext(std::move(sigma), std::move(delta)));
    }

    /// R[X; sigma, 0]
    static std::shared_ptr<const OreContext> make(TwistMap sigma) {
        auto delta = TwistMap::zero(sigma.domain());
        return make(std::move(sigma), std::move(delta));
    }

    const RingDescriptor& ring() const noexcept { return sigma_.domain(); }
    const TwistMap& sigma() const noexcept { return sigma_; }
    const TwistMap& delta() const noexcept { return delta_; }
    bool delta_is_zero() const noexcept { return delta_.kind() == MapKind::Zero; }

    std::string name() const { return ring().name() + "[X; " + sigma_.name() + ", " + delta_.name() + "]"; }

private:
    OreContext(TwistMap sigma, TwistMap delta) : sigma_(std::move(sigma)), delta_(std::move(delta)) {
        if (!(sigma_.domain() == delta_.domain())) throw MismatchError("sigma and delta act on different rings");
        if (!sigma_.has_claim(Claim::Additive) || !sigma_.has_claim(Claim::RespectsOne))
            throw DomainError("sigma must be declared additive and respecting 1");
        if (!delta_.has_claim(Claim::Additive) || !delta_.has_claim(Claim::AnnihilatesOne))
            throw DomainError("delta must be declared additive with delta(1) = 0");
        if (!verify_unit_behavior(sigma_).passed) throw DomainError("sigma(1) != 1");
        if (!verify_unit_behavior(delta_).passed) throw DomainError("delta(1) != 0");
    }

    TwistMap sigma_;
    TwistMap delta_;
};

class LaurentContext {
public:
    static constexpr bool kNegativeExponents = true;

    /// sigma must carry an exact inverse; the round trip is sampled `trials` times.
    static std::shared_ptr<const LaurentContext> make(TwistMap sigma, std::size_t trials = 200) {
        return std::shared_ptr<const LaurentContext>(new LaurentContext(std::move(sigma), trials));
    }

    const RingDescriptor& ring() const noexcept { return sigma_.domain(); }
    const TwistMap& sigma() const noexcept { return sigma_; }

    std::string name() const { return ring().name() + "[X^+-; " + sigma_.name() + "]"; }

private:
    LaurentContext(TwistMap sigma, std::size_t trials) : sigma_(std::move(sigma)) {
        if (!sigma_.has_inverse()) throw DomainError("Laurent twist " + sigma_.name() + " has no inverse");
        if (!sigma_.has_claim(Claim::Additive) || !sigma_.has_claim(Claim::RespectsOne))
            throw DomainError("sigma must be declared additive and respecting 1");
        if (!verify_unit_behavior(sigma_).passed) throw DomainError("sigma(1) != 1");
        auto round_trip = verify_inverse(sigma_, trials);
        if (!round_trip.passed) throw DomainError("sigma inverse round trip failed: " + round_trip.witnesses.front());
    }

    TwistMap sigma_;
};

using OreContextPtr = std::shared_ptr<const OreContext>;
using LaurentContextPtr = std::shared_ptr<const LaurentContext>;

/// Finite sum of r_i X^i over a context; terms are kept sorted by exponent
/// with no zero coefficients.
template <class Context>
class SkewPoly {
public:
    using ContextPtr = std::shared_ptr<const Context>;
    using Exponent = std::int64_t;
    using Term = std::pair<Exponent, RingElement>;

    explicit SkewPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw DomainError("null context");
    }

    SkewPoly(ContextPtr ctx, std::vector<Term> terms) : SkewPoly(std::move(ctx)) {
        std::map<Exponent, RingElement> acc;
        for (auto& [e, c] : terms) accumulate(acc, e, std::move(c));
        assign(std::move(acc));
    }

    static SkewPoly constant(ContextPtr ctx, RingElement c) { return monomial(std::move(ctx), std::move(c), 0); }

    static SkewPoly monomial(ContextPtr ctx, RingElement c, Exponent e) {
        std::vector<Term> t;
        t.emplace_back(e, std::move(c));
        return SkewPoly(std::move(ctx), std::move(t));
    }

    /// X^e
    static SkewPoly x_power(ContextPtr ctx, Exponent e) {
        auto c = skewring::one(ctx->ring());
        return monomial(std::move(ctx), std::move(c), e);
    }

    static SkewPoly one(ContextPtr ctx) { return x_power(std::move(ctx), 0); }

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    RingElement coefficient(Exponent e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, Exponent x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return zero(ctx_->ring());
    }

    Degree degree() const { return terms_.empty() ? Degree() : Degree(terms_.back().first); }
    Order order() const { return terms_.empty() ? Order() : Order(terms_.front().first); }

    const RingElement& leading_coefficient() const {
        if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return terms_.back().second;
    }

    /// Coefficient of the least power of X.
    const RingElement& trailing_coefficient() const {
        if (terms_.empty()) throw DomainError("trailing coefficient of the zero polynomial");
        return terms_.front().second;
    }

    SkewPoly operator-() const {
        SkewPoly out(ctx_);
        out.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, neg(c));
        return out;
    }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        a.require_same(b, "add");
        std::map<Exponent, RingElement> acc;
        for (const auto& [e, c] : a.terms_) acc.emplace(e, c);
        for (const auto& [e, c] : b.terms_) accumulate(acc, e, c);
        SkewPoly out(a.ctx_);
        out.assign(std::move(acc));
        return out;
    }

    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    void require_same(const SkewPoly& other, const char* op) const {
        if (ctx_ != other.ctx_) throw MismatchError(std::string(op) + ": polynomials over different contexts");
    }

private:
    static void accumulate(std::map<Exponent, RingElement>& acc, Exponent e, RingElement c) {
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(e, std::move(c));
        else
            it->second = add(it->second, c);
    }

    void assign(std::map<Exponent, RingElement> acc) {
        terms_.clear();
        for (auto& [e, c] : acc) {
            if (!(c.ring() == ctx_->ring()))
                throw MismatchError("coefficient in " + c.ring().name() + ", context ring is " + ctx_->ring().name());
            if (!Context::kNegativeExponents && e < 0)
                throw DomainError("negative exponent " + std::to_string(e) + " in an Ore extension");
            if (!c.is_zero()) terms_.emplace_back(e, std::move(c));
        }
    }

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

using OrePoly = SkewPoly<OreContext>;
using LaurentPoly = SkewPoly<LaurentContext>;

// ---------------------------------------------------------------------------
// pi operator

/// Rows of pi: rows[k][i] = pi_i^k(s) for 0 <= i <= k <= max_m, using
/// pi_i^k = sigma o pi_(i-1)^(k-1) + delta o pi_i^(k-1) and pi_0^0 = id.
inline std::vector<std::vector<RingElement>> pi_rows(const OreContext& ctx, std::int64_t max_m, const RingElement& s) {
    std::vector<std::vector<RingElement>> rows;
    rows.push_back({s});
    const auto& ring = ctx.ring();
    for (std::int64_t k = 1; k <= max_m; ++k) {
        const auto& prev = rows.back();
        std::vector<RingElement> row;
        row.reserve(static_cast<std::size_t>(k) + 1);
        for (std::int64_t i = 0; i <= k; ++i) {
            RingElement v = zero(ring);
            if (i >= 1) v = add(v, ctx.sigma().apply(prev[static_cast<std::size_t>(i - 1)]));
            if (i <= k - 1 && !ctx.delta_is_zero()) v = add(v, ctx.delta().apply(prev[static_cast<std::size_t>(i)]));
            row.push_back(std::move(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// pi_i^m(s); zero whenever m < i.
inline RingElement pi(const OreContext& ctx, std::int64_t m, std::int64_t i, const RingElement& s) {
    if (m < 0 || i < 0) throw DomainError("pi needs m, i >= 0");
    if (!(s.ring() == ctx.ring())) throw MismatchError("pi: element outside the context ring");
    if (m < i) return zero(ctx.ring());
    return pi_rows(ctx, m, s)[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
}

// ---------------------------------------------------------------------------
// Products

inline OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
    p.require_same(q, "ore_mul");
    const auto& ctx = *p.context();
    if (p.is_zero() || q.is_zero()) return OrePoly(p.context());
    std::int64_t max_m = p.terms().back().first;
    std::vector<OrePoly::Term> out;
    for (const auto& [n, s] : q.terms()) {
        auto rows = pi_rows(ctx, max_m, s);
        for (const auto& [m, r] : p.terms()) {
            const auto& row = rows[static_cast<std::size_t>(m)];
            for (std::int64_t i = 0; i <= m; ++i) {
                const auto& v = row[static_cast<std::size_t>(i)];
                if (!v.is_zero()) out.emplace_back(i + n, mul(r, v));
            }
        }
    }
    return OrePoly(p.context(), std::move(out));
}

/// sigma^m(s) for any integer m, the inverse supplying negative powers.
inline RingElement sigma_power(const TwistMap& sigma, std::int64_t m, const RingElement& s) {
    RingElement x = s;
    for (std::int64_t k = 0; k < m; ++k) x = sigma.apply(x);
    for (std::int64_t k = 0; k < -m; ++k) x = sigma.apply_inverse(x);
    return x;
}

inline LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) {
    p.require_same(q, "laurent_mul");
    const auto& sigma = p.context()->sigma();
    std::vector<LaurentPoly::Term> out;
    for (const auto& [n, s] : q.terms()) {
        std::map<std::int64_t, RingElement> powers;
        for (const auto& [m, r] : p.terms()) {
            auto it = powers.find(m);
            if (it == powers.end()) it = powers.emplace(m, sigma_power(sigma, m, s)).first;
            out.emplace_back(m + n, mul(r, it->second));
        }
    }
    return LaurentPoly(p.context(), std::move(out));
}

inline OrePoly operator*(const OrePoly& p, const OrePoly& q) { return ore_mul(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return laurent_mul(p, q); }

template <class Context>
Degree degree(const SkewPoly<Context>& p) {
    return p.degree();
}
template <class Context>
Order order(const SkewPoly<Context>& p) {
    return p.order();
}
template <class Context>
const RingElement& leading_coefficient(const SkewPoly<Context>& p) {
    return p.leading_coefficient();
}

/// (pq)r - p(qr)
template <class Context>
SkewPoly<Context> poly_associator(const SkewPoly<Context>& p, const SkewPoly<Context>& q, const SkewPoly<Context>& r) {
    return (p * q) * r - p * (q * r);
}

// ---------------------------------------------------------------------------
// Rendering: ascending exponents, explicit '*', coefficients parenthesized
// when they have more than one term.

template <class Context>
std::vector<std::string> render_terms(const SkewPoly<Context>& p, const std::string& variable = "X") {
    std::vector<std::string> out;
    for (const auto& [e, c] : p.terms()) {
        auto coeff = render_terms(c);
        if (e == 0) {
            if (coeff.size() == 1 || c.ring().kind() == RingKind::Matrix)
                out.push_back(to_string(c));
            else
                out.insert(out.end(), coeff.begin(), coeff.end());
            continue;
        }
        std::string x = variable;
        if (e != 1) x += "^" + std::to_string(e);
        out.push_back(detail::attach(coeff, x));
    }
    return out;
}

template <class Context>
std::string to_string(const SkewPoly<Context>& p) {
    return detail::join_terms(render_terms(p));
}

// ---------------------------------------------------------------------------
// Sampling

/// Random polynomial with exponents in [lo, hi] and up to max_terms terms.
template <class Context>
SkewPoly<Context> random_poly(const std::shared_ptr<const Context>& ctx, Sampler& sampler, std::int64_t lo,
                              std::int64_t hi, int max_terms = 3) {
    std::vector<typename SkewPoly<Context>::Term> terms;
    auto count = sampler.uniform(0, max_terms);
    for (std::int64_t t = 0; t < count; ++t) terms.emplace_back(sampler.uniform(lo, hi), sampler.element(ctx->ring()));
    return SkewPoly<Context>(ctx, std::move(terms));
}

template <class Context>
SkewPoly<Context> random_nonzero_poly(const std::shared_ptr<const Context>& ctx, Sampler& sampler, std::int64_t lo,
                                      std::int64_t hi, int max_terms = 3) {
    for (;;) {
        auto p = random_poly(ctx, sampler, lo, hi, max_terms);
        if (!p.is_zero()) return p;
    }
}

// ---------------------------------------------------------------------------
// Nucleus and associativity checks

namespace detail {

template <class Context>
std::pair<std::int64_t, std::int64_t> sample_range(const Context&) {
    if constexpr (Context::kNegativeExponents)
        return {-3, 3};
    else
        return {0, 3};
}

}  // namespace detail

/// Samples (p, X^n, q) and (p, q, X^n); both must vanish.
template <class Context>
CheckReport nucleus_check_power(const std::shared_ptr<const Context>& ctx, std::int64_t n, std::size_t trials,
                                std::uint64_t seed = 1) {
    CheckReport r{.name = "nucleus(X^" + std::to_string(n) + ")", .trials = trials, .seed = seed};
    auto xn = SkewPoly<Context>::x_power(ctx, n);
    Sampler sampler(seed);
    auto [lo, hi] = detail::sample_range(*ctx);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto p = random_poly(ctx, sampler, lo, hi);
        auto q = random_poly(ctx, sampler, lo, hi);
        if (auto a = poly_associator(p, xn, q); !a.is_zero())
            r.fail("(p, X^n, q) = " + to_string(a) + " for p = " + to_string(p) + ", q = " + to_string(q));
        else if (auto b = poly_associator(p, q, xn); !b.is_zero())
            r.fail("(p, q, X^n) = " + to_string(b) + " for p = " + to_string(p) + ", q = " + to_string(q));
    }
    r.summary = r.passed ? "X^" + std::to_string(n) + " middle and right nuclear on " + std::to_string(trials) + " samples"
                         : "nuclearity violated";
    return r;
}

/// Left-slot analogue (X^n, p, q); expected to fail when sigma is not multiplicative.
template <class Context>
CheckReport nucleus_check_left(const std::shared_ptr<const Context>& ctx, std::int64_t n, std::size_t trials,
                               std::uint64_t seed = 1) {
    CheckReport r{.name = "left-nucleus(X^" + std::to_string(n) + ")", .trials = trials, .seed = seed};
    auto xn = SkewPoly<Context>::x_power(ctx, n);
    Sampler sampler(seed);
    auto [lo, hi] = detail::sample_range(*ctx);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto p = random_poly(ctx, sampler, lo, hi);
        auto q = random_poly(ctx, sampler, lo, hi);
        if (auto a = poly_associator(xn, p, q); !a.is_zero())
            r.fail("(X^n, p, q) = " + to_string(a) + " for p = " + to_string(p) + ", q = " + to_string(q));
    }
    r.summary = r.passed ? "no left-slot violation found" : "X^" + std::to_string(n) + " is not left nuclear";
    return r;
}

/// Samples associators; passed == true means every sampled associator vanished.
template <class Context>
CheckReport sample_associators(const std::shared_ptr<const Context>& ctx, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "associators(" + ctx->name() + ")", .trials = trials, .seed = seed};
    Sampler sampler(seed);
    auto [lo, hi] = detail::sample_range(*ctx);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto p = random_poly(ctx, sampler, lo, hi);
        auto q = random_poly(ctx, sampler, lo, hi);
        auto s = random_poly(ctx, sampler, lo, hi);
        if (auto a = poly_associator(p, q, s); !a.is_zero())
            r.fail("(" + to_string(p) + ", " + to_string(q) + ", " + to_string(s) + ") = " + to_string(a));
    }
    r.summary = r.passed ? "all " + std::to_string(trials) + " sampled associators vanish" : "nonzero associator found";
    return r;
}

// ---------------------------------------------------------------------------
// Normal forms

/// p = sum_i X^i r_i, listed with ascending exponents. Needs a preimage for sigma.
inline std::vector<std::pair<std::int64_t, RingElement>> left_normal_form(const OrePoly& p) {
    const auto& ctx = p.context();
    if (!ctx->sigma().has_preimage()) throw DomainError("left normal form needs a preimage for " + ctx->sigma().name());
    std::vector<std::pair<std::int64_t, RingElement>> out;
    OrePoly rest = p;
    while (!rest.is_zero()) {
        auto n = rest.degree().value();
        auto r = ctx->sigma().apply_power(-static_cast<int>(n), rest.leading_coefficient());
        auto term = ore_mul(OrePoly::x_power(ctx, n), OrePoly::constant(ctx, r));
        OrePoly next = rest - term;
        if (!(next.degree() < rest.degree())) throw DomainError("preimage chooser did not cancel the leading term");
        rest = std::move(next);
        out.emplace_back(n, std::move(r));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

/// sum_i X^i r_i
inline OrePoly from_left_normal_form(const OreContextPtr& ctx, std::span<const std::pair<std::int64_t, RingElement>> form) {
    OrePoly out(ctx);
    for (const auto& [e, r] : form) out = out + ore_mul(OrePoly::x_power(ctx, e), OrePoly::constant(ctx, r));
    return out;
}

struct PolynomialPart {
    LaurentPoly poly;   // p X^-m, least exponent 0
    std::int64_t shift;  // m = order(p)
};

/// p = (p X^-m) X^m with m the order of p.
inline PolynomialPart polynomial_part(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("polynomial part of zero");
    auto m = p.order().value();
    return {laurent_mul(p, LaurentPoly::x_power(p.context(), -m)), m};
}

// ---------------------------------------------------------------------------
// Right division

struct ReductionStep {
    std::size_t generator = 0;
    std::int64_t shift = 0;                // degree shift n - deg(g)
    std::vector<RingElement> multipliers;  // s_1, s_2, ...: replayed as ((g (s_1 X^shift)) s_2) ...
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    OrePoly remainder;
};

/// Greedy highest-degree cancellation by right multiples of the generators.
/// Each step picks the first generator g with deg g = d <= n = deg p and
/// subtracts g (s X^(n-d)) with s a sigma^d-preimage of c^-1 r.
inline ReductionTrace right_divide(const OrePoly& p, std::span<const OrePoly> gens) {
    const auto& ctx = p.context();
    const auto& ring = ctx->ring();
    if (!ring.is_associative_division())
        throw DomainError("right division needs an associative division ring, got " + ring.name());
    if (!ctx->sigma().has_preimage()) throw DomainError("right division needs an invertible sigma");
    if (gens.empty()) throw DomainError("right division needs at least one generator");
    Degree min_degree = Degree::infinity();
    for (const auto& g : gens) {
        p.require_same(g, "right_divide");
        if (g.is_zero()) throw DomainError("zero generator");
        if (min_degree.is_infinite() || g.degree() < min_degree) min_degree = g.degree();
    }
    ReductionTrace trace{{}, p};
    auto& rest = trace.remainder;
    while (!rest.is_zero() && rest.degree() >= min_degree) {
        auto n = rest.degree().value();
        std::size_t pick = 0;
        while (gens[pick].degree().value() > n) ++pick;
        const auto& g = gens[pick];
        auto d = g.degree().value();
        auto target = mul(inverse(g.leading_coefficient()), rest.leading_coefficient());
        auto s = ctx->sigma().apply_power(-static_cast<int>(d), target);
        auto contribution = ore_mul(g, OrePoly::monomial(ctx, s, n - d));
        OrePoly next = rest - contribution;
        if (!(next.degree() < rest.degree())) throw DomainError("right division failed to cancel the leading term");
        rest = std::move(next);
        trace.steps.push_back({pick, n - d, {std::move(s)}});
    }
    return trace;
}

/// sum over steps of ((g (s_1 X^shift)) s_2) ..., plus the remainder.
inline OrePoly replay(const ReductionTrace& trace, std::span<const OrePoly> gens) {
    OrePoly out = trace.remainder;
    const auto& ctx = out.context();
    for (const auto& step : trace.steps) {
        if (step.generator >= gens.size() || step.multipliers.empty()) throw DomainError("malformed reduction step");
        OrePoly acc = ore_mul(gens[step.generator], OrePoly::monomial(ctx, step.multipliers.front(), step.shift));
        for (std::size_t k = 1; k < step.multipliers.size(); ++k)
            acc = ore_mul(acc, OrePoly::constant(ctx, step.multipliers[k]));
        out = out + acc;
    }
    return out;
}

}  // namespace skewring
