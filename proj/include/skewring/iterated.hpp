#pragma once

// Iterated skew Laurent rings R[X_1^+-, ..., X_n^+-; sigma_1, ..., sigma_n]
// with pairwise commuting twists, stored flat:
//
//   (r X^u)(s X^v) = (r sigma_1^u1(sigma_2^u2(... sigma_n^un(s)))) X^(u+v)

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "maps.hpp"
#include "sampling.hpp"
#include "skewpoly.hpp"

namespace skewring {

class IteratedLaurentContext {
public:
    /// Each sigma must be invertible, additive and respect 1; every pair is
    /// sampled for commutation on `trials` elements.
    static std::shared_ptr<const IteratedLaurentContext> make(std::vector<TwistMap> sigmas, std::size_t trials = 100) {
        return std::shared_ptr<const IteratedLaurentContext>(new IteratedLaurentContext(std::move(sigmas), trials));
    }

    const RingDescriptor& ring() const noexcept { return sigmas_.front().domain(); }
    const std::vector<TwistMap>& sigmas() const noexcept { return sigmas_; }
    std::size_t variables() const noexcept { return sigmas_.size(); }

    std::string name() const {
        std::string xs, ss;
        for (std::size_t k = 0; k < sigmas_.size(); ++k) {
            if (k) {
                xs += ", ";
                ss += ", ";
            }
            xs += "X" + std::to_string(k + 1) + "^+-";
            ss += sigmas_[k].name();
        }
        return ring().name() + "[" + xs + "; " + ss + "]";
    }

private:
    IteratedLaurentContext(std::vector<TwistMap> sigmas, std::size_t trials) : sigmas_(std::move(sigmas)) {
        if (sigmas_.empty()) throw DomainError("iterated Laurent ring needs at least one variable");
        for (const auto& s : sigmas_) {
            if (!(s.domain() == ring())) throw MismatchError("twists act on different rings");
            if (!s.has_inverse()) throw DomainError("twist " + s.name() + " has no inverse");
            if (!s.has_claim(Claim::Additive) || !s.has_claim(Claim::RespectsOne))
                throw DomainError("twist " + s.name() + " must be declared additive and respecting 1");
            if (!verify_unit_behavior(s).passed) throw DomainError(s.name() + "(1) != 1");
        }
        for (std::size_t a = 0; a < sigmas_.size(); ++a)
            for (std::size_t b = a + 1; b < sigmas_.size(); ++b) {
                auto r = verify_commute(sigmas_[a], sigmas_[b], trials, 1 + a * sigmas_.size() + b);
                if (!r.passed)
                    throw DomainError(sigmas_[a].name() + " and " + sigmas_[b].name() + " do not commute: " +
                                      r.witnesses.front());
            }
    }

    std::vector<TwistMap> sigmas_;
};

using IteratedLaurentContextPtr = std::shared_ptr<const IteratedLaurentContext>;

class MultiLaurentPoly {
public:
    using Exponents = std::vector<std::int64_t>;

    explicit MultiLaurentPoly(IteratedLaurentContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw DomainError("null context");
    }

    MultiLaurentPoly(IteratedLaurentContextPtr ctx, std::vector<std::pair<Exponents, RingElement>> terms)
        : MultiLaurentPoly(std::move(ctx)) {
        for (auto& [e, c] : terms) add_term(std::move(e), std::move(c));
    }

    static MultiLaurentPoly monomial(IteratedLaurentContextPtr ctx, RingElement c, Exponents e) {
        MultiLaurentPoly p(std::move(ctx));
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    static MultiLaurentPoly constant(IteratedLaurentContextPtr ctx, RingElement c) {
        Exponents e(ctx->variables(), 0);
        return monomial(std::move(ctx), std::move(c), std::move(e));
    }

    /// X_k^e, variables numbered from 1.
    static MultiLaurentPoly variable(IteratedLaurentContextPtr ctx, std::size_t k, std::int64_t e = 1) {
        if (k < 1 || k > ctx->variables()) throw DomainError("no variable X" + std::to_string(k));
        Exponents u(ctx->variables(), 0);
        u[k - 1] = e;
        auto c = skewring::one(ctx->ring());
        return monomial(std::move(ctx), std::move(c), std::move(u));
    }

    static MultiLaurentPoly one(IteratedLaurentContextPtr ctx) {
        auto c = skewring::one(ctx->ring());
        return constant(std::move(ctx), std::move(c));
    }

    const IteratedLaurentContextPtr& context() const noexcept { return ctx_; }
    const std::map<Exponents, RingElement>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    MultiLaurentPoly operator-() const {
        MultiLaurentPoly out(ctx_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, neg(c));
        return out;
    }

    friend MultiLaurentPoly operator+(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
        a.require_same(b, "add");
        MultiLaurentPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend MultiLaurentPoly operator-(const MultiLaurentPoly& a, const MultiLaurentPoly& b) { return a + (-b); }

    friend MultiLaurentPoly operator*(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
        a.require_same(b, "iterated_mul");
        const auto& sigmas = a.ctx_->sigmas();
        MultiLaurentPoly out(a.ctx_);
        for (const auto& [v, s] : b.terms_) {
            std::map<Exponents, RingElement> twisted;
            for (const auto& [u, r] : a.terms_) {
                auto it = twisted.find(u);
                if (it == twisted.end()) {
                    RingElement x = s;
                    for (std::size_t k = sigmas.size(); k-- > 0;) x = sigma_power(sigmas[k], u[k], x);
                    it = twisted.emplace(u, std::move(x)).first;
                }
                Exponents w(u.size());
                for (std::size_t k = 0; k < w.size(); ++k) w[k] = u[k] + v[k];
                out.add_term(std::move(w), mul(r, it->second));
            }
        }
        return out;
    }

    friend bool operator==(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    void require_same(const MultiLaurentPoly& other, const char* op) const {
        if (ctx_ != other.ctx_) throw MismatchError(std::string(op) + ": polynomials over different contexts");
    }

private:
    void add_term(Exponents e, RingElement c) {
        if (e.size() != ctx_->variables())
            throw DomainError("exponent vector of length " + std::to_string(e.size()) + " for " +
                              std::to_string(ctx_->variables()) + " variables");
        if (!(c.ring() == ctx_->ring())) throw MismatchError("coefficient outside " + ctx_->ring().name());
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(e), std::move(c));
            return;
        }
        it->second = add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }

    IteratedLaurentContextPtr ctx_;
    std::map<Exponents, RingElement> terms_;
};

inline MultiLaurentPoly iterated_mul(const MultiLaurentPoly& p, const MultiLaurentPoly& q) { return p * q; }

/// Terms in lexicographic exponent order, e.g. "Y*X1 - 2*X1^-1*X2^3".
inline std::string to_string(const MultiLaurentPoly& p) {
    std::vector<std::string> out;
    for (const auto& [e, c] : p.terms()) {
        std::string xs;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!xs.empty()) xs += "*";
            xs += "X" + std::to_string(k + 1);
            if (e[k] != 1) xs += "^" + std::to_string(e[k]);
        }
        auto coeff = render_terms(c);
        if (xs.empty())
            out.insert(out.end(), coeff.begin(), coeff.end());
        else
            out.push_back(detail::attach(coeff, xs));
    }
    return detail::join_terms(out);
}

inline MultiLaurentPoly random_multi_poly(const IteratedLaurentContextPtr& ctx, Sampler& sampler, std::int64_t lo,
                                          std::int64_t hi, int max_terms = 3) {
    std::vector<std::pair<MultiLaurentPoly::Exponents, RingElement>> terms;
    auto count = sampler.uniform(0, max_terms);
    for (std::int64_t t = 0; t < count; ++t) {
        MultiLaurentPoly::Exponents e(ctx->variables());
        for (auto& x : e) x = sampler.uniform(lo, hi);
        terms.emplace_back(std::move(e), sampler.element(ctx->ring()));
    }
    return MultiLaurentPoly(ctx, std::move(terms));
}

}  // namespace skewring
