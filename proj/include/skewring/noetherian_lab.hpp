#pragma once

// Desk-scale experiments around Hilbert-basis arguments for skew rings:
// leading-coefficient extraction, and a sampled corroboration that the left
// ideal I = {sum r_i X^i : r_i in (Y)} of T = Q[Y,Z][X; sigma, 0] is not
// finitely generated, with sigma the monomial bijection from maps.hpp.
//
// Everything here corroborates at finite bounds; nothing proves.

#include <algorithm>
#include <cstdint>
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

/// Leading coefficients of the generators, first occurrence order, duplicates removed.
inline std::vector<RingElement> leading_coeff_ideal(std::span<const OrePoly> gens) {
    if (gens.empty()) throw DomainError("leading_coeff_ideal needs at least one generator");
    std::vector<RingElement> out;
    for (const auto& g : gens) {
        if (g.is_zero()) throw DomainError("zero polynomial among the generators");
        const auto& c = g.leading_coefficient();
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
}

struct CounterexampleConfig {
    std::uint32_t m = 2;                    // max X-degree of the sampled generators
    std::size_t trials = 500;
    std::uint32_t multiplier_degree = 3;    // max X-degree of left multipliers; 0 gives a vacuous run
    std::uint32_t coefficient_degree = 3;   // max exponent of Y and of Z in sampled coefficients
    std::uint64_t seed = 42;

    void validate() const {
        if (m < 1) throw ConfigError("counterexample m must be at least 1");
        if (trials < 1) throw ConfigError("counterexample trials must be at least 1");
        if (coefficient_degree < 1) throw ConfigError("coefficient degree bound must be at least 1");
    }
};

struct Violation {
    std::string product;
    std::string coefficient;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct WitnessReport {
    CounterexampleConfig config;
    std::size_t trials_run = 0;
    std::size_t products_checked = 0;
    std::size_t high_terms_checked = 0;  // terms of degree >= m + 1 tested for membership in (Y^2)
    std::vector<Violation> violations;   // sorted
    bool y_outside_y2 = false;

    bool vacuous() const noexcept { return high_terms_checked == 0; }
    bool corroborated() const noexcept { return violations.empty() && y_outside_y2; }

    std::string conclusion() const {
        if (!corroborated()) return violations.empty() ? "refuted: Y lies in (Y^2)" : "refuted: violation found";
        return vacuous() ? "corroborated vacuously (no term reached degree m+1)" : "corroborated at these bounds";
    }
};

namespace detail {

inline OrePoly sample_T(const OreContextPtr& T, Sampler& sampler, std::uint32_t max_degree, bool in_I) {
    std::vector<OrePoly::Term> terms;
    auto count = sampler.uniform(1, 3);
    const auto Y = monomial(T->ring(), {1, 0});
    for (std::int64_t t = 0; t < count; ++t) {
        auto c = sampler.nonzero_element(T->ring());
        if (in_I) c = mul(Y, c);
        terms.emplace_back(sampler.uniform(0, max_degree), std::move(c));
    }
    return OrePoly(T, std::move(terms));
}

}  // namespace detail

/// Samples generators p in I of degree <= m and left multipliers of degree
/// <= multiplier_degree; forms s p, t1 (t2 p), (t1 t2) p and their sum; every
/// coefficient of X^k with k >= m + 1 must lie in (Y^2).
inline WitnessReport counterexample_witness(const CounterexampleConfig& cfg) {
    cfg.validate();
    WitnessReport report{.config = cfg};
    const auto T = OreContext::make(TwistMap::counterexample_sigma());
    const auto& R = T->ring();
    const std::vector<RingElement> y2{monomial(R, {2, 0})};
    report.y_outside_y2 = !monomial_ideal_member(monomial(R, {1, 0}), y2);

    SampleBounds bounds;
    bounds.poly_degree = cfg.coefficient_degree;
    bounds.zero_percent = 0;
    Sampler sampler(cfg.seed, bounds);

    auto check = [&](const std::string& label, const OrePoly& product) {
        ++report.products_checked;
        for (const auto& [e, c] : product.terms()) {
            if (e < static_cast<std::int64_t>(cfg.m) + 1) continue;
            ++report.high_terms_checked;
            if (!monomial_ideal_member(c, y2))
                report.violations.push_back({label + " at X^" + std::to_string(e), to_string(c)});
        }
    };

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto p = detail::sample_T(T, sampler, cfg.m, true);
        auto q = detail::sample_T(T, sampler, cfg.m, true);
        auto s = detail::sample_T(T, sampler, cfg.multiplier_degree, false);
        auto t1 = detail::sample_T(T, sampler, cfg.multiplier_degree, false);
        auto t2 = detail::sample_T(T, sampler, cfg.multiplier_degree, false);

        auto sp = s * p;
        auto nested_right = t1 * (t2 * q);
        auto nested_left = (t1 * t2) * p;
        auto describe = [&](const char* shape) {
            return std::string(shape) + " with s = " + to_string(s) + ", t1 = " + to_string(t1) +
                   ", t2 = " + to_string(t2) + ", p = " + to_string(p) + ", q = " + to_string(q);
        };
        check(describe("s*p"), sp);
        check(describe("t1*(t2*q)"), nested_right);
        check(describe("(t1*t2)*p"), nested_left);
        check(describe("s*p + t1*(t2*q) + (t1*t2)*p"), sp + nested_right + nested_left);
        ++report.trials_run;
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

/// Exhaustive over Y^a Z^b with 1 <= a <= bound, 0 <= b <= bound, plus
/// `samples` random elements Y h: sigma maps each into (Y^2).
inline CheckReport sigma_j_image_check(std::size_t samples, std::uint32_t bound, std::uint64_t seed = 1) {
    auto sigma = TwistMap::counterexample_sigma();
    const auto& R = sigma.domain();
    const std::vector<RingElement> y2{monomial(R, {2, 0})};
    CheckReport r{.name = "sigma-j-image", .seed = seed};
    for (std::uint32_t a = 1; a <= bound; ++a)
        for (std::uint32_t b = 0; b <= bound; ++b) {
            auto x = monomial(R, {a, b});
            ++r.trials;
            auto image = sigma.apply(x);
            if (!monomial_ideal_member(image, y2)) r.fail("sigma(" + to_string(x) + ") = " + to_string(image));
        }
    std::size_t exhaustive = r.trials;
    Sampler sampler(seed);
    const auto Y = monomial(R, {1, 0});
    for (std::size_t t = 0; t < samples; ++t) {
        auto x = mul(Y, sampler.element(R));
        ++r.trials;
        auto image = sigma.apply(x);
        if (!monomial_ideal_member(image, y2)) r.fail("sigma(" + to_string(x) + ") = " + to_string(image));
    }
    r.summary = std::to_string(exhaustive) + " monomials up to exponent " + std::to_string(bound) + " and " +
                std::to_string(samples) + " sampled elements of (Y) " +
                (r.passed ? "map into (Y^2)" : "include a violation");
    return r;
}

}  // namespace skewring
