#pragma once

// Named property suites behind `check <suite>`. Every suite is seeded and
// deterministic; a report passes when no check found a violation.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "../maps.hpp"
#include "../noetherian_lab.hpp"
#include "../report.hpp"
#include "session.hpp"

namespace skewring::cli {

struct SuiteOptions {
    std::size_t trials = 0;  // 0 picks the suite default
    std::uint64_t seed = 1;
    std::optional<std::int64_t> n;   // nucleus: largest |n|
    std::optional<std::uint32_t> m;  // counterexample: a single generator degree
};

struct SuiteReport {
    std::string suite;
    std::string context;
    std::vector<CheckReport> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ring-axioms",           "map-claims",         "nucleus",
                                                "associativity-dichotomy", "division-roundtrip", "series-precision",
                                                "counterexample"};
    return names;
}

// ---------------------------------------------------------------------------
// Helpers shared by several suites

/// delta(rs) = sigma(r) delta(s) + delta(r) s on sampled pairs.
inline CheckReport verify_sigma_derivation(const TwistMap& sigma, const TwistMap& delta, std::size_t trials,
                                           std::uint64_t seed = 1) {
    CheckReport r{.name = "sigma-derivation(" + delta.name() + ", " + sigma.name() + ")", .trials = trials, .seed = seed};
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto a = sampler.element(sigma.domain());
        auto b = sampler.element(sigma.domain());
        auto lhs = delta.apply(a * b);
        auto rhs = sigma.apply(a) * delta.apply(b) + delta.apply(a) * b;
        if (!(lhs == rhs)) r.fail("r = " + to_string(a) + ", s = " + to_string(b));
    }
    r.summary = r.passed ? "Leibniz rule holds on " + std::to_string(trials) + " samples" : "Leibniz rule fails";
    return r;
}

/// Small structured elements of a ring: basis units, variables, matrix units.
inline std::vector<RingElement> ring_probes(const RingDescriptor& ring, std::size_t limit = 7) {
    std::vector<RingElement> out;
    switch (ring.kind()) {
        case RingKind::Rationals: break;
        case RingKind::Poly1:
        case RingKind::Poly2:
            out.push_back(monomial(ring, {1, 0}));
            if (ring.kind() == RingKind::Poly2) out.push_back(monomial(ring, {0, 1}));
            break;
        case RingKind::CayleyDickson:
            for (unsigned idx = 1; idx < (1u << ring.level()); ++idx) out.push_back(cd_basis(ring, idx));
            if (ring.level() == 0)
                for (const auto& b : ring_probes(ring.base(), limit)) out.push_back(embed(ring, b));
            break;
        case RingKind::JordanPlus:
            for (const auto& b : ring_probes(ring.base(), limit)) out.push_back(embed(ring, b));
            break;
        case RingKind::Matrix: {
            unsigned n = ring.size();
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    auto cells = RingElement::Components(std::size_t(n) * n, zero(ring.base()));
                    cells[i * n + j] = one(ring.base());
                    out.emplace_back(ring, std::move(cells));
                }
            for (const auto& b : ring_probes(ring.base(), 2)) out.push_back(embed(ring, b));
            break;
        }
    }
    if (out.size() > limit) out.resize(limit);
    return out;
}

/// Candidates for associator probes: the indeterminates first, then ring probes.
inline std::vector<std::pair<std::string, Value>> structure_probes(const Session& s) {
    std::vector<std::pair<std::string, Value>> out;
    for (std::size_t k = 1; k <= s.variables(); ++k) {
        std::string x = s.iterated() ? "X" + std::to_string(k) : "X";
        out.emplace_back(x, s.x_power(k, 1));
        if (s.lexicon().negative_exponents) out.emplace_back(x + "^-1", s.x_power(k, -1));
    }
    for (const auto& c : ring_probes(s.ring())) out.emplace_back(to_string(c), s.lift(c));
    return out;
}

inline std::string wrap_value(const std::string& text) {
    return text.find(" + ") == std::string::npos && text.find(" - ") == std::string::npos ? text : "(" + text + ")";
}

// ---------------------------------------------------------------------------
// Suites

inline SuiteReport ring_axioms_suite(const Session& s, const SuiteOptions& o) {
    SuiteReport rep{"ring-axioms", s.name(), {}};
    std::size_t trials = o.trials ? o.trials : 200;
    const auto& R = s.ring();
    Sampler sampler(o.seed);

    CheckReport additive{.name = "additive-group(" + R.name() + ")", .trials = trials, .seed = o.seed};
    CheckReport distributive{.name = "distributive(" + R.name() + ")", .trials = trials, .seed = o.seed};
    CheckReport unit{.name = "unit(" + R.name() + ")", .trials = trials, .seed = o.seed};
    auto zero_r = zero(R), one_r = one(R);
    for (std::size_t t = 0; t < trials; ++t) {
        auto a = sampler.element(R), b = sampler.element(R), c = sampler.element(R);
        auto triple = "a = " + to_string(a) + ", b = " + to_string(b) + ", c = " + to_string(c);
        if (additive.passed && !(a + b == b + a && (a + b) + c == a + (b + c) && a + (-a) == zero_r && a + zero_r == a))
            additive.fail(triple);
        if (distributive.passed && !(a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c))
            distributive.fail(triple);
        if (unit.passed && !(one_r * a == a && a * one_r == a)) unit.fail("a = " + to_string(a));
    }
    additive.summary = additive.passed ? "abelian group laws hold on samples" : "additive law violated";
    distributive.summary = distributive.passed ? "both distributive laws hold on samples" : "distributivity violated";
    unit.summary = unit.passed ? "1 is a two-sided unit on samples" : "1 is not a unit";

    // The declared associativity must match what sampling finds.
    CheckReport assoc{.name = "associativity(" + R.name() + ")", .trials = trials, .seed = o.seed};
    std::optional<std::string> witness;
    auto probes = ring_probes(R);
    for (const auto& a : probes)
        for (const auto& b : probes)
            for (const auto& c : probes)
                if (!witness && !associator(a, b, c).is_zero())
                    witness = "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ") = " +
                              to_string(associator(a, b, c));
    for (std::size_t t = 0; t < trials && !witness; ++t) {
        auto a = sampler.element(R), b = sampler.element(R), c = sampler.element(R);
        if (auto x = associator(a, b, c); !x.is_zero())
            witness = "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ") = " + to_string(x);
    }
    if (R.is_associative()) {
        if (witness) assoc.fail(*witness);
        assoc.summary = witness ? "declared associative, associator found" : "declared associative; no associator found";
    } else {
        if (!witness) assoc.fail("no nonzero associator found");
        else assoc.witnesses.push_back(*witness);
        assoc.summary = witness ? "declared non-associative; witness found" : "declared non-associative, none found";
    }

    // The same laws one level up.
    CheckReport lifted{.name = "distributive-and-unit(" + s.name() + ")", .trials = trials, .seed = o.seed};
    auto one_s = s.lift(one_r);
    for (std::size_t t = 0; t < trials && lifted.passed; ++t) {
        auto p = s.random(sampler), q = s.random(sampler), w = s.random(sampler);
        bool ok = Session::agree(Session::mul(p, Session::add(q, w)), Session::add(Session::mul(p, q), Session::mul(p, w))) &&
                  Session::agree(Session::mul(Session::add(p, q), w), Session::add(Session::mul(p, w), Session::mul(q, w))) &&
                  Session::agree(Session::mul(one_s, p), p) && Session::agree(Session::mul(p, one_s), p);
        if (!ok) lifted.fail("p = " + to_string(p) + ", q = " + to_string(q) + ", r = " + to_string(w));
    }
    lifted.summary = lifted.passed ? "distributivity and unit hold on samples" : "ring law violated";

    rep.checks = {additive, distributive, unit, assoc, lifted};
    return rep;
}

inline SuiteReport map_claims_suite(const Session& s, const SuiteOptions& o) {
    SuiteReport rep{"map-claims", s.name(), {}};
    std::size_t trials = o.trials ? o.trials : 200;
    std::vector<TwistMap> maps;
    const auto& cfg = s.config();
    if (cfg.sigma) maps.push_back(*cfg.sigma);
    if (cfg.delta) maps.push_back(*cfg.delta);
    maps.insert(maps.end(), cfg.sigmas.begin(), cfg.sigmas.end());
    for (const auto& m : maps) {
        auto reports = verify_claims(m, trials, o.seed);
        rep.checks.insert(rep.checks.end(), reports.begin(), reports.end());
    }
    return rep;
}

inline SuiteReport nucleus_suite(const Session& s, const SuiteOptions& o) {
    SuiteReport rep{"nucleus", s.name(), {}};
    std::size_t trials = o.trials ? o.trials : 200;
    bool both_signs = s.lexicon().negative_exponents;
    std::int64_t top = o.n.value_or(both_signs ? 3 : 4);
    if (top < 0) throw DomainError("--n must be nonnegative");
    for (std::size_t k = 1; k <= s.variables(); ++k) {
        std::string x = s.iterated() ? "X" + std::to_string(k) : "X";
        for (std::int64_t n = both_signs ? -top : 0; n <= top; ++n) {
            CheckReport r{.name = "nucleus(" + x + "^" + std::to_string(n) + ")", .trials = trials, .seed = o.seed};
            auto xn = s.x_power(k, n);
            Sampler sampler(o.seed);
            for (std::size_t t = 0; t < trials && r.passed; ++t) {
                auto p = s.random(sampler), q = s.random(sampler);
                if (auto a = Session::associator(p, xn, q); !Session::is_zero(a))
                    r.fail("(p, " + x + "^n, q) = " + to_string(a) + " for p = " + to_string(p) + ", q = " + to_string(q));
                else if (auto b = Session::associator(p, q, xn); !Session::is_zero(b))
                    r.fail("(p, q, " + x + "^n) = " + to_string(b) + " for p = " + to_string(p) + ", q = " + to_string(q));
            }
            r.summary = r.passed ? "middle and right nuclear on " + std::to_string(trials) + " samples"
                                 : "nuclearity violated";
            rep.checks.push_back(std::move(r));
        }
    }
    return rep;
}

/// The structure is associative exactly when the ring is, every twist is
/// multiplicative and the derivation (if any) obeys the twisted Leibniz rule.
/// The suite predicts from those facts, then searches for an associator; it
/// passes when search and prediction agree.
inline SuiteReport associativity_dichotomy_suite(const Session& s, const SuiteOptions& o) {
    SuiteReport rep{"associativity-dichotomy", s.name(), {}};
    std::size_t trials = o.trials ? o.trials : 500;
    const auto& cfg = s.config();

    std::vector<std::string> reasons;
    if (!s.ring().is_associative()) reasons.push_back(s.ring().name() + " is not associative");
    std::vector<TwistMap> twists = cfg.sigmas;
    if (cfg.sigma) twists.push_back(*cfg.sigma);
    for (const auto& m : twists)
        if (auto r = verify_multiplicative(m, 200, o.seed); !r.passed)
            reasons.push_back(m.name() + " is not multiplicative: " + r.witnesses.front());
    if (s.ore() && !s.ore()->delta_is_zero())
        if (auto r = verify_sigma_derivation(s.ore()->sigma(), s.ore()->delta(), 200, o.seed); !r.passed)
            reasons.push_back(s.ore()->delta().name() + " is not a sigma-derivation: " + r.witnesses.front());
    bool predicted = reasons.empty();

    std::optional<std::string> witness;
    std::size_t probed = 0;
    auto probes = structure_probes(s);
    for (const auto& [na, a] : probes)
        for (const auto& [nb, b] : probes)
            for (const auto& [nc, c] : probes) {
                if (witness) break;
                ++probed;
                auto x = Session::associator(a, b, c);
                if (!Session::is_zero(x))
                    witness = "(" + wrap_value(na) + ", " + wrap_value(nb) + ", " + wrap_value(nc) + ") = " + to_string(x);
            }
    Sampler sampler(o.seed);
    std::size_t sampled = 0;
    for (; sampled < trials && !witness; ++sampled) {
        auto p = s.random(sampler), q = s.random(sampler), w = s.random(sampler);
        auto x = Session::associator(p, q, w);
        if (!Session::is_zero(x))
            witness = "(" + to_string(p) + ", " + to_string(q) + ", " + to_string(w) + ") = " + to_string(x);
    }

    CheckReport r{.name = "associativity-dichotomy", .trials = probed + sampled, .seed = o.seed};
    if (predicted) {
        if (witness) r.fail(*witness);
        r.summary = witness ? "predicted associative, but an associator is nonzero"
                            : "predicted associative; " + std::to_string(probed) + " probe triples and " +
                                  std::to_string(sampled) + " sampled associators vanish";
    } else {
        std::string why;
        for (const auto& reason : reasons) why += (why.empty() ? "" : "; ") + reason;
        if (witness) r.witnesses.push_back(*witness);
        else r.fail("no nonzero associator found");
        r.summary = std::string(witness ? "predicted non-associative and confirmed" : "predicted non-associative, no witness") +
                    " (" + why + ")";
    }
    rep.checks.push_back(std::move(r));
    return rep;
}

inline SuiteReport division_roundtrip_suite(const Session& s, const SuiteOptions& o) {
    SuiteReport rep{"division-roundtrip", s.name(), {}};
    std::size_t trials = o.trials ? o.trials : 100;
    OreContextPtr ctx = s.ore();
    if (!ctx) {
        if (!s.config().sigma) throw DomainError("division-roundtrip needs a single twist");
        ctx = OreContext::make(*s.config().sigma);
    }
    if (!ctx->ring().is_associative_division())
        throw DomainError("division-roundtrip needs an associative division ring, got " + ctx->ring().name());
    if (!ctx->sigma().has_preimage()) throw DomainError("division-roundtrip needs an invertible twist");

    CheckReport r{.name = "right-division(" + ctx->name() + ")", .trials = trials, .seed = o.seed};
    Sampler sampler(o.seed);
    std::size_t steps = 0;
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto p = random_poly(ctx, sampler, 0, 5, 4);
        std::vector<OrePoly> gens;
        auto count = sampler.uniform(1, 3);
        for (std::int64_t g = 0; g < count; ++g) gens.push_back(random_nonzero_poly(ctx, sampler, 0, 3));
        auto trace = right_divide(p, gens);
        steps += trace.steps.size();
        Degree min_degree = gens.front().degree();
        for (const auto& g : gens) min_degree = std::min(min_degree, g.degree());
        std::string instance = "p = " + to_string(p) + ", generators:";
        for (const auto& g : gens) instance += " " + wrap_value(to_string(g));
        if (!trace.remainder.is_zero() && !(trace.remainder.degree() < min_degree))
            r.fail("remainder " + to_string(trace.remainder) + " too large for " + instance);
        else if (!(replay(trace, gens) == p))
            r.fail("replay " + to_string(replay(trace, gens)) + " differs for " + instance);
    }
    r.summary = r.passed ? std::to_string(trials) + " traces replayed exactly (" + std::to_string(steps) + " steps)"
                         : "division trace is unsound";
    rep.checks.push_back(std::move(r));
    return rep;
}

inline SuiteReport series_precision_suite(const Session& s, const SuiteOptions& o) {
    SuiteReport rep{"series-precision", s.name(), {}};
    if (!s.is_series()) throw DomainError("series-precision needs a series structure");
    std::size_t trials = o.trials ? o.trials : 50;
    const auto& ctx = s.series();
    const auto& R = ctx->ring();
    auto N = s.precision();

    CheckReport tele{.name = "telescoping(N = " + std::to_string(N) + ")", .trials = 1, .seed = o.seed};
    std::vector<std::pair<std::int64_t, RingElement>> geometric;
    for (std::int64_t e = 0; e < N; ++e) geometric.emplace_back(e, one(R));
    std::vector<std::pair<std::int64_t, RingElement>> one_minus_x{{0, one(R)}, {1, from_rational(R, -1)}};
    auto product = TruncatedSeries::from_terms(ctx, one_minus_x, N) * TruncatedSeries::from_terms(ctx, geometric, N);
    if (!(product == TruncatedSeries::one(ctx, N))) tele.fail("(1 - X) * sum X^k = " + to_string(product));
    tele.summary = "(1 - X) * (1 + X + ... + X^" + std::to_string(N - 1) + ") = " + to_string(product);

    // Truncated products agree with exact polynomial products below the tracked precision.
    CheckReport sound{.name = "agrees-with-polynomials", .trials = trials, .seed = o.seed};
    Sampler sampler(o.seed);
    auto check_against = [&](const auto& pctx, std::int64_t lo) {
        for (std::size_t t = 0; t < trials && sound.passed; ++t) {
            auto p = random_poly(pctx, sampler, lo, N - 1);
            auto q = random_poly(pctx, sampler, lo, N - 1);
            auto prod = TruncatedSeries::from_poly(ctx, p, N) * TruncatedSeries::from_poly(ctx, q, N);
            auto exact = TruncatedSeries::from_poly(ctx, p * q, prod.precision());
            if (!(prod == exact)) sound.fail("p = " + to_string(p) + ", q = " + to_string(q));
        }
    };
    if (ctx->kind() == SeriesKind::Power)
        check_against(OreContext::make(ctx->sigma()), 0);
    else
        check_against(LaurentContext::make(ctx->sigma()), -2);
    sound.summary = sound.passed ? "truncated products match exact products" : "truncated product is wrong";

    CheckReport reduce{.name = "reduce-and-replay", .trials = trials, .seed = o.seed};
    if (!R.is_associative_division() || !ctx->sigma().has_preimage()) {
        reduce.trials = 0;
        reduce.summary = "not applicable: needs an associative division ring and an invertible twist";
    } else {
        for (std::size_t t = 0; t < trials && reduce.passed; ++t) {
            auto q = random_series(ctx, sampler, N, 5);
            std::vector<TruncatedSeries> gens;
            for (int g = 0; g < 2; ++g) {
                auto x = random_series(ctx, sampler, N, 3);
                gens.push_back(series_order(x) ? x : TruncatedSeries::one(ctx, N));
            }
            auto result = series_reduce(q, gens);
            TruncatedSeries rest = q;
            for (const auto& step : result.steps) {
                auto before = series_order(rest);
                rest = rest - series_mul_term(gens[step.generator], step.multiplier, step.shift);
                auto after = series_order(rest);
                if (before && after && *after <= *before) reduce.fail("order did not increase for q = " + to_string(q));
            }
            auto back = replay(result, gens);
            if (!(back == q.truncate(back.precision()))) reduce.fail("replay differs for q = " + to_string(q));
        }
        reduce.summary = reduce.passed ? "orders strictly increase and replay reconstructs the input"
                                       : "reduction is unsound";
    }
    rep.checks = {tele, sound, reduce};
    return rep;
}

inline SuiteReport counterexample_suite(const SuiteOptions& o, const std::string& context = "") {
    SuiteReport rep{"counterexample", context, {}};
    rep.checks.push_back(sigma_j_image_check(200, 12, o.seed));
    std::vector<std::uint32_t> ms = o.m ? std::vector<std::uint32_t>{*o.m} : std::vector<std::uint32_t>{1, 2, 3};
    for (auto m : ms) {
        CounterexampleConfig cfg{.m = m, .trials = o.trials ? o.trials : 500, .multiplier_degree = 4,
                                 .coefficient_degree = 4, .seed = o.seed};
        auto w = counterexample_witness(cfg);
        CheckReport r{.name = "counterexample(m = " + std::to_string(m) + ")", .trials = w.trials_run, .seed = cfg.seed};
        for (const auto& v : w.violations) r.fail(v.product + ": " + v.coefficient);
        if (!w.y_outside_y2) r.fail("Y lies in (Y^2)");
        r.summary = w.conclusion() + "; " + std::to_string(w.products_checked) + " products, " +
                    std::to_string(w.high_terms_checked) + " high-degree terms in (Y^2)";
        rep.checks.push_back(std::move(r));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Output

inline nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["summary"] = r.summary;
    j["witnesses"] = r.witnesses;
    return j;
}

inline nlohmann::ordered_json to_json(const SuiteReport& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["context"] = rep.context;
    j["passed"] = rep.passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) j["checks"].push_back(to_json(c));
    return j;
}

/// One line per check, witnesses indented below, then a verdict line.
inline std::string to_text(const SuiteReport& rep) {
    std::string out;
    for (const auto& c : rep.checks) {
        out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name + ": " + c.summary + " (trials " +
               std::to_string(c.trials) + ", seed " + std::to_string(c.seed) + ")\n";
        for (const auto& w : c.witnesses) out += "    witness: " + w + "\n";
    }
    out += rep.suite + (rep.context.empty() ? "" : " on " + rep.context) + ": " + (rep.passed() ? "PASS" : "FAIL") + "\n";
    return out;
}

inline SuiteReport run_suite(const Session& s, const std::string& name, const SuiteOptions& o) {
    if (name == "ring-axioms") return ring_axioms_suite(s, o);
    if (name == "map-claims") return map_claims_suite(s, o);
    if (name == "nucleus") return nucleus_suite(s, o);
    if (name == "associativity-dichotomy") return associativity_dichotomy_suite(s, o);
    if (name == "division-roundtrip") return division_roundtrip_suite(s, o);
    if (name == "series-precision") return series_precision_suite(s, o);
    if (name == "counterexample") return counterexample_suite(o, s.name());
    throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace skewring::cli
