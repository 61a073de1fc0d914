#pragma once

// Additive self-maps of coefficient rings (twists sigma and derivations delta)
// with optional exact inverses and declared structural claims.

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "rings.hpp"
#include "sampling.hpp"

namespace skewring {

enum class MapKind {
    Identity,
    Zero,
    SigmaQComplex,
    Conjugation,
    QuantumTorusSigma,
    FormalDerivative,
    CoefficientDoubler,
    CounterexampleSigma,
    ExponentFold,
    Transpose,
    Power,
    Composition,
    AdHoc,
};

enum class Claim : unsigned {
    Additive = 1u << 0,
    RespectsOne = 1u << 1,
    AnnihilatesOne = 1u << 2,
    Multiplicative = 1u << 3,
    Injective = 1u << 4,
    Surjective = 1u << 5,
};

class ClaimSet {
public:
    constexpr ClaimSet() = default;
    constexpr ClaimSet(std::initializer_list<Claim> claims) {
        for (Claim c : claims) bits_ |= static_cast<unsigned>(c);
    }
    constexpr bool has(Claim c) const { return (bits_ & static_cast<unsigned>(c)) != 0; }
    constexpr void set(Claim c, bool on = true) {
        if (on)
            bits_ |= static_cast<unsigned>(c);
        else
            bits_ &= ~static_cast<unsigned>(c);
    }
    constexpr unsigned bits() const { return bits_; }
    friend constexpr bool operator==(ClaimSet, ClaimSet) = default;

private:
    unsigned bits_ = 0;
};

inline constexpr Claim kAllClaims[] = {Claim::Additive,       Claim::RespectsOne, Claim::AnnihilatesOne,
                                       Claim::Multiplicative, Claim::Injective,   Claim::Surjective};

inline const char* claim_name(Claim c) {
    switch (c) {
        case Claim::Additive: return "additive";
        case Claim::RespectsOne: return "respects_one";
        case Claim::AnnihilatesOne: return "annihilates_one";
        case Claim::Multiplicative: return "multiplicative";
        case Claim::Injective: return "injective";
        case Claim::Surjective: return "surjective";
    }
    return "?";
}

// The frozen bijections of the non-left-Noetherian counterexample on Q[Y,Z]:
//   f : {1,3,5,...} -> {1,2,3,...},   f(j) = (j+1)/2
//   g : {2,4,6,...} -> {1,3,5,...} x N,  g(2k) = (2a+1, b) where (a,b) = unpair(k-1)
// with the Cantor pairing pair(a,b) = (a+b)(a+b+1)/2 + b.
namespace counterexample {

inline std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) { return (a + b) * (a + b + 1) / 2 + b; }

inline std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
    // largest w with w(w+1)/2 <= z
    std::uint64_t w = 0;
    while ((w + 1) * (w + 2) / 2 <= z) ++w;
    std::uint64_t b = z - w * (w + 1) / 2;
    return {w - b, b};
}

inline std::uint64_t f(std::uint64_t odd_j) { return (odd_j + 1) / 2; }

inline std::pair<std::uint64_t, std::uint64_t> g(std::uint64_t even_j) {
    auto [a, b] = cantor_unpair(even_j / 2 - 1);
    return {2 * a + 1, b};
}

inline std::uint32_t narrow(std::uint64_t v) {
    if (v > std::numeric_limits<std::uint32_t>::max()) throw DomainError("exponent overflow in counterexample map");
    return static_cast<std::uint32_t>(v);
}

/// sigma on a monomial Y^a Z^b.
inline Monomial sigma(Monomial m) {
    auto [a, b] = m;
    if (a == 0 && b == 0) return m;
    if (a > 0) return {narrow(2ull * a), b};
    if (b % 2 == 1) return {0, narrow(f(b))};
    auto [ga, gb] = g(b);
    return {narrow(ga), narrow(gb)};
}

/// Exact inverse of sigma on monomials.
inline Monomial sigma_inverse(Monomial m) {
    auto [a, b] = m;
    if (a == 0 && b == 0) return m;
    if (a == 0) return {0, narrow(2ull * b - 1)};
    if (a % 2 == 0) return {a / 2, b};
    std::uint64_t k = cantor_pair((a - 1) / 2, b) + 1;
    return {0, narrow(2 * k)};
}

}  // namespace counterexample

class TwistMap {
public:
    using Function = std::function<RingElement(const RingElement&)>;

    static TwistMap identity(RingDescriptor ring) {
        return make(MapKind::Identity, std::move(ring), "id",
                    {Claim::Additive, Claim::RespectsOne, Claim::Multiplicative, Claim::Injective, Claim::Surjective});
    }

    static TwistMap zero(RingDescriptor ring) {
        return make(MapKind::Zero, std::move(ring), "0", {Claim::Additive, Claim::AnnihilatesOne, Claim::Multiplicative});
    }

    /// a + bi -> a + q b i on the complexes over Q.
    static TwistMap sigma_q_complex(Rational q) {
        if (q.is_zero()) throw DomainError("sigma_q needs q != 0");
        ClaimSet claims{Claim::Additive, Claim::RespectsOne, Claim::Injective, Claim::Surjective};
        claims.set(Claim::Multiplicative, q == 1 || q == -1);
        auto m = make(MapKind::SigmaQComplex, RingDescriptor::complexes(), "sigma_" + q.str(), claims);
        m.node_->q = std::move(q);
        return m;
    }

    /// Cayley-Dickson conjugation, also acting on a Jordan plus-algebra over a
    /// Cayley-Dickson ring (where it is an automorphism).
    static TwistMap conjugation(RingDescriptor ring) {
        bool jordan = ring.kind() == RingKind::JordanPlus && ring.base().kind() == RingKind::CayleyDickson;
        if (ring.kind() != RingKind::CayleyDickson && ring.kind() != RingKind::Rationals && !jordan)
            throw DomainError("conjugation is not defined on " + ring.name());
        ClaimSet claims{Claim::Additive, Claim::RespectsOne, Claim::Injective, Claim::Surjective};
        claims.set(Claim::Multiplicative, jordan || ring.is_commutative());
        return make(MapKind::Conjugation, std::move(ring), "conj", claims);
    }

    /// Y^n -> q^n Y^n on Q[Y].
    static TwistMap quantum_torus_sigma(RingDescriptor ring, Rational q) {
        require_kind(ring, RingKind::Poly1, "quantum_torus_sigma");
        if (q.is_zero()) throw DomainError("quantum torus sigma needs a unit q");
        auto m = make(MapKind::QuantumTorusSigma, std::move(ring), "qtorus_" + q.str(),
                      {Claim::Additive, Claim::RespectsOne, Claim::Multiplicative, Claim::Injective, Claim::Surjective});
        m.node_->q = std::move(q);
        return m;
    }

    /// d/dY on Q[Y].
    static TwistMap formal_derivative(RingDescriptor ring) {
        require_kind(ring, RingKind::Poly1, "formal_derivative");
        std::string name = "d/d" + ring.variables()[0];
        return make(MapKind::FormalDerivative, std::move(ring), std::move(name), {Claim::Additive, Claim::AnnihilatesOne});
    }

    /// Doubles the coefficient of Y in Q[Y], leaves the others alone.
    static TwistMap coefficient_doubler(RingDescriptor ring) {
        require_kind(ring, RingKind::Poly1, "coefficient_doubler");
        return make(MapKind::CoefficientDoubler, std::move(ring), "double_Y",
                    {Claim::Additive, Claim::RespectsOne, Claim::Injective, Claim::Surjective});
    }

    /// The monomial bijection of Q[Y,Z] sending (Y) into (Y^2).
    static TwistMap counterexample_sigma(RingDescriptor ring = RingDescriptor::poly2()) {
        require_kind(ring, RingKind::Poly2, "counterexample_sigma");
        return make(MapKind::CounterexampleSigma, std::move(ring), "sigma_cx",
                    {Claim::Additive, Claim::RespectsOne, Claim::Injective, Claim::Surjective});
    }

    /// Y^n -> Y^ceil(n/2) on Q[Y]: surjective, not injective. Preimages are
    /// chosen as Y^m -> Y^(2m).
    static TwistMap exponent_fold(RingDescriptor ring) {
        require_kind(ring, RingKind::Poly1, "exponent_fold");
        return make(MapKind::ExponentFold, std::move(ring), "fold", {Claim::Additive, Claim::RespectsOne, Claim::Surjective});
    }

    static TwistMap transpose(RingDescriptor ring) {
        require_kind(ring, RingKind::Matrix, "transpose");
        ClaimSet claims{Claim::Additive, Claim::RespectsOne, Claim::Injective, Claim::Surjective};
        claims.set(Claim::Multiplicative, ring.is_commutative());
        return make(MapKind::Transpose, std::move(ring), "transpose", claims);
    }

    /// m^e; negative e uses the bundled inverse.
    static TwistMap power(const TwistMap& base, int e) {
        if (e < 0 && !base.has_inverse()) throw DomainError("negative power of " + base.name() + " without an inverse");
        ClaimSet in = base.claims();
        ClaimSet claims;
        claims.set(Claim::Additive, in.has(Claim::Additive) || e == 0);
        claims.set(Claim::RespectsOne, in.has(Claim::RespectsOne) || e == 0);
        claims.set(Claim::AnnihilatesOne, in.has(Claim::AnnihilatesOne) && e > 0);
        claims.set(Claim::Multiplicative, in.has(Claim::Multiplicative) || e == 0);
        claims.set(Claim::Injective, in.has(Claim::Injective) || e == 0);
        claims.set(Claim::Surjective, in.has(Claim::Surjective) || e == 0);
        auto m = make(MapKind::Power, base.domain(), "(" + base.name() + ")^" + std::to_string(e), claims);
        m.node_->parts = {base};
        m.node_->exponent = e;
        return m;
    }

    /// maps[0] o maps[1] o ... (the last map is applied first).
    static TwistMap composition(std::vector<TwistMap> maps) {
        if (maps.empty()) throw DomainError("empty composition");
        for (const auto& m : maps)
            if (!(m.domain() == maps.front().domain())) throw MismatchError("composition of maps on different rings");
        ClaimSet claims;
        bool all_additive = true;
        for (Claim c : {Claim::Additive, Claim::RespectsOne, Claim::Multiplicative, Claim::Injective, Claim::Surjective}) {
            bool all = true;
            for (const auto& m : maps) all = all && m.has_claim(c);
            claims.set(c, all);
        }
        // g(1) = 0 survives every additive map applied after g.
        for (const auto& m : maps) {
            if (m.has_claim(Claim::AnnihilatesOne) && all_additive) claims.set(Claim::AnnihilatesOne);
            all_additive = all_additive && m.has_claim(Claim::Additive);
        }
        std::string name;
        for (const auto& m : maps) name += (name.empty() ? "" : " o ") + m.name();
        auto out = make(MapKind::Composition, maps.front().domain(), name, claims);
        out.node_->parts = std::move(maps);
        return out;
    }

    /// A map given by code, for experiments and tests. Not constructible from
    /// configuration files.
    static TwistMap adhoc(std::string name, RingDescriptor ring, Function f, ClaimSet claims, Function inverse = {}) {
        auto m = make(MapKind::AdHoc, std::move(ring), std::move(name), claims);
        m.node_->function = std::move(f);
        m.node_->inverse = std::move(inverse);
        return m;
    }

    MapKind kind() const noexcept { return node_->kind; }
    const RingDescriptor& domain() const noexcept { return node_->domain; }
    const std::string& name() const noexcept { return node_->name; }
    ClaimSet claims() const noexcept { return node_->claims; }
    bool has_claim(Claim c) const noexcept { return node_->claims.has(c); }
    const Rational& q() const noexcept { return node_->q; }
    int exponent() const noexcept { return node_->exponent; }
    const std::vector<TwistMap>& parts() const noexcept { return node_->parts; }

    /// An exact two-sided inverse is bundled.
    bool has_inverse() const {
        switch (kind()) {
            case MapKind::Zero:
            case MapKind::FormalDerivative:
            case MapKind::ExponentFold: return false;
            case MapKind::Power: return exponent() == 0 || parts()[0].has_inverse();
            case MapKind::Composition:
                for (const auto& m : parts())
                    if (!m.has_inverse()) return false;
                return true;
            case MapKind::AdHoc: return static_cast<bool>(node_->inverse);
            default: return true;
        }
    }

    /// Some right inverse (preimage chooser) is available: apply(preimage(a)) = a.
    bool has_preimage() const {
        if (has_inverse()) return true;
        switch (kind()) {
            case MapKind::ExponentFold: return true;
            case MapKind::Power: return exponent() >= 0 && parts()[0].has_preimage();
            case MapKind::Composition:
                for (const auto& m : parts())
                    if (!m.has_preimage()) return false;
                return true;
            default: return false;
        }
    }

    RingElement apply(const RingElement& a) const {
        check_domain(a);
        switch (kind()) {
            case MapKind::Identity: return a;
            case MapKind::Zero: return skewring::zero(domain());
            case MapKind::SigmaQComplex: {
                auto c = cd_coordinates(a);
                c[1] = scale(q(), c[1]);
                return from_cd_coordinates(domain(), c);
            }
            case MapKind::Conjugation: return conjugate_any(a);
            case MapKind::QuantumTorusSigma:
                return map_terms(a, [&](Monomial m, const Rational& c) { return std::pair{m, c * rational_pow(q(), m[0])}; });
            case MapKind::FormalDerivative: {
                PolyTerms out;
                for (const auto& [m, c] : a.terms())
                    if (m[0] > 0) out[Monomial{m[0] - 1, 0}] += c * Rational(m[0]);
                return RingElement(domain(), std::move(out));
            }
            case MapKind::CoefficientDoubler:
                return map_terms(a, [](Monomial m, const Rational& c) { return std::pair{m, m[0] == 1 ? c * 2 : c}; });
            case MapKind::CounterexampleSigma:
                return map_terms(a, [](Monomial m, const Rational& c) { return std::pair{counterexample::sigma(m), c}; });
            case MapKind::ExponentFold:
                return map_terms(a, [](Monomial m, const Rational& c) { return std::pair{Monomial{(m[0] + 1) / 2, 0}, c}; });
            case MapKind::Transpose: return transpose_cells(a);
            case MapKind::Power: {
                RingElement x = a;
                int e = exponent();
                for (int n = 0; n < (e < 0 ? -e : e); ++n) x = e < 0 ? parts()[0].apply_inverse(x) : parts()[0].apply(x);
                return x;
            }
            case MapKind::Composition: {
                RingElement x = a;
                for (auto it = parts().rbegin(); it != parts().rend(); ++it) x = it->apply(x);
                return x;
            }
            case MapKind::AdHoc: return node_->function(a);
        }
        throw DomainError("unknown map kind");
    }

    RingElement apply_inverse(const RingElement& a) const {
        check_domain(a);
        if (!has_inverse()) throw DomainError(name() + " has no inverse");
        switch (kind()) {
            case MapKind::Identity: return a;
            case MapKind::SigmaQComplex: {
                auto c = cd_coordinates(a);
                c[1] = scale(q().inverse(), c[1]);
                return from_cd_coordinates(domain(), c);
            }
            case MapKind::Conjugation:
            case MapKind::Transpose: return apply(a);
            case MapKind::QuantumTorusSigma:
                return map_terms(a, [&](Monomial m, const Rational& c) {
                    return std::pair{m, c * rational_pow(q().inverse(), m[0])};
                });
            case MapKind::CoefficientDoubler:
                return map_terms(a, [](Monomial m, const Rational& c) { return std::pair{m, m[0] == 1 ? c / 2 : c}; });
            case MapKind::CounterexampleSigma:
                return map_terms(a, [](Monomial m, const Rational& c) {
                    return std::pair{counterexample::sigma_inverse(m), c};
                });
            case MapKind::Power: return power(parts()[0], -exponent()).apply(a);
            case MapKind::Composition: {
                RingElement x = a;
                for (const auto& m : parts()) x = m.apply_inverse(x);
                return x;
            }
            case MapKind::AdHoc: return node_->inverse(a);
            default: break;
        }
        throw DomainError(name() + " has no inverse");
    }

    /// Some element mapping to a: the inverse when bundled, else the chooser.
    RingElement preimage(const RingElement& a) const {
        if (has_inverse()) return apply_inverse(a);
        check_domain(a);
        switch (kind()) {
            case MapKind::ExponentFold:
                return map_terms(a, [](Monomial m, const Rational& c) { return std::pair{Monomial{2 * m[0], 0}, c}; });
            case MapKind::Power: {
                if (exponent() < 0 || !parts()[0].has_preimage()) break;
                RingElement x = a;
                for (int n = 0; n < exponent(); ++n) x = parts()[0].preimage(x);
                return x;
            }
            case MapKind::Composition: {
                if (!has_preimage()) break;
                RingElement x = a;
                for (const auto& m : parts()) x = m.preimage(x);
                return x;
            }
            default: break;
        }
        throw DomainError(name() + " has no preimage chooser");
    }

    /// m^e(a) for any integer e (negative powers through preimage()).
    RingElement apply_power(int e, const RingElement& a) const {
        RingElement x = a;
        for (int n = 0; n < e; ++n) x = apply(x);
        for (int n = 0; n < -e; ++n) x = preimage(x);
        return x;
    }

private:
    struct Node {
        MapKind kind = MapKind::Identity;
        RingDescriptor domain;
        std::string name;
        ClaimSet claims;
        Rational q{1};
        int exponent = 1;
        std::vector<TwistMap> parts;
        Function function;
        Function inverse;
    };

    explicit TwistMap(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    static TwistMap make(MapKind kind, RingDescriptor ring, std::string name, ClaimSet claims) {
        auto node = std::make_shared<Node>();
        node->kind = kind;
        node->domain = std::move(ring);
        node->name = std::move(name);
        node->claims = claims;
        return TwistMap(std::move(node));
    }

    static void require_kind(const RingDescriptor& ring, RingKind kind, const char* what) {
        if (ring.kind() != kind) throw DomainError(std::string(what) + " is not defined on " + ring.name());
    }

    void check_domain(const RingElement& a) const {
        if (!(a.ring() == domain()))
            throw MismatchError(name() + " acts on " + domain().name() + ", got an element of " + a.ring().name());
    }

    static Rational rational_pow(const Rational& q, std::uint32_t e) {
        Rational out(1);
        for (std::uint32_t n = 0; n < e; ++n) out *= q;
        return out;
    }

    template <class F>
    RingElement map_terms(const RingElement& a, F f) const {
        PolyTerms out;
        for (const auto& [m, c] : a.terms()) {
            auto [image, coeff] = f(m, c);
            out[image] += coeff;
        }
        return RingElement(domain(), std::move(out));
    }

    RingElement conjugate_any(const RingElement& a) const {
        if (a.ring().kind() == RingKind::JordanPlus)
            return RingElement(a.ring(), RingElement::Components{conjugate(a.components()[0])});
        return conjugate(a);
    }

    RingElement transpose_cells(const RingElement& a) const {
        unsigned n = domain().size();
        const auto& cells = a.components();
        RingElement::Components out(cells.size());
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) out[j * n + i] = cells[i * n + j];
        return RingElement(domain(), std::move(out));
    }

    // Node is shared between copies and never mutated after construction
    // completes inside the static factories.
    std::shared_ptr<Node> node_;
};

inline RingElement apply(const TwistMap& m, const RingElement& a) { return m.apply(a); }
inline RingElement apply_inverse(const TwistMap& m, const RingElement& a) { return m.apply_inverse(a); }

// ---------------------------------------------------------------------------
// Sampling verifiers. These falsify claims; they never prove them.

inline CheckReport verify_additive(const TwistMap& m, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "additive(" + m.name() + ")", .trials = trials, .seed = seed};
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto a = sampler.element(m.domain());
        auto b = sampler.element(m.domain());
        if (!(m.apply(a + b) == m.apply(a) + m.apply(b)))
            r.fail("a = " + to_string(a) + ", b = " + to_string(b));
    }
    r.summary = r.passed ? "no violation found in " + std::to_string(trials) + " trials"
                         : "map(a + b) != map(a) + map(b)";
    return r;
}

inline CheckReport verify_unit_behavior(const TwistMap& m) {
    CheckReport r{.name = "unit(" + m.name() + ")", .trials = 1};
    auto image = m.apply(one(m.domain()));
    if (m.has_claim(Claim::RespectsOne)) {
        if (!(image == one(m.domain()))) r.fail("map(1) = " + to_string(image));
        r.summary = r.passed ? "map(1) = 1" : "map(1) != 1";
    } else if (m.has_claim(Claim::AnnihilatesOne)) {
        if (!image.is_zero()) r.fail("map(1) = " + to_string(image));
        r.summary = r.passed ? "map(1) = 0" : "map(1) != 0";
    } else {
        r.summary = "no unit claim declared; map(1) = " + to_string(image);
    }
    return r;
}

inline CheckReport verify_multiplicative(const TwistMap& m, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "multiplicative(" + m.name() + ")", .trials = trials, .seed = seed};
    const auto& ring = m.domain();
    // Structured probes first so that small violations are reported readably.
    std::vector<RingElement> probes{one(ring)};
    if (ring.kind() == RingKind::CayleyDickson)
        for (unsigned i = 1; i < (1u << ring.level()); ++i) probes.push_back(cd_basis(ring, i));
    if (ring.kind() == RingKind::Poly1 || ring.kind() == RingKind::Poly2) probes.push_back(monomial(ring, {1, 0}));
    for (const auto& a : probes)
        for (const auto& b : probes)
            if (r.passed && !(m.apply(a * b) == m.apply(a) * m.apply(b)))
                r.fail("a = " + to_string(a) + ", b = " + to_string(b) + ": map(ab) = " + to_string(m.apply(a * b)) +
                       ", map(a)map(b) = " + to_string(m.apply(a) * m.apply(b)));
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto a = sampler.element(ring);
        auto b = sampler.element(ring);
        if (!(m.apply(a * b) == m.apply(a) * m.apply(b)))
            r.fail("a = " + to_string(a) + ", b = " + to_string(b) + ": map(ab) = " + to_string(m.apply(a * b)) +
                   ", map(a)map(b) = " + to_string(m.apply(a) * m.apply(b)));
    }
    r.summary = r.passed ? "no violation found in " + std::to_string(trials) + " trials"
                         : "map(ab) != map(a)map(b)";
    return r;
}

/// Injectivity: apply_inverse(apply(a)) = a when an inverse exists, otherwise
/// a search for colliding sampled pairs.
inline CheckReport verify_injective(const TwistMap& m, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "injective(" + m.name() + ")", .trials = trials, .seed = seed};
    Sampler sampler(seed);
    std::vector<std::pair<RingElement, RingElement>> seen;
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto a = sampler.element(m.domain());
        auto image = m.apply(a);
        if (m.has_inverse()) {
            if (!(m.apply_inverse(image) == a)) r.fail("inverse(map(a)) != a for a = " + to_string(a));
            continue;
        }
        for (const auto& [b, image_b] : seen)
            if (image == image_b && !(a == b)) {
                r.fail("map(" + to_string(a) + ") = map(" + to_string(b) + ")");
                break;
            }
        seen.emplace_back(a, image);
    }
    r.summary = r.passed ? "no violation found in " + std::to_string(trials) + " trials" : "not injective";
    return r;
}

/// Surjectivity witnessed by the preimage chooser: apply(preimage(b)) = b.
inline CheckReport verify_surjective(const TwistMap& m, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "surjective(" + m.name() + ")", .trials = trials, .seed = seed};
    if (!m.has_preimage()) {
        r.fail("no preimage chooser available");
        r.summary = "cannot witness surjectivity";
        return r;
    }
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto b = sampler.element(m.domain());
        if (!(m.apply(m.preimage(b)) == b)) r.fail("map(preimage(b)) != b for b = " + to_string(b));
    }
    r.summary = r.passed ? "no violation found in " + std::to_string(trials) + " trials" : "preimage chooser failed";
    return r;
}

/// Inverse round trips: apply(apply_inverse(a)) = a = apply_inverse(apply(a)).
inline CheckReport verify_inverse(const TwistMap& m, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "inverse(" + m.name() + ")", .trials = trials, .seed = seed};
    if (!m.has_inverse()) {
        r.fail("no inverse bundled");
        return r;
    }
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto a = sampler.element(m.domain());
        if (!(m.apply(m.apply_inverse(a)) == a) || !(m.apply_inverse(m.apply(a)) == a))
            r.fail("round trip fails for a = " + to_string(a));
    }
    r.summary = r.passed ? "round trips exact in " + std::to_string(trials) + " trials" : "round trip failed";
    return r;
}

/// Runs the verifier of every declared claim.
inline std::vector<CheckReport> verify_claims(const TwistMap& m, std::size_t trials, std::uint64_t seed = 1) {
    std::vector<CheckReport> out;
    if (m.has_claim(Claim::Additive)) out.push_back(verify_additive(m, trials, seed));
    if (m.has_claim(Claim::RespectsOne) || m.has_claim(Claim::AnnihilatesOne)) out.push_back(verify_unit_behavior(m));
    if (m.has_claim(Claim::Multiplicative)) out.push_back(verify_multiplicative(m, trials, seed));
    if (m.has_claim(Claim::Injective)) out.push_back(verify_injective(m, trials, seed));
    if (m.has_claim(Claim::Surjective)) out.push_back(verify_surjective(m, trials, seed));
    if (m.has_inverse()) out.push_back(verify_inverse(m, trials, seed));
    return out;
}

/// a(b(x)) = b(a(x)) on sampled x.
inline CheckReport verify_commute(const TwistMap& a, const TwistMap& b, std::size_t trials, std::uint64_t seed = 1) {
    CheckReport r{.name = "commute(" + a.name() + ", " + b.name() + ")", .trials = trials, .seed = seed};
    if (!(a.domain() == b.domain())) throw MismatchError("maps act on different rings");
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
        auto x = sampler.element(a.domain());
        if (!(a.apply(b.apply(x)) == b.apply(a.apply(x)))) r.fail("x = " + to_string(x));
    }
    r.summary = r.passed ? "no violation found in " + std::to_string(trials) + " trials" : "maps do not commute";
    return r;
}

}  // namespace skewring
