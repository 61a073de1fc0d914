#pragma once

#include <cstdint>
#include <random>

#include "rings.hpp"

namespace skewring {

/// Bounds for random ring elements. Kept small so that products stay exact
/// and cheap at desk scale.
struct SampleBounds {
    int numerator = 5;        // |numerator| <= numerator
    int denominator = 3;      // 1 <= denominator <= denominator
    unsigned poly_degree = 3;  // per-variable exponent bound
    unsigned poly_terms = 3;
    int zero_percent = 20;     // chance that a coordinate is forced to zero
};

/// Deterministic sampler. Draws are derived from mt19937_64 output with plain
/// modular reduction, so a seed reproduces the same stream on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, SampleBounds bounds = {}) : engine_(seed), bounds_(bounds) {}

    std::uint64_t seed_draw() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    bool chance(int percent) { return uniform(0, 99) < percent; }

    Rational rational() {
        return Rational(BigInt(uniform(-bounds_.numerator, bounds_.numerator)),
                        BigInt(uniform(1, bounds_.denominator)));
    }

    Rational nonzero_rational() {
        Rational q;
        while (q.is_zero()) q = rational();
        return q;
    }

    const SampleBounds& bounds() const noexcept { return bounds_; }
    SampleBounds& bounds() noexcept { return bounds_; }

    RingElement element(const RingDescriptor& ring) {
        switch (ring.kind()) {
            case RingKind::Rationals: return RingElement(ring, rational());
            case RingKind::Poly1:
            case RingKind::Poly2: {
                PolyTerms t;
                auto count = uniform(0, bounds_.poly_terms);
                for (std::int64_t n = 0; n < count; ++n) {
                    Monomial m{static_cast<std::uint32_t>(uniform(0, bounds_.poly_degree)), 0};
                    if (ring.kind() == RingKind::Poly2) m[1] = static_cast<std::uint32_t>(uniform(0, bounds_.poly_degree));
                    t[m] += nonzero_rational();
                }
                return RingElement(ring, std::move(t));
            }
            case RingKind::CayleyDickson: {
                std::vector<RingElement> coords;
                for (unsigned i = 0; i < (1u << ring.level()); ++i)
                    coords.push_back(chance(bounds_.zero_percent) ? zero(ring.base()) : element(ring.base()));
                return from_cd_coordinates(ring, coords);
            }
            case RingKind::JordanPlus:
                return RingElement(ring, RingElement::Components{element(ring.base())});
            case RingKind::Matrix: {
                RingElement::Components cells;
                for (unsigned i = 0; i < ring.size() * ring.size(); ++i)
                    cells.push_back(chance(bounds_.zero_percent) ? zero(ring.base()) : element(ring.base()));
                return RingElement(ring, std::move(cells));
            }
        }
        throw DomainError("unknown ring kind");
    }

    RingElement nonzero_element(const RingDescriptor& ring) {
        for (;;) {
            auto e = element(ring);
            if (!e.is_zero()) return e;
        }
    }

private:
    std::mt19937_64 engine_;
    SampleBounds bounds_;
};

}  // namespace skewring
