#pragma once

// Exact coefficient rings over the rationals: Cayley-Dickson levels, Jordan
// plus-algebras, polynomial rings in one or two variables and square matrices.
// Rings are described at runtime by a RingDescriptor tree; elements carry
// their descriptor and are compared structurally after canonicalization.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace skewring {

enum class RingKind { Rationals, CayleyDickson, JordanPlus, Poly1, Poly2, Matrix };

inline constexpr unsigned kMaxCayleyDicksonLevel = 4;

class RingDescriptor {
public:
    /// The rationals.
    RingDescriptor() : node_(rationals_node()) {}

    static RingDescriptor rationals() { return {}; }

    /// Level 0 is the base itself, 1 the complexes, 2 quaternions,
    /// 3 octonions, 4 sedenions. The base must be commutative with trivial
    /// conjugation (rationals or a polynomial ring).
    static RingDescriptor cayley_dickson(unsigned level, RingDescriptor base = {}) {
        if (level > kMaxCayleyDicksonLevel)
            throw DomainError("Cayley-Dickson level " + std::to_string(level) + " exceeds 4");
        if (base.kind() != RingKind::Rationals && base.kind() != RingKind::Poly1 &&
            base.kind() != RingKind::Poly2)
            throw DomainError("Cayley-Dickson base must be the rationals or a polynomial ring");
        auto node = std::make_shared<Node>();
        node->kind = RingKind::CayleyDickson;
        node->level = level;
        node->base = {base};
        if (level > 0) node->lower = {cayley_dickson(level - 1, base)};
        return RingDescriptor(std::move(node));
    }

    static RingDescriptor complexes() { return cayley_dickson(1); }
    static RingDescriptor quaternions() { return cayley_dickson(2); }
    static RingDescriptor octonions() { return cayley_dickson(3); }
    static RingDescriptor sedenions() { return cayley_dickson(4); }

    /// A^+ with product {a,b} = (ab + ba)/2; A must be associative.
    static RingDescriptor jordan_plus(RingDescriptor base) {
        if (!base.is_associative())
            throw DomainError("Jordan plus-algebra requires an associative base, got " + base.name());
        auto node = std::make_shared<Node>();
        node->kind = RingKind::JordanPlus;
        node->base = {std::move(base)};
        return RingDescriptor(std::move(node));
    }

    static RingDescriptor poly1(std::string var = "Y") {
        auto node = std::make_shared<Node>();
        node->kind = RingKind::Poly1;
        node->vars = {std::move(var)};
        return RingDescriptor(std::move(node));
    }

    static RingDescriptor poly2(std::string first = "Y", std::string second = "Z") {
        if (first == second) throw DomainError("polynomial variables must be distinct");
        auto node = std::make_shared<Node>();
        node->kind = RingKind::Poly2;
        node->vars = {std::move(first), std::move(second)};
        return RingDescriptor(std::move(node));
    }

    static RingDescriptor matrix(unsigned n, RingDescriptor base = {}) {
        if (n == 0) throw DomainError("matrix size must be at least 1");
        auto node = std::make_shared<Node>();
        node->kind = RingKind::Matrix;
        node->size = n;
        node->base = {std::move(base)};
        return RingDescriptor(std::move(node));
    }

    RingKind kind() const noexcept { return node_->kind; }
    unsigned level() const noexcept { return node_->level; }
    unsigned size() const noexcept { return node_->size; }
    /// Base ring of CayleyDickson / JordanPlus / Matrix.
    const RingDescriptor& base() const {
        if (node_->base.empty()) throw DomainError(name() + " has no base ring");
        return node_->base.front();
    }
    /// CayleyDickson level - 1 (same base).
    const RingDescriptor& lower() const {
        if (node_->lower.empty()) throw DomainError(name() + " has no lower Cayley-Dickson level");
        return node_->lower.front();
    }
    const std::vector<std::string>& variables() const noexcept { return node_->vars; }

    bool is_associative() const {
        switch (kind()) {
            case RingKind::Rationals:
            case RingKind::Poly1:
            case RingKind::Poly2: return true;
            case RingKind::CayleyDickson: return level() <= 2;
            case RingKind::JordanPlus: return base().is_commutative();
            case RingKind::Matrix: return base().is_associative();
        }
        return false;
    }

    bool is_commutative() const {
        switch (kind()) {
            case RingKind::Rationals:
            case RingKind::Poly1:
            case RingKind::Poly2:
            case RingKind::JordanPlus: return true;
            case RingKind::CayleyDickson: return level() <= 1;
            case RingKind::Matrix: return size() == 1 && base().is_commutative();
        }
        return false;
    }

    /// Every nonzero element has a two-sided inverse computed by inverse().
    bool is_division() const {
        if (kind() == RingKind::Rationals) return true;
        return kind() == RingKind::CayleyDickson && level() <= 3 &&
               base().kind() == RingKind::Rationals;
    }

    /// Associative division ring: the rationals, complexes or quaternions over Q.
    bool is_associative_division() const { return is_division() && is_associative(); }

    std::string name() const {
        switch (kind()) {
            case RingKind::Rationals: return "Q";
            case RingKind::CayleyDickson: {
                static constexpr const char* names[] = {"", "C", "H", "O", "S"};
                if (level() == 0) return "CD0(" + base().name() + ")";
                if (base().kind() == RingKind::Rationals) return std::string(names[level()]) + "_Q";
                return std::string("CD") + std::to_string(level()) + "(" + base().name() + ")";
            }
            case RingKind::JordanPlus: return base().name() + "^+";
            case RingKind::Poly1: return "Q[" + variables()[0] + "]";
            case RingKind::Poly2: return "Q[" + variables()[0] + "," + variables()[1] + "]";
            case RingKind::Matrix:
                return "M" + std::to_string(size()) + "(" + base().name() + ")";
        }
        return "?";
    }

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        if (a.node_ == b.node_) return true;
        const Node& x = *a.node_;
        const Node& y = *b.node_;
        if (x.kind != y.kind || x.level != y.level || x.size != y.size || x.vars != y.vars)
            return false;
        return x.base == y.base;
    }

private:
    struct Node {
        RingKind kind = RingKind::Rationals;
        unsigned level = 0;
        unsigned size = 0;
        std::vector<std::string> vars;
        // zero or one entry each
        std::vector<RingDescriptor> base;
        std::vector<RingDescriptor> lower;
    };

    explicit RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static std::shared_ptr<const Node> rationals_node() {
        static const auto node = std::make_shared<const Node>();
        return node;
    }

    std::shared_ptr<const Node> node_;
};

/// Exponents (first variable, second variable); Poly1 keeps the second at 0.
using Monomial = std::array<std::uint32_t, 2>;
using PolyTerms = std::map<Monomial, Rational>;

class RingElement {
public:
    using Components = std::vector<RingElement>;
    using Value = std::variant<Rational, Components, PolyTerms>;

    /// Zero of the rationals.
    RingElement() = default;

    RingElement(RingDescriptor ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {
        canonicalize();
    }

    const RingDescriptor& ring() const noexcept { return ring_; }
    const Value& value() const noexcept { return value_; }

    const Rational& rational() const {
        if (auto* q = std::get_if<Rational>(&value_)) return *q;
        throw DomainError("element of " + ring_.name() + " is not a rational");
    }
    const Components& components() const {
        if (auto* c = std::get_if<Components>(&value_)) return *c;
        throw DomainError("element of " + ring_.name() + " has no components");
    }
    const PolyTerms& terms() const {
        if (auto* t = std::get_if<PolyTerms>(&value_)) return *t;
        throw DomainError("element of " + ring_.name() + " is not a polynomial");
    }

    bool is_zero() const {
        return std::visit(
            [](const auto& v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Rational>) {
                    return v.is_zero();
                } else if constexpr (std::is_same_v<T, PolyTerms>) {
                    return v.empty();
                } else {
                    for (const auto& c : v)
                        if (!c.is_zero()) return false;
                    return true;
                }
            },
            value_);
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

private:
    void canonicalize() {
        if (auto* t = std::get_if<PolyTerms>(&value_)) {
            std::erase_if(*t, [](const auto& kv) { return kv.second.is_zero(); });
        }
    }

    RingDescriptor ring_;
    Value value_{Rational(0)};
};

// ---------------------------------------------------------------------------
// Constructors

inline RingElement zero(const RingDescriptor& ring);
inline RingElement one(const RingDescriptor& ring);
inline RingElement from_rational(const RingDescriptor& ring, const Rational& q);

namespace detail {

inline void require_same(const RingElement& a, const RingElement& b, const char* op) {
    if (!(a.ring() == b.ring()))
        throw MismatchError(std::string(op) + ": operands in " + a.ring().name() + " and " +
                            b.ring().name());
}

inline RingElement::Components fill(std::size_t n, const RingElement& e) {
    return RingElement::Components(n, e);
}

}  // namespace detail

inline RingElement from_rational(const RingDescriptor& ring, const Rational& q) {
    switch (ring.kind()) {
        case RingKind::Rationals: return RingElement(ring, q);
        case RingKind::Poly1:
        case RingKind::Poly2: {
            PolyTerms t;
            if (!q.is_zero()) t.emplace(Monomial{0, 0}, q);
            return RingElement(ring, std::move(t));
        }
        case RingKind::CayleyDickson:
            if (ring.level() == 0) return RingElement(ring, RingElement::Components{from_rational(ring.base(), q)});
            return RingElement(ring, RingElement::Components{from_rational(ring.lower(), q), zero(ring.lower())});
        case RingKind::JordanPlus:
            return RingElement(ring, RingElement::Components{from_rational(ring.base(), q)});
        case RingKind::Matrix: {
            unsigned n = ring.size();
            auto cells = detail::fill(std::size_t(n) * n, zero(ring.base()));
            if (!q.is_zero())
                for (unsigned i = 0; i < n; ++i) cells[i * n + i] = from_rational(ring.base(), q);
            return RingElement(ring, std::move(cells));
        }
    }
    throw DomainError("unknown ring kind");
}

inline RingElement zero(const RingDescriptor& ring) { return from_rational(ring, 0); }
inline RingElement one(const RingDescriptor& ring) { return from_rational(ring, 1); }

/// Embeds a base-ring element as a CD level-0 / Jordan / scalar-matrix value,
/// or as the real part of a higher Cayley-Dickson level.
inline RingElement embed(const RingDescriptor& ring, const RingElement& base_value) {
    switch (ring.kind()) {
        case RingKind::CayleyDickson:
            if (ring.level() == 0) {
                detail::require_same(zero(ring.base()), base_value, "embed");
                return RingElement(ring, RingElement::Components{base_value});
            }
            return RingElement(ring, RingElement::Components{embed(ring.lower(), base_value), zero(ring.lower())});
        case RingKind::JordanPlus:
            detail::require_same(zero(ring.base()), base_value, "embed");
            return RingElement(ring, RingElement::Components{base_value});
        case RingKind::Matrix: {
            detail::require_same(zero(ring.base()), base_value, "embed");
            unsigned n = ring.size();
            auto cells = detail::fill(std::size_t(n) * n, zero(ring.base()));
            for (unsigned i = 0; i < n; ++i) cells[i * n + i] = base_value;
            return RingElement(ring, std::move(cells));
        }
        default:
            detail::require_same(zero(ring), base_value, "embed");
            return base_value;
    }
}

/// e_index in doubling order (e_0 = 1).
inline RingElement cd_basis(const RingDescriptor& ring, unsigned index) {
    if (ring.kind() != RingKind::CayleyDickson) throw DomainError("cd_basis needs a Cayley-Dickson ring");
    unsigned dim = 1u << ring.level();
    if (index >= dim)
        throw DomainError("basis index e" + std::to_string(index) + " out of range for " + ring.name());
    if (ring.level() == 0) return one(ring);
    unsigned half = dim / 2;
    const auto& low = ring.lower();
    if (index < half) return RingElement(ring, RingElement::Components{cd_basis(low, index), zero(low)});
    return RingElement(ring, RingElement::Components{zero(low), cd_basis(low, index - half)});
}

/// Base-ring coordinates of a Cayley-Dickson element, in doubling order.
inline std::vector<RingElement> cd_coordinates(const RingElement& x) {
    const auto& ring = x.ring();
    if (ring.kind() != RingKind::CayleyDickson) throw DomainError("cd_coordinates needs a Cayley-Dickson ring");
    const auto& c = x.components();
    if (ring.level() == 0) return {c[0]};
    auto out = cd_coordinates(c[0]);
    auto hi = cd_coordinates(c[1]);
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
}

inline RingElement from_cd_coordinates(const RingDescriptor& ring, std::span<const RingElement> coords) {
    if (ring.kind() != RingKind::CayleyDickson || coords.size() != (std::size_t(1) << ring.level()))
        throw DomainError("coordinate count does not match " + ring.name());
    if (ring.level() == 0) return RingElement(ring, RingElement::Components{coords[0]});
    auto half = coords.size() / 2;
    return RingElement(ring, RingElement::Components{from_cd_coordinates(ring.lower(), coords.subspan(0, half)),
                                                     from_cd_coordinates(ring.lower(), coords.subspan(half))});
}

/// c * Y^a (Poly1) or c * Y^a Z^b (Poly2).
inline RingElement monomial(const RingDescriptor& ring, Monomial exponents, const Rational& c = 1) {
    if (ring.kind() != RingKind::Poly1 && ring.kind() != RingKind::Poly2)
        throw DomainError("monomial needs a polynomial ring, got " + ring.name());
    if (ring.kind() == RingKind::Poly1 && exponents[1] != 0)
        throw DomainError("Q[Y] monomial with a second exponent");
    PolyTerms t;
    t.emplace(exponents, c);
    return RingElement(ring, std::move(t));
}

// ---------------------------------------------------------------------------
// Arithmetic

inline RingElement add(const RingElement& a, const RingElement& b);
inline RingElement neg(const RingElement& a);
inline RingElement mul(const RingElement& a, const RingElement& b);
inline RingElement scale(const Rational& q, const RingElement& a);

namespace detail {

template <class F>
RingElement::Components zip(const RingElement::Components& x, const RingElement::Components& y, F f) {
    RingElement::Components out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(f(x[i], y[i]));
    return out;
}

inline PolyTerms poly_mul(const PolyTerms& x, const PolyTerms& y) {
    PolyTerms out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) out[Monomial{mx[0] + my[0], mx[1] + my[1]}] += cx * cy;
    return out;
}

}  // namespace detail

inline RingElement add(const RingElement& a, const RingElement& b) {
    detail::require_same(a, b, "add");
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.value());
            if constexpr (std::is_same_v<T, Rational>) {
                return RingElement(a.ring(), x + y);
            } else if constexpr (std::is_same_v<T, PolyTerms>) {
                PolyTerms out = x;
                for (const auto& [m, c] : y) out[m] += c;
                return RingElement(a.ring(), std::move(out));
            } else {
                return RingElement(a.ring(), detail::zip(x, y, [](const auto& u, const auto& v) { return add(u, v); }));
            }
        },
        a.value());
}

inline RingElement neg(const RingElement& a) { return scale(-1, a); }

inline RingElement sub(const RingElement& a, const RingElement& b) {
    detail::require_same(a, b, "sub");
    return add(a, neg(b));
}

inline RingElement scale(const Rational& q, const RingElement& a) {
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return RingElement(a.ring(), q * x);
            } else if constexpr (std::is_same_v<T, PolyTerms>) {
                PolyTerms out;
                if (!q.is_zero())
                    for (const auto& [m, c] : x) out.emplace(m, q * c);
                return RingElement(a.ring(), std::move(out));
            } else {
                RingElement::Components out;
                out.reserve(x.size());
                for (const auto& c : x) out.push_back(scale(q, c));
                return RingElement(a.ring(), std::move(out));
            }
        },
        a.value());
}

/// Cayley-Dickson conjugation: (a, b)* = (a*, -b); identity at level 0.
inline RingElement conjugate(const RingElement& a) {
    const auto& ring = a.ring();
    if (ring.kind() == RingKind::Rationals) return a;
    if (ring.kind() != RingKind::CayleyDickson)
        throw DomainError("conjugation is defined on Cayley-Dickson rings, not " + ring.name());
    if (ring.level() == 0) return a;
    const auto& c = a.components();
    return RingElement(ring, RingElement::Components{conjugate(c[0]), neg(c[1])});
}

inline RingElement mul(const RingElement& a, const RingElement& b) {
    detail::require_same(a, b, "mul");
    const auto& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Rationals: return RingElement(ring, a.rational() * b.rational());
        case RingKind::Poly1:
        case RingKind::Poly2: return RingElement(ring, detail::poly_mul(a.terms(), b.terms()));
        case RingKind::CayleyDickson: {
            const auto& x = a.components();
            const auto& y = b.components();
            if (ring.level() == 0) return RingElement(ring, RingElement::Components{mul(x[0], y[0])});
            // (a,b)(c,d) = (ac - d*b, da + bc*)
            const auto& [p, q] = std::tie(x[0], x[1]);
            const auto& [r, s] = std::tie(y[0], y[1]);
            return RingElement(ring, RingElement::Components{sub(mul(p, r), mul(conjugate(s), q)),
                                                             add(mul(s, p), mul(q, conjugate(r)))});
        }
        case RingKind::JordanPlus: {
            const auto& x = a.components()[0];
            const auto& y = b.components()[0];
            return RingElement(ring, RingElement::Components{scale(Rational(1, 2), add(mul(x, y), mul(y, x)))});
        }
        case RingKind::Matrix: {
            unsigned n = ring.size();
            const auto& x = a.components();
            const auto& y = b.components();
            RingElement::Components out;
            out.reserve(std::size_t(n) * n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    RingElement acc = mul(x[i * n], y[j]);
                    for (unsigned k = 1; k < n; ++k) acc = add(acc, mul(x[i * n + k], y[k * n + j]));
                    out.push_back(std::move(acc));
                }
            return RingElement(ring, std::move(out));
        }
    }
    throw DomainError("unknown ring kind");
}

/// (ab)c - a(bc)
inline RingElement associator(const RingElement& a, const RingElement& b, const RingElement& c) {
    return sub(mul(mul(a, b), c), mul(a, mul(b, c)));
}

inline RingElement commutator(const RingElement& a, const RingElement& b) {
    return sub(mul(a, b), mul(b, a));
}

/// Real part of a Cayley-Dickson element (coordinate of e_0) as a base element.
inline RingElement real_part(const RingElement& a) {
    if (a.ring().kind() != RingKind::CayleyDickson) return a;
    const auto& c = a.components();
    if (a.ring().level() == 0) return c[0];
    return real_part(c[0]);
}

/// N(a) = a a*, for Cayley-Dickson levels <= 3 over Q a nonnegative rational.
inline Rational norm(const RingElement& a) {
    const auto& ring = a.ring();
    if (ring.kind() == RingKind::Rationals) return a.rational() * a.rational();
    if (ring.kind() != RingKind::CayleyDickson || ring.base().kind() != RingKind::Rationals)
        throw DomainError("norm needs a Cayley-Dickson ring over Q, got " + ring.name());
    return real_part(mul(a, conjugate(a))).rational();
}

/// Two-sided inverse a* / N(a) in the rationals and Cayley-Dickson levels <= 3.
inline RingElement inverse(const RingElement& a) {
    const auto& ring = a.ring();
    if (!ring.is_division()) throw DomainError("inverse is not available in " + ring.name());
    if (a.is_zero()) throw DomainError("inverse of zero");
    if (ring.kind() == RingKind::Rationals) return RingElement(ring, a.rational().inverse());
    return scale(norm(a).inverse(), conjugate(a));
}

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator-(const RingElement& a) { return neg(a); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }

// ---------------------------------------------------------------------------
// Monomial ideals

inline bool divides(const Monomial& d, const Monomial& m) { return d[0] <= m[0] && d[1] <= m[1]; }

/// True iff every monomial of p is divisible by some generator monomial.
inline bool monomial_ideal_member(const RingElement& p, std::span<const RingElement> generators) {
    const auto& ring = p.ring();
    if (ring.kind() != RingKind::Poly1 && ring.kind() != RingKind::Poly2)
        throw DomainError("monomial ideals live in polynomial rings, not " + ring.name());
    std::vector<Monomial> gens;
    for (const auto& g : generators) {
        detail::require_same(p, g, "monomial_ideal_member");
        if (g.terms().size() != 1) throw DomainError("ideal generator is not a monomial");
        gens.push_back(g.terms().begin()->first);
    }
    for (const auto& [m, c] : p.terms()) {
        bool hit = false;
        for (const auto& g : gens)
            if (divides(g, m)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Rendering in the expression grammar

/// Basis label of e_index: i, j, k up to quaternions, e<index> above.
inline std::string cd_basis_name(unsigned level, unsigned index) {
    if (index == 0) return "1";
    if (level <= 2) {
        static constexpr const char* names[] = {"1", "i", "j", "k"};
        return names[index];
    }
    return "e" + std::to_string(index);
}

namespace detail {

inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].starts_with('-'))
            out += " - " + terms[i].substr(1);
        else
            out += " + " + terms[i];
    }
    return out;
}

/// coefficient * factor, where the coefficient has already been split into terms.
inline std::string attach(const std::vector<std::string>& coefficient, const std::string& factor) {
    if (coefficient.size() == 1) {
        if (coefficient[0] == "1") return factor;
        if (coefficient[0] == "-1") return "-" + factor;
        return coefficient[0] + "*" + factor;
    }
    return "(" + join_terms(coefficient) + ")*" + factor;
}

}  // namespace detail

/// Canonical signed terms of an element, e.g. {"1", "-2*i"}; empty for zero.
inline std::vector<std::string> render_terms(const RingElement& a);

inline std::string to_string(const RingElement& a) {
    const auto& ring = a.ring();
    if (ring.kind() == RingKind::Matrix) {
        unsigned n = ring.size();
        const auto& cells = a.components();
        std::string out = "[";
        for (unsigned i = 0; i < n; ++i) {
            out += i ? ", [" : "[";
            for (unsigned j = 0; j < n; ++j) {
                if (j) out += ", ";
                out += to_string(cells[i * n + j]);
            }
            out += "]";
        }
        return out + "]";
    }
    return detail::join_terms(render_terms(a));
}

inline std::vector<std::string> render_terms(const RingElement& a) {
    const auto& ring = a.ring();
    switch (ring.kind()) {
        case RingKind::Rationals:
            if (a.is_zero()) return {};
            return {a.rational().str()};
        case RingKind::Poly1:
        case RingKind::Poly2: {
            std::vector<std::string> out;
            const auto& vars = ring.variables();
            for (const auto& [m, c] : a.terms()) {
                std::string mono;
                for (std::size_t v = 0; v < vars.size(); ++v) {
                    if (m[v] == 0) continue;
                    if (!mono.empty()) mono += "*";
                    mono += vars[v];
                    if (m[v] > 1) mono += "^" + std::to_string(m[v]);
                }
                if (mono.empty())
                    out.push_back(c.str());
                else
                    out.push_back(detail::attach({c.str()}, mono));
            }
            return out;
        }
        case RingKind::CayleyDickson: {
            auto coords = cd_coordinates(a);
            std::vector<std::string> out;
            for (unsigned idx = 0; idx < coords.size(); ++idx) {
                if (coords[idx].is_zero()) continue;
                auto coeff = render_terms(coords[idx]);
                if (idx == 0) {
                    out.insert(out.end(), coeff.begin(), coeff.end());
                } else {
                    out.push_back(detail::attach(coeff, cd_basis_name(ring.level(), idx)));
                }
            }
            return out;
        }
        case RingKind::JordanPlus: return render_terms(a.components()[0]);
        case RingKind::Matrix:
            if (a.is_zero()) return {};
            return {to_string(a)};
    }
    return {};
}

}  // namespace skewring
