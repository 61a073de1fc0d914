#pragma once

// A configuration turned into a live context: the lexicon it accepts, and
// evaluation of parsed expressions that follows the parse tree exactly.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "../error.hpp"
#include "../iterated.hpp"
#include "../rings.hpp"
#include "../sampling.hpp"
#include "../series.hpp"
#include "../skewpoly.hpp"
#include "config.hpp"
#include "expression.hpp"

namespace skewring::cli {

using Value = std::variant<OrePoly, LaurentPoly, MultiLaurentPoly, TruncatedSeries>;

inline std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return skewring::to_string(x); }, v);
}

// ---------------------------------------------------------------------------
// Named ring constants

/// Names a ring answers to: i, j, k (up to quaternions), e0 ... e(2^L - 1)
/// for Cayley-Dickson level L, polynomial variables, and everything the base
/// ring of a tower level knows.
inline void collect_constants(const RingDescriptor& ring, std::set<std::string>& out) {
    switch (ring.kind()) {
        case RingKind::Rationals: return;
        case RingKind::Poly1:
        case RingKind::Poly2:
            out.insert(ring.variables().begin(), ring.variables().end());
            return;
        case RingKind::CayleyDickson: {
            unsigned dim = 1u << ring.level();
            for (unsigned idx = 0; idx < dim; ++idx) {
                out.insert("e" + std::to_string(idx));
                if (idx > 0 && ring.level() <= 2) out.insert(cd_basis_name(ring.level(), idx));
            }
            collect_constants(ring.base(), out);
            return;
        }
        case RingKind::JordanPlus:
        case RingKind::Matrix: collect_constants(ring.base(), out); return;
    }
}

inline std::optional<RingElement> named_constant(const RingDescriptor& ring, const std::string& id) {
    switch (ring.kind()) {
        case RingKind::Rationals: return std::nullopt;
        case RingKind::Poly1:
        case RingKind::Poly2: {
            const auto& vars = ring.variables();
            if (vars[0] == id) return monomial(ring, {1, 0});
            if (vars.size() > 1 && vars[1] == id) return monomial(ring, {0, 1});
            return std::nullopt;
        }
        case RingKind::CayleyDickson: {
            unsigned dim = 1u << ring.level();
            std::optional<unsigned> idx;
            if (ring.level() <= 2 && id.size() == 1 && (id == "i" || id == "j" || id == "k"))
                idx = static_cast<unsigned>(id[0] == 'i' ? 1 : id[0] == 'j' ? 2 : 3);
            else if (id.size() >= 2 && id.size() <= 3 && id[0] == 'e' &&
                     std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
                idx = static_cast<unsigned>(std::stoul(id.substr(1)));
            if (idx && *idx < dim) return cd_basis(ring, *idx);
            if (auto b = named_constant(ring.base(), id)) return embed(ring, *b);
            return std::nullopt;
        }
        case RingKind::JordanPlus:
        case RingKind::Matrix:
            if (auto b = named_constant(ring.base(), id)) return embed(ring, *b);
            return std::nullopt;
    }
    return std::nullopt;
}

/// ((c c) c) ... with e factors; c^0 = 1.
inline RingElement left_power(const RingElement& c, std::int64_t e) {
    if (e < 0) throw DomainError("negative exponent on a ring constant");
    RingElement out = one(c.ring());
    for (std::int64_t k = 0; k < e; ++k) out = k == 0 ? c : mul(out, c);
    return out;
}

inline RingElement eval_constant(const Expr& e, const RingDescriptor& ring);

/// An n x n literal belongs to n x n matrices over some base, possibly seen
/// through a Jordan plus-algebra.
inline RingElement matrix_literal(const MatrixLiteral& m, const RingDescriptor& ring) {
    auto n = m.rows.size();
    if (ring.kind() == RingKind::Matrix && ring.size() == n) {
        RingElement::Components cells;
        for (const auto& row : m.rows)
            for (const auto& entry : row) cells.push_back(eval_constant(*entry, ring.base()));
        return RingElement(ring, std::move(cells));
    }
    if (ring.kind() == RingKind::JordanPlus) return embed(ring, matrix_literal(m, ring.base()));
    throw DomainError("a " + std::to_string(n) + "x" + std::to_string(n) + " matrix literal is not an element of " +
                      ring.name());
}

/// Evaluates an expression free of indeterminates in the ring itself.
inline RingElement eval_constant(const Expr& e, const RingDescriptor& ring) {
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) return from_rational(ring, x.value);
            else if constexpr (std::is_same_v<T, Name>) {
                auto c = named_constant(ring, x.id);
                if (!c) throw DomainError("'" + x.id + "' is not a constant of " + ring.name());
                return x.exponent ? left_power(*c, *x.exponent) : *c;
            } else if constexpr (std::is_same_v<T, Neg>)
                return neg(eval_constant(*x.operand, ring));
            else if constexpr (std::is_same_v<T, Binary>) {
                auto a = eval_constant(*x.lhs, ring);
                auto b = eval_constant(*x.rhs, ring);
                switch (x.op) {
                    case BinaryOp::Add: return add(a, b);
                    case BinaryOp::Sub: return sub(a, b);
                    case BinaryOp::Mul: return mul(a, b);
                }
                throw DomainError("bad operator");
            } else if constexpr (std::is_same_v<T, MatrixLiteral>)
                return matrix_literal(x, ring);
            else
                throw DomainError("O(X^n) inside a ring constant");
        },
        e.node);
}

// ---------------------------------------------------------------------------

class Session {
public:
    explicit Session(SessionConfig cfg) : cfg_(std::move(cfg)) {
        try {
            switch (cfg_.structure) {
                case Structure::Ore:
                    ore_ = cfg_.delta ? OreContext::make(*cfg_.sigma, *cfg_.delta) : OreContext::make(*cfg_.sigma);
                    break;
                case Structure::Laurent: laurent_ = LaurentContext::make(*cfg_.sigma); break;
                case Structure::IteratedLaurent: iterated_ = IteratedLaurentContext::make(cfg_.sigmas); break;
                case Structure::PowerSeries: series_ = SeriesContext::power(*cfg_.sigma); break;
                case Structure::LaurentSeries: series_ = SeriesContext::laurent(*cfg_.sigma); break;
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError(structure_name(cfg_.structure) + " over " + cfg_.ring.name() + ": " + e.what());
        }
        precision_ = cfg_.precision.value_or(0);

        collect_constants(cfg_.ring, lexicon_.constants);
        if (iterated_)
            for (std::size_t k = 1; k <= iterated_->variables(); ++k) lexicon_.indeterminates.insert("X" + std::to_string(k));
        else
            lexicon_.indeterminates.insert("X");
        lexicon_.negative_exponents = cfg_.structure != Structure::Ore && cfg_.structure != Structure::PowerSeries;
        lexicon_.tails = is_series();
    }

    const SessionConfig& config() const noexcept { return cfg_; }
    const Lexicon& lexicon() const noexcept { return lexicon_; }
    const RingDescriptor& ring() const noexcept { return cfg_.ring; }
    Structure structure() const noexcept { return cfg_.structure; }
    bool is_series() const noexcept { return series_ != nullptr; }
    std::int64_t precision() const noexcept { return precision_; }

    const OreContextPtr& ore() const noexcept { return ore_; }
    const LaurentContextPtr& laurent() const noexcept { return laurent_; }
    const IteratedLaurentContextPtr& iterated() const noexcept { return iterated_; }
    const SeriesContextPtr& series() const noexcept { return series_; }

    std::string name() const {
        if (ore_) return ore_->name();
        if (laurent_) return laurent_->name();
        if (iterated_) return iterated_->name();
        return series_->name();
    }

    ExprPtr parse(std::string_view text) const { return cli::parse(text, lexicon_); }

    Value eval(std::string_view text) const { return eval(*parse(text)); }

    /// Literals are exact. In a series structure they are carried at a working
    /// precision raised by every negative exponent in the tree, so that
    /// X^-n factors cannot eat into the session precision; the result is then
    /// cut back to the session precision.
    Value eval(const Expr& e) const {
        if (!series_) return eval_at(e, 0);
        auto v = std::get<TruncatedSeries>(eval_at(e, precision_ + negative_weight(e)));
        return v.truncate(std::min(v.precision(), precision_));
    }

    /// A ring element as a constant of the structure.
    Value lift(const RingElement& c) const { return lift(c, precision_); }

    /// X^e, or X_k^e in an iterated structure (k counted from 1).
    Value x_power(std::size_t k, std::int64_t e) const { return x_power(k, e, precision_); }

private:
    static std::int64_t negative_weight(const Expr& e) {
        return std::visit(
            [](const auto& x) -> std::int64_t {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Name>) return x.exponent ? std::max<std::int64_t>(0, -*x.exponent) : 0;
                else if constexpr (std::is_same_v<T, Neg>) return negative_weight(*x.operand);
                else if constexpr (std::is_same_v<T, Binary>) return negative_weight(*x.lhs) + negative_weight(*x.rhs);
                else return 0;
            },
            e.node);
    }

    Value eval_at(const Expr& e, std::int64_t working) const {
        return std::visit(
            [&](const auto& x) -> Value {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Number>) return lift(from_rational(ring(), x.value), working);
                else if constexpr (std::is_same_v<T, Name>) {
                    if (lexicon_.indeterminates.contains(x.id)) return x_power(variable_index(x.id), x.exponent.value_or(1), working);
                    auto c = named_constant(ring(), x.id);
                    if (!c) throw DomainError("'" + x.id + "' is not a constant of " + ring().name());
                    return lift(x.exponent ? left_power(*c, *x.exponent) : *c, working);
                } else if constexpr (std::is_same_v<T, Neg>)
                    return negate(eval_at(*x.operand, working));
                else if constexpr (std::is_same_v<T, Binary>) {
                    auto a = eval_at(*x.lhs, working);
                    auto b = eval_at(*x.rhs, working);
                    switch (x.op) {
                        case BinaryOp::Add: return add(a, b);
                        case BinaryOp::Sub: return sub(a, b);
                        case BinaryOp::Mul: return mul(a, b);
                    }
                    throw DomainError("bad operator");
                } else if constexpr (std::is_same_v<T, MatrixLiteral>)
                    return lift(matrix_literal(x, ring()), working);
                else {
                    if (!series_) throw DomainError("O(X^n) needs a series structure");
                    return TruncatedSeries::from_terms(series_, {}, x.precision);
                }
            },
            e.node);
    }

public:
    std::size_t variables() const noexcept { return iterated_ ? iterated_->variables() : 1; }

    Value random(Sampler& sampler) const {
        if (ore_) return random_poly(ore_, sampler, 0, 3);
        if (laurent_) return random_poly(laurent_, sampler, -3, 3);
        if (iterated_) return random_multi_poly(iterated_, sampler, -2, 2);
        return random_series(series_, sampler, precision_);
    }

    static Value add(const Value& a, const Value& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    static Value sub(const Value& a, const Value& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    static Value mul(const Value& a, const Value& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    static Value negate(const Value& a) {
        return std::visit([](const auto& x) -> Value { return -x; }, a);
    }
    /// (ab)c - a(bc)
    static Value associator(const Value& a, const Value& b, const Value& c) { return sub(mul(mul(a, b), c), mul(a, mul(b, c))); }

    /// Zero, for series: zero at every known coefficient.
    static bool is_zero(const Value& v) {
        return std::visit(
            [](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, TruncatedSeries>)
                    return !series_order(x).has_value();
                else
                    return x.is_zero();
            },
            v);
    }

    /// Equality; series are compared at the precision both are known to.
    static bool agree(const Value& a, const Value& b) {
        if (const auto* s = std::get_if<TruncatedSeries>(&a)) {
            const auto& t = std::get<TruncatedSeries>(b);
            auto p = std::min(s->precision(), t.precision());
            return s->truncate(p) == t.truncate(p);
        }
        return a == b;
    }

private:
    Value lift(const RingElement& c, std::int64_t precision) const {
        if (ore_) return OrePoly::constant(ore_, c);
        if (laurent_) return LaurentPoly::constant(laurent_, c);
        if (iterated_) return MultiLaurentPoly::constant(iterated_, c);
        return TruncatedSeries::monomial(series_, c, 0, precision);
    }

    Value x_power(std::size_t k, std::int64_t e, std::int64_t precision) const {
        if (iterated_) return MultiLaurentPoly::variable(iterated_, k, e);
        if (k != 1) throw DomainError("only X1 exists outside iterated structures");
        if (ore_) return OrePoly::x_power(ore_, e);
        if (laurent_) return LaurentPoly::x_power(laurent_, e);
        return TruncatedSeries::monomial(series_, one(ring()), e, std::max(precision, e + precision));
    }

    template <class F>
    static Value combine(const Value& a, const Value& b, F f) {
        if (a.index() != b.index()) throw MismatchError("values from different structures");
        return std::visit(
            [&](const auto& x) -> Value {
                using T = std::decay_t<decltype(x)>;
                return Value(f(x, std::get<T>(b)));
            },
            a);
    }

    std::size_t variable_index(const std::string& id) const {
        if (!iterated_) return 1;
        return static_cast<std::size_t>(std::stoul(id.substr(1)));
    }

    SessionConfig cfg_;
    Lexicon lexicon_;
    OreContextPtr ore_;
    LaurentContextPtr laurent_;
    IteratedLaurentContextPtr iterated_;
    SeriesContextPtr series_;
    std::int64_t precision_ = 0;
};

}  // namespace skewring::cli
