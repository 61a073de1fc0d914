#pragma once

// Expression syntax for the command line tool. '*' is left-associative and the
// parse tree is kept as written, so "a*b*c" is (a*b)*c and the renderer puts
// parentheses back wherever the tree leans right.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' ['-'] INT)?            exponent only on a name
//   atom  := NUMBER | NAME | '(' expr ')' | '[' row (',' row)* ']' | 'O' '(' 'X' ['^' INT] ')'
//   row   := '[' expr (',' expr)* ']'

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "../error.hpp"
#include "../rational.hpp"

namespace skewring::cli {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
    Rational value;
};
struct Name {
    std::string id;
    std::optional<std::int64_t> exponent;
};
struct Neg {
    ExprPtr operand;
};
enum class BinaryOp { Add, Sub, Mul };
struct Binary {
    BinaryOp op;
    ExprPtr lhs, rhs;
};
struct MatrixLiteral {
    std::vector<std::vector<ExprPtr>> rows;
};
/// O(X^n): everything from X^n up is unknown.
struct Tail {
    std::int64_t precision;
};

struct Expr {
    std::variant<Number, Name, Neg, Binary, MatrixLiteral, Tail> node;
    Span span;
};

inline ExprPtr make_expr(auto node, Span span = {}) {
    return std::make_shared<const Expr>(Expr{std::move(node), span});
}

inline ExprPtr number(Rational v) { return make_expr(Number{std::move(v)}); }
inline ExprPtr name(std::string id, std::optional<std::int64_t> e = std::nullopt) {
    return make_expr(Name{std::move(id), e});
}
inline ExprPtr negate(ExprPtr a) { return make_expr(Neg{std::move(a)}); }
inline ExprPtr binary(BinaryOp op, ExprPtr a, ExprPtr b) { return make_expr(Binary{op, std::move(a), std::move(b)}); }

/// Structural equality; spans are ignored.
inline bool same_tree(const Expr& a, const Expr& b);

inline bool same_tree(const ExprPtr& a, const ExprPtr& b) { return same_tree(*a, *b); }

inline bool same_tree(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Number>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, Name>) return x.id == y.id && x.exponent == y.exponent;
            else if constexpr (std::is_same_v<T, Neg>) return same_tree(x.operand, y.operand);
            else if constexpr (std::is_same_v<T, Binary>)
                return x.op == y.op && same_tree(x.lhs, y.lhs) && same_tree(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, MatrixLiteral>) {
                if (x.rows.size() != y.rows.size()) return false;
                for (std::size_t r = 0; r < x.rows.size(); ++r) {
                    if (x.rows[r].size() != y.rows[r].size()) return false;
                    for (std::size_t c = 0; c < x.rows[r].size(); ++c)
                        if (!same_tree(x.rows[r][c], y.rows[r][c])) return false;
                }
                return true;
            } else
                return x.precision == y.precision;
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline bool is_sum(const Expr& e) {
    auto* b = std::get_if<Binary>(&e.node);
    return b && b->op != BinaryOp::Mul;
}
inline bool is_product(const Expr& e) {
    auto* b = std::get_if<Binary>(&e.node);
    return b && b->op == BinaryOp::Mul;
}

}  // namespace detail

inline std::string render(const Expr& e);
inline std::string render(const ExprPtr& e) { return render(*e); }

inline std::string render(const Expr& e) {
    auto wrap = [](const ExprPtr& x, bool parens) { return parens ? "(" + render(x) + ")" : render(x); };
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) return x.value.str();
            else if constexpr (std::is_same_v<T, Name>)
                return x.exponent ? x.id + "^" + std::to_string(*x.exponent) : x.id;
            else if constexpr (std::is_same_v<T, Neg>)
                return "-" + wrap(x.operand, detail::is_sum(*x.operand) || detail::is_product(*x.operand));
            else if constexpr (std::is_same_v<T, Binary>) {
                if (x.op == BinaryOp::Mul)
                    return wrap(x.lhs, detail::is_sum(*x.lhs)) + "*" +
                           wrap(x.rhs, detail::is_sum(*x.rhs) || detail::is_product(*x.rhs));
                return render(x.lhs) + (x.op == BinaryOp::Add ? " + " : " - ") + wrap(x.rhs, detail::is_sum(*x.rhs));
            } else if constexpr (std::is_same_v<T, MatrixLiteral>) {
                std::string out = "[";
                for (std::size_t r = 0; r < x.rows.size(); ++r) {
                    out += r ? ", [" : "[";
                    for (std::size_t c = 0; c < x.rows[r].size(); ++c) out += (c ? ", " : "") + render(x.rows[r][c]);
                    out += "]";
                }
                return out + "]";
            } else
                return "O(X^" + std::to_string(x.precision) + ")";
        },
        e.node);
}

// ---------------------------------------------------------------------------
// Parsing

/// What the surrounding session accepts.
struct Lexicon {
    std::set<std::string> constants;       // ring constants such as i, e5, Y
    std::set<std::string> indeterminates;  // X, or X1 ... Xn
    bool negative_exponents = false;       // on indeterminates
    bool tails = false;                    // O(X^n)

    /// Accepts every name; used for syntax-only work.
    static Lexicon permissive() {
        Lexicon l;
        l.negative_exponents = true;
        l.tails = true;
        l.any_name = true;
        return l;
    }

    bool any_name = false;

    bool known(const std::string& id) const {
        return any_name || constants.contains(id) || indeterminates.contains(id);
    }
    bool indeterminate(const std::string& id) const {
        if (indeterminates.contains(id)) return true;
        if (!any_name || id.empty() || id[0] != 'X') return false;
        for (std::size_t k = 1; k < id.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(id[k]))) return false;
        return true;
    }
};

class Parser {
public:
    Parser(std::string_view text, const Lexicon& lexicon) : text_(text), lex_(lexicon) {}

    ExprPtr parse() {
        skip();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        auto e = expr();
        skip();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == text_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
            throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
        }
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr expr() {
        std::size_t begin = (skip(), pos_);
        auto lhs = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            auto rhs = term();
            lhs = make_expr(Binary{c == '+' ? BinaryOp::Add : BinaryOp::Sub, lhs, rhs}, {begin, pos_});
        }
    }

    ExprPtr term() {
        std::size_t begin = (skip(), pos_);
        auto lhs = unary();
        while (peek() == '*') {
            ++pos_;
            auto rhs = unary();
            lhs = make_expr(Binary{BinaryOp::Mul, lhs, rhs}, {begin, pos_});
        }
        return lhs;
    }

    ExprPtr unary() {
        std::size_t begin = (skip(), pos_);
        if (accept('-')) {
            auto operand = unary();
            return make_expr(Neg{operand}, {begin, pos_});
        }
        return power();
    }

    std::int64_t integer() {
        skip();
        std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (begin == pos_) throw ParseError("expected an integer", pos_);
        if (pos_ - begin > 12) throw ParseError("exponent too large", begin);
        return std::stoll(std::string(text_.substr(begin, pos_ - begin)));
    }

    ExprPtr power() {
        std::size_t begin = (skip(), pos_);
        auto base = atom();
        if (peek() != '^') return base;
        std::size_t caret = pos_++;
        auto* n = std::get_if<Name>(&base->node);
        if (!n || n->exponent) throw ParseError("exponent only allowed on a name", caret);
        bool negative = accept('-');
        std::size_t digits = (skip(), pos_);
        auto e = integer();
        if (negative) {
            if (!lex_.indeterminate(n->id)) throw ParseError("negative exponent on ring constant " + n->id, digits);
            if (!lex_.negative_exponents)
                throw ParseError("negative exponent on " + n->id + " needs a Laurent structure", digits);
            e = -e;
        }
        return make_expr(Name{n->id, e}, {begin, pos_});
    }

    ExprPtr atom() {
        skip();
        std::size_t begin = pos_;
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            expect(')');
            return make_expr(inner->node, {begin, pos_});
        }
        if (c == '[') return matrix();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string id(text_.substr(begin, pos_ - begin));
            if (id == "O" && peek() == '(') return tail(begin);
            if (!lex_.known(id)) throw ParseError("unknown name '" + id + "'", begin);
            return make_expr(Name{id, std::nullopt}, {begin, pos_});
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    ExprPtr number_literal() {
        std::size_t begin = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t frac = pos_;
            digits();
            if (frac == pos_) throw ParseError("digits expected after '.'", pos_);
        } else if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t den = pos_;
            digits();
            if (den == pos_) throw ParseError("digits expected after '/'", pos_);
        }
        auto literal = text_.substr(begin, pos_ - begin);
        try {
            return make_expr(Number{Rational::parse(literal)}, {begin, pos_});
        } catch (const ConfigError&) {
            throw ParseError("malformed number '" + std::string(literal) + "'", begin);
        } catch (const DomainError&) {
            throw ParseError("malformed number '" + std::string(literal) + "'", begin);
        }
    }

    ExprPtr tail(std::size_t begin) {
        if (!lex_.tails) throw ParseError("O(X^n) is only allowed in series structures", begin);
        expect('(');
        skip();
        if (pos_ >= text_.size() || text_[pos_] != 'X') throw ParseError("expected X inside O(...)", pos_);
        ++pos_;
        std::int64_t precision = 1;
        if (accept('^')) {
            bool negative = accept('-');
            precision = integer();
            if (negative) precision = -precision;
        }
        expect(')');
        return make_expr(Tail{precision}, {begin, pos_});
    }

    ExprPtr matrix() {
        std::size_t begin = pos_;
        expect('[');
        MatrixLiteral m;
        do {
            expect('[');
            std::vector<ExprPtr> row{expr()};
            while (accept(',')) row.push_back(expr());
            expect(']');
            if (!m.rows.empty() && row.size() != m.rows.front().size())
                throw ParseError("matrix rows differ in length", pos_);
            m.rows.push_back(std::move(row));
        } while (accept(','));
        expect(']');
        if (m.rows.size() != m.rows.front().size()) throw ParseError("matrix literal is not square", begin);
        return make_expr(std::move(m), {begin, pos_});
    }

    std::string_view text_;
    const Lexicon& lex_;
    std::size_t pos_ = 0;
};

inline ExprPtr parse(std::string_view text, const Lexicon& lexicon = Lexicon::permissive()) {
    return Parser(text, lexicon).parse();
}

}  // namespace skewring::cli
