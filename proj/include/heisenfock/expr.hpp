#pragma once

#include "heisenfock/config.hpp"
#include "heisenfock/generators.hpp"
#include "heisenfock/heis_core.hpp"

#include <cctype>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace heisenfock {

/* Expression errors carry a 1-based line/column. The subclasses are the
 * distinct failure classes callers can tell apart.
 */
class ExprError : public std::runtime_error {
public:
    ExprError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

struct SyntaxError : ExprError {
    using ExprError::ExprError;
};
struct IndexRangeError : ExprError {
    using ExprError::ExprError;
};
struct ModeError : ExprError {
    using ExprError::ExprError;
};

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class AtomKind { a, p, q, pt, qt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

namespace ast {
struct Literal {
    Rational value;
};
struct Generator {
    AtomKind kind;
    std::size_t index;
    int mode;
};
struct Sum {
    std::vector<std::pair<int, ExprPtr>> terms; // (sign, term)
};
struct Product {
    std::vector<ExprPtr> factors;
};
struct Power {
    ExprPtr base;
    unsigned exponent;
};
struct Commutator {
    ExprPtr left, right;
};
} // namespace ast

struct ExprNode {
    std::variant<ast::Literal, ast::Generator, ast::Sum, ast::Product, ast::Power, ast::Commutator>
        node;
    SourcePos pos;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

    ExprPtr parse() {
        skip_ws();
        ExprPtr e = expr();
        skip_ws();
        if (!at_end())
            fail<SyntaxError>("unexpected '" + std::string(1, peek()) + "'");
        return e;
    }

private:
    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[i_]; }

    SourcePos pos() const {
        SourcePos p;
        for (std::size_t k = 0; k < i_ && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++p.line;
                p.column = 1;
            } else {
                ++p.column;
            }
        }
        return p;
    }

    template <class E>
    [[noreturn]] void fail(const std::string& msg) const {
        auto p = pos();
        throw E(msg, p.line, p.column);
    }

    template <class E>
    [[noreturn]] static void fail_at(const SourcePos& p, const std::string& msg) {
        throw E(msg, p.line, p.column);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++i_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            if (at_end())
                fail<SyntaxError>(std::string("expected '") + c + "' but input ended");
            fail<SyntaxError>(std::string("expected '") + c + "'");
        }
        ++i_;
    }

    static ExprPtr make(SourcePos p, auto node) {
        return std::make_shared<const ExprNode>(ExprNode{std::move(node), p});
    }

    ExprPtr expr() {
        skip_ws();
        SourcePos p = pos();
        ast::Sum sum;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
        }
        sum.terms.emplace_back(sign, term());
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-')
                break;
            sign = peek() == '-' ? -1 : 1;
            ++i_;
            sum.terms.emplace_back(sign, term());
        }
        if (sum.terms.size() == 1 && sum.terms[0].first == 1)
            return sum.terms[0].second;
        return make(p, std::move(sum));
    }

    bool starts_atom() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == 'a' ||
               c == 'p' || c == 'q';
    }

    ExprPtr term() {
        skip_ws();
        SourcePos p = pos();
        ast::Product prod;
        prod.factors.push_back(factor());
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++i_;
                prod.factors.push_back(factor());
            } else if (starts_atom()) {
                prod.factors.push_back(factor());
            } else {
                break;
            }
        }
        if (prod.factors.size() == 1)
            return prod.factors[0];
        return make(p, std::move(prod));
    }

    ExprPtr factor() {
        skip_ws();
        SourcePos p = pos();
        ExprPtr base = atom();
        skip_ws();
        if (peek() != '^')
            return base;
        ++i_;
        skip_ws();
        std::string digits = read_digits();
        if (digits.empty())
            fail<SyntaxError>("expected a nonnegative integer exponent");
        unsigned long e = std::stoul(digits);
        return make(p, ast::Power{std::move(base), static_cast<unsigned>(e)});
    }

    std::string read_digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            s += text_[i_++];
        if (s.size() > 18)
            fail<SyntaxError>("integer literal too long");
        return s;
    }

    long read_int() {
        skip_ws();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
            skip_ws();
        }
        std::string d = read_digits();
        if (d.empty())
            fail<SyntaxError>("expected an integer");
        long v = std::stol(d);
        if (v > 1000000)
            fail<ModeError>("generator argument too large");
        return sign * v;
    }

    ExprPtr atom() {
        skip_ws();
        SourcePos p = pos();
        char c = peek();
        if (at_end())
            fail<SyntaxError>("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            Rational value(Integer(num, 10));
            if (peek() == '/') {
                ++i_;
                std::string den = read_digits();
                if (den.empty())
                    fail<SyntaxError>("expected a denominator");
                Integer d(den, 10);
                if (d == 0)
                    fail_at<SyntaxError>(p, "zero denominator");
                value /= Rational(d);
            }
            return make(p, ast::Literal{value});
        }
        if (c == '(') {
            ++i_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++i_;
            ExprPtr l = expr();
            expect(',');
            ExprPtr r = expr();
            expect(']');
            return make(p, ast::Commutator{std::move(l), std::move(r)});
        }
        if (c == 'a' || c == 'p' || c == 'q') {
            ++i_;
            AtomKind kind = c == 'a' ? AtomKind::a : c == 'p' ? AtomKind::p : AtomKind::q;
            if (c != 'a' && peek() == 't') {
                ++i_;
                kind = c == 'p' ? AtomKind::pt : AtomKind::qt;
            }
            expect('(');
            SourcePos index_pos = (skip_ws(), pos());
            long index = read_int();
            expect(',');
            SourcePos mode_pos = (skip_ws(), pos());
            long mode = read_int();
            expect(')');
            if (index < 0 || static_cast<std::size_t>(index) >= dim_)
                fail_at<IndexRangeError>(index_pos, "basis index " + std::to_string(index) +
                                                        " out of range [0, " +
                                                        std::to_string(dim_) + ")");
            if (kind == AtomKind::a && mode == 0)
                fail_at<ModeError>(mode_pos, "mode of a(i,n) must be nonzero");
            if (kind != AtomKind::a && mode < 0)
                fail_at<ModeError>(mode_pos, "level of p/q generators must be nonnegative");
            return make(p, ast::Generator{kind, static_cast<std::size_t>(index),
                                          static_cast<int>(mode)});
        }
        fail<SyntaxError>("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t dim_;
    std::size_t i_ = 0;
};

} // namespace detail

/* Grammar:
 *   expr      := ('+'|'-')? term (('+'|'-') term)*
 *   term      := factor (('*')? factor)*
 *   factor    := atom ('^' uint)?
 *   atom      := rational | generator | '(' expr ')' | '[' expr ',' expr ']'
 *   generator := ('a'|'p'|'q'|'pt'|'qt') '(' int ',' int ')'
 */
inline ExprPtr parse_expr(std::string_view text, const Config& config) {
    return detail::ExprParser(text, config.dimension).parse();
}

/// Free-algebra value of an expression; commutators become xy - yx.
inline Element evaluate(const ExprNode& node) {
    return std::visit(
        [](const auto& n) -> Element {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ast::Literal>) {
                return Element(n.value);
            } else if constexpr (std::is_same_v<T, ast::Generator>) {
                switch (n.kind) {
                case AtomKind::a: return Element::generator(n.index, n.mode);
                case AtomKind::p: return expand_p(n.index, n.mode, SeriesKind::plain);
                case AtomKind::q: return expand_q(n.index, n.mode, SeriesKind::plain);
                case AtomKind::pt: return expand_p(n.index, n.mode, SeriesKind::transposed);
                case AtomKind::qt: return expand_q(n.index, n.mode, SeriesKind::transposed);
                }
                throw std::logic_error("unknown atom kind");
            } else if constexpr (std::is_same_v<T, ast::Sum>) {
                Element r;
                for (const auto& [sign, t] : n.terms) {
                    if (sign < 0)
                        r -= evaluate(*t);
                    else
                        r += evaluate(*t);
                }
                return r;
            } else if constexpr (std::is_same_v<T, ast::Product>) {
                Element r = Element::unit();
                for (const auto& f : n.factors)
                    r = r * evaluate(*f);
                return r;
            } else if constexpr (std::is_same_v<T, ast::Power>) {
                return evaluate(*n.base).pow(n.exponent);
            } else {
                Element l = evaluate(*n.left), r = evaluate(*n.right);
                return l * r - r * l;
            }
        },
        node.node);
}

inline Element parse_element(std::string_view text, const Config& config) {
    return evaluate(*parse_expr(text, config));
}

} // namespace heisenfock
