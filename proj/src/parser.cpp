#include "invz/parser.hpp"

#include <cctype>

namespace invz {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PolyExprPtr parse_all() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    static PolyExprPtr make(std::size_t offset, auto node) {
        auto e = std::make_unique<PolyExpr>();
        e->node = std::move(node);
        e->offset = offset;
        return e;
    }

    PolyExprPtr parse_expr() {
        auto lhs = parse_term();
        while (peek('+') || peek('-')) {
            const std::size_t at = pos_;
            const char op = text_[pos_++];
            auto rhs = parse_term();
            lhs = make(at, expr::Binary{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    PolyExprPtr parse_term() {
        auto lhs = parse_factor();
        while (peek('*')) {
            const std::size_t at = pos_++;
            auto rhs = parse_factor();
            lhs = make(at, expr::Binary{'*', std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    PolyExprPtr parse_factor() {
        auto base = parse_atom();
        if (peek('^')) {
            const std::size_t at = pos_++;
            skip_ws();
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
                fail("exponent must be a nonnegative integer literal");
            }
            const std::size_t digits_at = pos_;
            unsigned long exponent = 0;
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (exponent > kMaxExponent) {
                    throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), digits_at);
                }
                ++pos_;
            }
            if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
                fail("exponent must be a nonnegative integer literal");
            }
            if (peek('^')) {
                fail("chained exponents need parentheses");
            }
            return make(at, expr::Power{std::move(base), static_cast<unsigned>(exponent)});
        }
        return base;
    }

    PolyExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const std::size_t at = pos_;
        const char c = text_[pos_];
        if (c == 'z') {
            ++pos_;
            if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                fail("unknown identifier");
            }
            return make(at, expr::Var{});
        }
        if (c == '-') {
            ++pos_;
            return make(at, expr::Negate{parse_atom()});
        }
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return make(at, expr::Group{std::move(inner)});
        }
        if (is_digit(c)) {
            return make(at, expr::Literal{parse_unsigned_rational()});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rat parse_unsigned_rational() {
        const mpz_class num = parse_digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t den_at = pos_;
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
                fail("expected denominator digits");
            }
            const mpz_class den = parse_digits();
            if (den == 0) {
                throw ParseError("zero denominator", den_at);
            }
            return Rat(num, den);
        }
        return Rat(num, 1);
    }

    mpz_class parse_digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            fail("decimal points are not supported; write a fraction");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    friend Rat invz::parse_rational(std::string_view);

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), detail_(message), offset_(offset) {}

Rat parse_rational(std::string_view text) {
    Parser p(text);
    bool negative = false;
    if (p.pos_ < text.size() && (text[p.pos_] == '-' || text[p.pos_] == '+')) {
        negative = text[p.pos_] == '-';
        ++p.pos_;
    }
    if (p.pos_ >= text.size() || !is_digit(text[p.pos_])) {
        throw ParseError("expected digits", p.pos_);
    }
    Rat r = p.parse_unsigned_rational();
    if (p.pos_ != text.size()) {
        throw ParseError("unexpected '" + std::string(1, text[p.pos_]) + "'", p.pos_);
    }
    return negative ? -r : r;
}

PolyExprPtr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

Poly to_poly(const PolyExpr& e) {
    return std::visit(
        overloaded{
            [](const expr::Var&) { return Poly::z(); },
            [](const expr::Literal& l) { return Poly(l.value); },
            [](const expr::Negate& n) { return -to_poly(*n.operand); },
            [](const expr::Group& g) { return to_poly(*g.inner); },
            [](const expr::Binary& b) {
                const Poly lhs = to_poly(*b.lhs);
                const Poly rhs = to_poly(*b.rhs);
                switch (b.op) {
                    case '+': return lhs + rhs;
                    case '-': return lhs - rhs;
                    default: return lhs * rhs;
                }
            },
            [](const expr::Power& p) {
                const Poly base = to_poly(*p.base);
                Poly result(Rat(1));
                for (unsigned i = 0; i < p.exponent; ++i) {
                    result = result * base;
                }
                return result;
            },
        },
        e.node);
}

Poly parse_poly(std::string_view text) { return to_poly(*parse_expr(text)); }

std::vector<const PolyExpr*> top_level_factors(const PolyExpr& e) {
    if (const auto* b = std::get_if<expr::Binary>(&e.node); b && b->op == '*') {
        auto out = top_level_factors(*b->lhs);
        out.push_back(b->rhs.get());
        return out;
    }
    return {&e};
}

}  // namespace invz
