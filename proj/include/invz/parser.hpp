#pragma once

/**
 * @file parser.hpp
 * @brief Rational literals and polynomial expressions in z.
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' uint)?
 *   atom   := 'z' | rational | '(' expr ')' | '-' atom
 *
 * A rational literal is digits with an optional "/digits"; there is no
 * division operator. Whitespace between tokens is ignored.
 */

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invz/poly.hpp"
#include "invz/rat.hpp"

namespace invz {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    /// Byte offset into the input where the problem was detected.
    std::size_t offset() const { return offset_; }
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

struct PolyExpr;
using PolyExprPtr = std::unique_ptr<PolyExpr>;

namespace expr {
struct Var {};
struct Literal {
    Rat value;
};
struct Negate {
    PolyExprPtr operand;
};
struct Binary {
    char op;  // '+', '-' or '*'
    PolyExprPtr lhs;
    PolyExprPtr rhs;
};
struct Power {
    PolyExprPtr base;
    unsigned exponent;
};
struct Group {
    PolyExprPtr inner;
};
}  // namespace expr

struct PolyExpr {
    std::variant<expr::Var, expr::Literal, expr::Negate, expr::Binary, expr::Power, expr::Group> node;
    std::size_t offset = 0;
};

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 4096;

/// "[-]digits[/digits]" covering the whole text.
Rat parse_rational(std::string_view text);

PolyExprPtr parse_expr(std::string_view text);

/// Expands an expression tree into a polynomial.
Poly to_poly(const PolyExpr& e);

Poly parse_poly(std::string_view text);

/// Top-level '*' operands of an expression, with groups left intact.
std::vector<const PolyExpr*> top_level_factors(const PolyExpr& e);

}  // namespace invz
