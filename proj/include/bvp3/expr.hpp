#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bvp3::expr {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position; // byte offset into the source
};

class ExprError : public std::runtime_error {
public:
    enum class Kind {
        UnknownCharacter,
        MalformedNumber,
        UnexpectedToken,
        UnknownFunction,
        UnknownVariable,
        TrailingInput,
    };

    ExprError(Kind kind, std::size_t position, const std::string& message);
    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

/// Maximal-munch lexer.  Identifiers are [A-Za-z][A-Za-z0-9']*, so u' and
/// u'' lex as single identifiers.  Whitespace separates tokens.
std::vector<Token> tokenize(std::string_view src);

/// Expression over the variables t, u, up, upp (u' and u'' are surface
/// aliases of up/upp, and x of t) and the builtins exp, sin, cos, log,
/// sqrt, abs.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := Number | Variable | Call '(' expr ')' | '(' expr ')'
///
/// '^' is right-associative and binds tighter than unary minus, so
/// -u^2 = -(u^2) and 2^3^2 = 512.  Implicit multiplication is rejected.
class Expr {
public:
    Expr() = default;

    double eval(double t, double u, double up, double upp) const noexcept;
    std::string str() const;
    bool equals(const Expr& other) const noexcept;
    bool depends_only_on_t() const noexcept;
    bool empty() const noexcept { return root_ == nullptr; }

    struct Node;
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    const Node* root() const noexcept { return root_.get(); }

private:
    std::shared_ptr<const Node> root_;
};

Expr parse(std::span<const Token> tokens);

/// tokenize + parse in one call.
Expr parse(std::string_view src);

} // namespace bvp3::expr
