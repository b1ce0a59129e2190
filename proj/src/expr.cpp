#include "bvp3/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace bvp3::expr {

ExprError::ExprError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " (offset " + std::to_string(position) + ")"),
      kind_(kind),
      position_(position) {}

namespace {

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ident_continue(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        switch (c) {
        case '+': out.push_back({TokenKind::Plus, "+", start}); ++i; continue;
        case '-': out.push_back({TokenKind::Minus, "-", start}); ++i; continue;
        case '*': out.push_back({TokenKind::Star, "*", start}); ++i; continue;
        case '/': out.push_back({TokenKind::Slash, "/", start}); ++i; continue;
        case '^': out.push_back({TokenKind::Caret, "^", start}); ++i; continue;
        case '(': out.push_back({TokenKind::LParen, "(", start}); ++i; continue;
        case ')': out.push_back({TokenKind::RParen, ")", start}); ++i; continue;
        case ',': out.push_back({TokenKind::Comma, ",", start}); ++i; continue;
        default: break;
        }
        if (digit(c) || (c == '.' && i + 1 < src.size() && digit(src[i + 1]))) {
            while (i < src.size() && digit(src[i])) ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                while (i < src.size() && digit(src[i])) ++i;
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
                if (j >= src.size() || !digit(src[j])) {
                    throw ExprError(ExprError::Kind::MalformedNumber, start, "malformed number");
                }
                i = j;
                while (i < src.size() && digit(src[i])) ++i;
            }
            out.push_back({TokenKind::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (ident_start(c)) {
            while (i < src.size() && ident_continue(src[i])) ++i;
            out.push_back({TokenKind::Ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        throw ExprError(ExprError::Kind::UnknownCharacter, start,
                        std::string("unknown character '") + c + "'");
    }
    return out;
}

enum class Var { T, U, Up, Upp };
enum class Builtin { Exp, Sin, Cos, Log, Sqrt, Abs };

struct Expr::Node {
    enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
    Op op;
    double value = 0.0;        // Const
    Var var = Var::T;          // Var
    Builtin fn = Builtin::Exp; // Call
    std::shared_ptr<const Node> a, b;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_const(double v) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Const;
    n->value = v;
    return n;
}

NodePtr make_var(Var v) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Var;
    n->var = v;
    return n;
}

NodePtr make_unary(NodePtr a) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Neg;
    n->a = std::move(a);
    return n;
}

NodePtr make_binary(Node::Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_call(Builtin fn, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Call;
    n->fn = fn;
    n->a = std::move(a);
    return n;
}

bool lookup_var(const std::string& name, Var& out) {
    if (name == "t" || name == "x") { out = Var::T; return true; }
    if (name == "u") { out = Var::U; return true; }
    if (name == "up" || name == "u'") { out = Var::Up; return true; }
    if (name == "upp" || name == "u''") { out = Var::Upp; return true; }
    return false;
}

bool lookup_builtin(const std::string& name, Builtin& out) {
    if (name == "exp") { out = Builtin::Exp; return true; }
    if (name == "sin") { out = Builtin::Sin; return true; }
    if (name == "cos") { out = Builtin::Cos; return true; }
    if (name == "log") { out = Builtin::Log; return true; }
    if (name == "sqrt") { out = Builtin::Sqrt; return true; }
    if (name == "abs") { out = Builtin::Abs; return true; }
    return false;
}

class Parser {
public:
    explicit Parser(std::span<const Token> tokens, std::size_t src_size)
        : tokens_(tokens), end_pos_(src_size) {}

    NodePtr run() {
        NodePtr e = expression();
        if (pos_ < tokens_.size()) {
            throw ExprError(ExprError::Kind::TrailingInput, tokens_[pos_].position,
                            "trailing input after expression");
        }
        return e;
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t end_pos_;

    const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

    bool accept(TokenKind k) {
        if (pos_ < tokens_.size() && tokens_[pos_].kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const std::size_t at = pos_ < tokens_.size() ? tokens_[pos_].position : end_pos_;
        const std::string got =
            pos_ < tokens_.size() ? "'" + tokens_[pos_].lexeme + "'" : "end of input";
        throw ExprError(ExprError::Kind::UnexpectedToken, at, "expected " + expected + ", got " + got);
    }

    NodePtr expression() {
        NodePtr e = term();
        while (const Token* t = peek()) {
            if (t->kind == TokenKind::Plus) { ++pos_; e = make_binary(Node::Op::Add, e, term()); }
            else if (t->kind == TokenKind::Minus) { ++pos_; e = make_binary(Node::Op::Sub, e, term()); }
            else break;
        }
        return e;
    }

    NodePtr term() {
        NodePtr e = factor();
        while (const Token* t = peek()) {
            if (t->kind == TokenKind::Star) { ++pos_; e = make_binary(Node::Op::Mul, e, factor()); }
            else if (t->kind == TokenKind::Slash) { ++pos_; e = make_binary(Node::Op::Div, e, factor()); }
            else break;
        }
        return e;
    }

    NodePtr factor() {
        if (accept(TokenKind::Minus)) return make_unary(factor());
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept(TokenKind::Caret)) return make_binary(Node::Op::Pow, base, factor());
        return base;
    }

    NodePtr atom() {
        const Token* t = peek();
        if (!t) fail("a number, variable or '('");
        if (t->kind == TokenKind::Number) {
            ++pos_;
            double v = 0.0;
            const auto res = std::from_chars(t->lexeme.data(), t->lexeme.data() + t->lexeme.size(), v);
            if (res.ec != std::errc{} || res.ptr != t->lexeme.data() + t->lexeme.size()) {
                throw ExprError(ExprError::Kind::MalformedNumber, t->position, "malformed number");
            }
            return make_const(v);
        }
        if (t->kind == TokenKind::Ident) {
            ++pos_;
            if (accept(TokenKind::LParen)) {
                Builtin fn;
                if (!lookup_builtin(t->lexeme, fn)) {
                    throw ExprError(ExprError::Kind::UnknownFunction, t->position,
                                    "unknown function '" + t->lexeme + "'");
                }
                NodePtr arg = expression();
                if (!accept(TokenKind::RParen)) fail("')'");
                return make_call(fn, arg);
            }
            Var v;
            if (!lookup_var(t->lexeme, v)) {
                throw ExprError(ExprError::Kind::UnknownVariable, t->position,
                                "unknown variable '" + t->lexeme + "'");
            }
            return make_var(v);
        }
        if (t->kind == TokenKind::LParen) {
            ++pos_;
            NodePtr e = expression();
            if (!accept(TokenKind::RParen)) fail("')'");
            return e;
        }
        fail("a number, variable or '('");
    }
};

double eval_node(const Node* n, double t, double u, double up, double upp) noexcept {
    switch (n->op) {
    case Node::Op::Const: return n->value;
    case Node::Op::Var:
        switch (n->var) {
        case Var::T: return t;
        case Var::U: return u;
        case Var::Up: return up;
        case Var::Upp: return upp;
        }
        return 0.0;
    case Node::Op::Neg: return -eval_node(n->a.get(), t, u, up, upp);
    case Node::Op::Add:
        return eval_node(n->a.get(), t, u, up, upp) + eval_node(n->b.get(), t, u, up, upp);
    case Node::Op::Sub:
        return eval_node(n->a.get(), t, u, up, upp) - eval_node(n->b.get(), t, u, up, upp);
    case Node::Op::Mul:
        return eval_node(n->a.get(), t, u, up, upp) * eval_node(n->b.get(), t, u, up, upp);
    case Node::Op::Div:
        return eval_node(n->a.get(), t, u, up, upp) / eval_node(n->b.get(), t, u, up, upp);
    case Node::Op::Pow:
        return std::pow(eval_node(n->a.get(), t, u, up, upp), eval_node(n->b.get(), t, u, up, upp));
    case Node::Op::Call: {
        const double a = eval_node(n->a.get(), t, u, up, upp);
        switch (n->fn) {
        case Builtin::Exp: return std::exp(a);
        case Builtin::Sin: return std::sin(a);
        case Builtin::Cos: return std::cos(a);
        case Builtin::Log: return std::log(a);
        case Builtin::Sqrt: return std::sqrt(a);
        case Builtin::Abs: return std::abs(a);
        }
        return 0.0;
    }
    }
    return 0.0;
}

// precedence levels for printing: how strongly a context binds
enum : int { kAdd = 1, kMul = 2, kUnary = 3, kPow = 4, kAtom = 5 };

int node_level(const Node* n) {
    switch (n->op) {
    case Node::Op::Add:
    case Node::Op::Sub: return kAdd;
    case Node::Op::Mul:
    case Node::Op::Div: return kMul;
    case Node::Op::Neg: return kUnary;
    case Node::Op::Pow: return kPow;
    default: return kAtom;
    }
}

void print_node(const Node* n, std::string& out, int min_level) {
    const int level = node_level(n);
    const bool parens = level < min_level;
    if (parens) out += '(';
    switch (n->op) {
    case Node::Op::Const: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n->value);
        out += buf;
        break;
    }
    case Node::Op::Var:
        switch (n->var) {
        case Var::T: out += 't'; break;
        case Var::U: out += 'u'; break;
        case Var::Up: out += "up"; break;
        case Var::Upp: out += "upp"; break;
        }
        break;
    case Node::Op::Neg:
        out += '-';
        print_node(n->a.get(), out, kUnary);
        break;
    case Node::Op::Add:
    case Node::Op::Sub:
        print_node(n->a.get(), out, kAdd);
        out += n->op == Node::Op::Add ? " + " : " - ";
        print_node(n->b.get(), out, kAdd + 1);
        break;
    case Node::Op::Mul:
    case Node::Op::Div:
        print_node(n->a.get(), out, kMul);
        out += n->op == Node::Op::Mul ? "*" : "/";
        print_node(n->b.get(), out, kMul + 1);
        break;
    case Node::Op::Pow:
        print_node(n->a.get(), out, kAtom); // grammar: the base of '^' is an atom
        out += '^';
        print_node(n->b.get(), out, kUnary);
        break;
    case Node::Op::Call:
        switch (n->fn) {
        case Builtin::Exp: out += "exp"; break;
        case Builtin::Sin: out += "sin"; break;
        case Builtin::Cos: out += "cos"; break;
        case Builtin::Log: out += "log"; break;
        case Builtin::Sqrt: out += "sqrt"; break;
        case Builtin::Abs: out += "abs"; break;
        }
        out += '(';
        print_node(n->a.get(), out, kAdd);
        out += ')';
        break;
    }
    if (parens) out += ')';
}

bool nodes_equal(const Node* a, const Node* b) noexcept {
    if (a == b) return true;
    if (!a || !b || a->op != b->op) return false;
    switch (a->op) {
    case Node::Op::Const:
        return a->value == b->value ||
               (std::isnan(a->value) && std::isnan(b->value));
    case Node::Op::Var: return a->var == b->var;
    case Node::Op::Neg: return nodes_equal(a->a.get(), b->a.get());
    case Node::Op::Call:
        return a->fn == b->fn && nodes_equal(a->a.get(), b->a.get());
    default:
        return nodes_equal(a->a.get(), b->a.get()) && nodes_equal(a->b.get(), b->b.get());
    }
}

bool node_only_t(const Node* n) noexcept {
    switch (n->op) {
    case Node::Op::Const: return true;
    case Node::Op::Var: return n->var == Var::T;
    case Node::Op::Neg:
    case Node::Op::Call: return node_only_t(n->a.get());
    default: return node_only_t(n->a.get()) && node_only_t(n->b.get());
    }
}

} // namespace

double Expr::eval(double t, double u, double up, double upp) const noexcept {
    if (!root_) return std::numeric_limits<double>::quiet_NaN();
    return eval_node(root_.get(), t, u, up, upp);
}

std::string Expr::str() const {
    std::string out;
    if (root_) print_node(root_.get(), out, 0);
    return out;
}

bool Expr::equals(const Expr& other) const noexcept {
    return nodes_equal(root_.get(), other.root_.get());
}

bool Expr::depends_only_on_t() const noexcept {
    return !root_ || node_only_t(root_.get());
}

Expr parse(std::span<const Token> tokens) {
    std::size_t end = 0;
    for (const Token& t : tokens) end = std::max(end, t.position + t.lexeme.size());
    return Expr(Parser(tokens, end).run());
}

Expr parse(std::string_view src) {
    const std::vector<Token> tokens = tokenize(src);
    return Expr(Parser(tokens, src.size()).run());
}

} // namespace bvp3::expr
