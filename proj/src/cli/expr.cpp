#include "prab/cli/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace prab::cli {

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

struct Expr::Node {
    enum class Op { num, var, add, sub, mul, pow, neg, exp, sin, cos } op;
    double value = 0.0;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;

    double eval(double t) const {
        switch (op) {
            case Op::num: return value;
            case Op::var: return t;
            case Op::add: return a->eval(t) + b->eval(t);
            case Op::sub: return a->eval(t) - b->eval(t);
            case Op::mul: return a->eval(t) * b->eval(t);
            case Op::pow: return std::pow(a->eval(t), b->eval(t));
            case Op::neg: return -a->eval(t);
            case Op::exp: return std::exp(a->eval(t));
            case Op::sin: return std::sin(a->eval(t));
            case Op::cos: return std::cos(a->eval(t));
        }
        return 0.0;
    }

    bool uses_t() const {
        if (op == Op::var) return true;
        return (a && a->uses_t()) || (b && b->uses_t());
    }
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;
using Op = Expr::Node::Op;

NodeP make(Op op, NodeP a = nullptr, NodeP b = nullptr, double v = 0.0) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    n->value = v;
    return n;
}

class Parser {
public:
    Parser(std::string_view s, int line, int column) : s_(s), line_(line), col0_(column) {}

    NodeP parse_all() {
        NodeP e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodeP expr() {
        NodeP lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = make(Op::add, lhs, term());
            } else if (eat('-')) {
                lhs = make(Op::sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodeP term() {
        NodeP lhs = unary();
        while (eat('*')) lhs = make(Op::mul, lhs, unary());
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') fail("division is not part of the grammar");
        return lhs;
    }

    NodeP unary() {
        if (eat('-')) return make(Op::neg, unary());
        return power();
    }

    NodeP power() {
        NodeP base = primary();
        if (eat('^')) return make(Op::pow, base, unary());
        return base;
    }

    NodeP primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodeP e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view word = s_.substr(start, pos_ - start);
            if (word == "t") return make(Op::var);
            if (word == "pi") return make(Op::num, nullptr, nullptr, std::numbers::pi);
            Op op;
            if (word == "exp") {
                op = Op::exp;
            } else if (word == "sin") {
                op = Op::sin;
            } else if (word == "cos") {
                op = Op::cos;
            } else {
                pos_ = start;
                fail("unknown name '" + std::string(word) + "'");
            }
            if (!eat('(')) fail("expected '(' after " + std::string(word));
            NodeP arg = expr();
            if (!eat(')')) fail("expected ')'");
            return make(op, arg);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodeP number() {
        const std::string rest(s_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return make(Op::num, nullptr, nullptr, v);
    }

    std::string_view s_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view src, int line, int column) {
    Expr e;
    e.root_ = Parser(src, line, column).parse_all();
    e.source_ = std::string(src);
    return e;
}

double Expr::operator()(double t) const { return root_->eval(t); }

bool Expr::is_constant() const noexcept { return !root_->uses_t(); }

}  // namespace prab::cli
