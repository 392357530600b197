#pragma once

// Expressions in t for coefficients and forcing terms.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 't' | 'pi' | ('exp' | 'sin' | 'cos') '(' expr ')' | '(' expr ')'
//
// There is no division; every expression is defined for every t.

#include <memory>
#include <string>
#include <string_view>

#include "prab/errors.hpp"

namespace prab::cli {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column);
    const char* kind() const noexcept override { return "ParseError"; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class Expr {
public:
    struct Node;

    /// `line` and `column` locate the first character of `src` for error reports.
    static Expr parse(std::string_view src, int line = 1, int column = 1);

    double operator()(double t) const;
    /// True when the expression does not mention t.
    bool is_constant() const noexcept;
    const std::string& source() const noexcept { return source_; }

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

}  // namespace prab::cli
