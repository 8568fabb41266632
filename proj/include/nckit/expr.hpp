#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nckit/forms.hpp"
#include "nckit/poly.hpp"
#include "nckit/star.hpp"

namespace nckit {

// Grammar, loosest first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '.') unary)*        '*' star/form product, '.' pointwise
//   unary   := '-' unary | '~' unary | power     '~' conjugation
//   power   := primary ('^' integer)?            pointwise power
//   primary := number | number '/' number | 'i' | t | x1 | x2 | x3 | eps
//            | dt | dx1 | dx2 | dx3 | D0..D3 '(' sum ')' | 'd' '(' sum ')' | '(' sum ')'
struct Expr {
    enum class Kind { literal, variable, basis, star, pointwise, sum, difference, negate, partial, conj, ext_d, power };

    Kind kind = Kind::literal;
    CRat value;    // literal
    int index = 0;  // variable (Var), basis / partial (mu), power exponent
    std::vector<std::unique_ptr<Expr>> args;
    int line = 1;
    int column = 1;
};

using ExprPtr = std::unique_ptr<Expr>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Raised when an operator is applied to a form of the wrong degree.
class GradingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExprPtr parse(const std::string& src);

// Evaluates in the deformed algebra; functions are degree-0 forms.
DifferentialForm evaluate(const Expr& e, const StarContext& ctx);

// Canonical text: terms in descending graded order, monomials as pointwise
// products, forms with coefficients on the left. Parses back to the same value.
std::string render(const Poly& p);
std::string render(const DifferentialForm& f);
std::string render(const CRat& c);

// parse, evaluate, render
std::string reduce(const std::string& src, const StarContext& ctx);

// Parses a polynomial in t alone (theta entries).
Poly parse_t_polynomial(const std::string& src);

}  // namespace nckit
