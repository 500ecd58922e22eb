#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hornsing/mpoly.hpp"
#include "hornsing/ratfun.hpp"

namespace hornsing {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Int, Var, Add, Sub, Neg, Mul, Div, Pow, Fact, Binom, Poch, Sum };
    Kind kind;
    Integer value;          // Int
    std::string name;       // Var, Sum index
    unsigned long exponent = 0;  // Pow
    std::vector<ExprPtr> kids;
};

using Bindings = std::map<std::string, Rational>;

// vars: names usable as variables; params: additional names bound to constants
ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& vars,
                   const std::vector<std::string>& params = {});
std::string print_expr(const ExprPtr& e);

Rational evaluate(const ExprPtr& e, const Bindings& env);
// polynomial/rational-function readings; combinatorial atoms are rejected
MPoly to_mpoly(const ExprPtr& e, const std::vector<std::string>& vars, const Bindings& params = {});
RatFun to_ratfun(const ExprPtr& e, const std::vector<std::string>& vars, const Bindings& params = {});

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);
RatFun parse_ratfun(const std::string& text, const std::vector<std::string>& vars);

// content-free, positive leading coefficient, graded lex
std::string print_canonical(const MPoly& p);

// ------------------------------------------------------------ spec files

struct SpecFile {
    std::string name;
    std::string kind;  // ratio | formula
    std::string tag;
    std::vector<std::string> vars{"n", "m"};
    std::string alpha1, alpha2, coefficient;
    Bindings params;
    Rational scale = 1;  // c_{n,m} times scale^(n+m)
};

SpecFile parse_spec_text(const std::string& text);
SpecFile load_spec(const std::string& path);
std::string spec_to_text(const SpecFile& s);

std::string read_file(const std::string& path);

}  // namespace hornsing
