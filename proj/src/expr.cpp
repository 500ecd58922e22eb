#include "hornsing/expr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hornsing/error.hpp"
#include "hornsing/poly_algo.hpp"

namespace hornsing {

namespace {

struct Token {
    enum Type { Int, Ident, Sym, End } type;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (isspace(c)) {
            advance(1);
            continue;
        }
        Token t{Token::Sym, "", line, col};
        if (isdigit(c)) {
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.type = Token::Int;
            t.text = s.substr(i, j - i);
            advance(j - i);
        } else if (isalpha(c) || c == '_') {
            size_t j = i;
            while (j < s.size() && (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            t.type = Token::Ident;
            t.text = s.substr(i, j - i);
            advance(j - i);
        } else if (std::string("+-*/^(),").find(static_cast<char>(c)) != std::string::npos) {
            t.text = std::string(1, static_cast<char>(c));
            advance(1);
        } else {
            fail("SyntaxError", "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                    ": unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
        }
        out.push_back(t);
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

ExprPtr node(Expr::Kind k, std::vector<ExprPtr> kids = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    return e;
}

class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> names)
        : toks_(lex(text)), scope_(std::move(names)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().type != Token::End) error(peek(), "unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool is_sym(const char* s) const { return peek().type == Token::Sym && peek().text == s; }

    [[noreturn]] void error(const Token& t, const std::string& msg) const {
        fail("SyntaxError", "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
    }

    void expect(const char* s) {
        if (!is_sym(s)) error(peek(), std::string("expected '") + s + "'");
        ++pos_;
    }

    ExprPtr expr() {
        ExprPtr l = term();
        while (is_sym("+") || is_sym("-")) {
            bool plus = take().text == "+";
            l = node(plus ? Expr::Kind::Add : Expr::Kind::Sub, {l, term()});
        }
        return l;
    }

    ExprPtr term() {
        ExprPtr l = unary();
        while (is_sym("*") || is_sym("/")) {
            bool mul = take().text == "*";
            l = node(mul ? Expr::Kind::Mul : Expr::Kind::Div, {l, unary()});
        }
        return l;
    }

    ExprPtr unary() {
        if (is_sym("-")) {
            take();
            return node(Expr::Kind::Neg, {unary()});
        }
        if (is_sym("+")) {
            take();
            return unary();
        }
        return power();
    }

    unsigned long exponent() {
        const Token& t = peek();
        if (t.type != Token::Int) error(t, "exponent must be a nonnegative integer literal");
        take();
        Integer base(t.text);
        if (is_sym("^")) {
            take();
            unsigned long e = exponent();
            Integer r;
            mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
            base = r;
        }
        if (!base.fits_ulong_p() || base > 100000) error(t, "exponent too large");
        return base.get_ui();
    }

    ExprPtr power() {
        ExprPtr a = atom();
        if (is_sym("^")) {
            take();
            auto p = std::make_shared<Expr>();
            p->kind = Expr::Kind::Pow;
            p->exponent = exponent();
            p->kids = {a};
            return p;
        }
        return a;
    }

    ExprPtr atom() {
        Token t = peek();
        if (t.type == Token::Int) {
            take();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Int;
            e->value = Integer(t.text);
            return e;
        }
        if (is_sym("(")) {
            take();
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        if (t.type == Token::Ident) {
            take();
            if (is_sym("(")) {
                if (t.text == "fact") {
                    take();
                    ExprPtr a = expr();
                    expect(")");
                    return node(Expr::Kind::Fact, {a});
                }
                if (t.text == "binom" || t.text == "poch") {
                    take();
                    ExprPtr a = expr();
                    expect(",");
                    ExprPtr b = expr();
                    expect(")");
                    return node(t.text == "binom" ? Expr::Kind::Binom : Expr::Kind::Poch, {a, b});
                }
                if (t.text == "sum") {
                    take();
                    Token v = peek();
                    if (v.type != Token::Ident) error(v, "summation index expected");
                    take();
                    expect(",");
                    ExprPtr lo = expr();
                    expect(",");
                    ExprPtr hi = expr();
                    expect(",");
                    scope_.push_back(v.text);
                    ExprPtr body = expr();
                    scope_.pop_back();
                    expect(")");
                    auto e = std::make_shared<Expr>();
                    e->kind = Expr::Kind::Sum;
                    e->name = v.text;
                    e->kids = {lo, hi, body};
                    return e;
                }
                error(t, "unknown function '" + t.text + "'");
            }
            if (std::find(scope_.begin(), scope_.end(), t.text) == scope_.end())
                fail("UnknownVariable", "line " + std::to_string(t.line) + ", column " +
                                            std::to_string(t.col) + ": " + t.text);
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Var;
            e->name = t.text;
            return e;
        }
        if (t.type == Token::End) error(t, "unexpected end of input");
        error(t, "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::vector<std::string> scope_;
};

int prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string paren(const ExprPtr& e, int min_prec) {
    std::string s = print_expr(e);
    return prec(*e) < min_prec ? "(" + s + ")" : s;
}

long as_long(const Rational& q, const char* what) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        fail("EvaluationError", std::string(what) + " needs an integer argument, got " + q.get_str());
    return q.get_num().get_si();
}

}  // namespace

ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& vars,
                   const std::vector<std::string>& params) {
    std::vector<std::string> names = vars;
    names.insert(names.end(), params.begin(), params.end());
    bool blank = std::all_of(text.begin(), text.end(), [](char c) { return isspace(static_cast<unsigned char>(c)); });
    if (blank) fail("SyntaxError", "line 1, column 1: empty expression");
    return Parser(text, names).parse();
}

std::string print_expr(const ExprPtr& e) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Int: return e->value.get_str();
        case K::Var: return e->name;
        case K::Add: return print_expr(e->kids[0]) + " + " + paren(e->kids[1], 2);
        case K::Sub: return print_expr(e->kids[0]) + " - " + paren(e->kids[1], 2);
        case K::Mul: return paren(e->kids[0], 2) + "*" + paren(e->kids[1], 3);
        case K::Div: return paren(e->kids[0], 2) + "/" + paren(e->kids[1], 3);
        case K::Neg: return "-" + paren(e->kids[0], 3);
        case K::Pow: return paren(e->kids[0], 5) + "^" + std::to_string(e->exponent);
        case K::Fact: return "fact(" + print_expr(e->kids[0]) + ")";
        case K::Binom: return "binom(" + print_expr(e->kids[0]) + ", " + print_expr(e->kids[1]) + ")";
        case K::Poch: return "poch(" + print_expr(e->kids[0]) + ", " + print_expr(e->kids[1]) + ")";
        case K::Sum:
            return "sum(" + e->name + ", " + print_expr(e->kids[0]) + ", " + print_expr(e->kids[1]) + ", " +
                   print_expr(e->kids[2]) + ")";
    }
    return "";
}

Rational evaluate(const ExprPtr& e, const Bindings& env) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Int: return Rational(e->value);
        case K::Var: {
            auto it = env.find(e->name);
            if (it == env.end()) fail("EvaluationError", "unbound name " + e->name);
            return it->second;
        }
        case K::Add: return evaluate(e->kids[0], env) + evaluate(e->kids[1], env);
        case K::Sub: return evaluate(e->kids[0], env) - evaluate(e->kids[1], env);
        case K::Neg: return -evaluate(e->kids[0], env);
        case K::Mul: return evaluate(e->kids[0], env) * evaluate(e->kids[1], env);
        case K::Div: {
            Rational d = evaluate(e->kids[1], env);
            if (d == 0) fail("EvaluationError", "division by zero");
            return evaluate(e->kids[0], env) / d;
        }
        case K::Pow: return rpow(evaluate(e->kids[0], env), static_cast<long>(e->exponent));
        case K::Fact: return Rational(factorial(as_long(evaluate(e->kids[0], env), "fact")));
        case K::Binom:
            return Rational(binomial(as_long(evaluate(e->kids[0], env), "binom"),
                                     as_long(evaluate(e->kids[1], env), "binom")));
        case K::Poch: {
            long n = as_long(evaluate(e->kids[1], env), "poch");
            return pochhammer(evaluate(e->kids[0], env), n);
        }
        case K::Sum: {
            long lo = as_long(evaluate(e->kids[0], env), "sum");
            long hi = as_long(evaluate(e->kids[1], env), "sum");
            Bindings inner = env;
            Rational s = 0;
            for (long k = lo; k <= hi; ++k) {
                inner[e->name] = k;
                s += evaluate(e->kids[2], inner);
            }
            return s;
        }
    }
    return 0;
}

RatFun to_ratfun(const ExprPtr& e, const std::vector<std::string>& vars, const Bindings& params) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Int: return RatFun(MPoly(vars, Rational(e->value)));
        case K::Var: {
            auto it = params.find(e->name);
            if (it != params.end()) return RatFun(MPoly(vars, it->second));
            return RatFun(MPoly::variable(vars, e->name));
        }
        case K::Add: return to_ratfun(e->kids[0], vars, params) + to_ratfun(e->kids[1], vars, params);
        case K::Sub: return to_ratfun(e->kids[0], vars, params) - to_ratfun(e->kids[1], vars, params);
        case K::Neg: return -to_ratfun(e->kids[0], vars, params);
        case K::Mul: return to_ratfun(e->kids[0], vars, params) * to_ratfun(e->kids[1], vars, params);
        case K::Div: return to_ratfun(e->kids[0], vars, params) / to_ratfun(e->kids[1], vars, params);
        case K::Pow: return to_ratfun(e->kids[0], vars, params).pow(static_cast<int>(e->exponent));
        default: fail("NotPolynomial", "combinatorial atom in polynomial context: " + print_expr(e));
    }
}

MPoly to_mpoly(const ExprPtr& e, const std::vector<std::string>& vars, const Bindings& params) {
    RatFun r = to_ratfun(e, vars, params);
    if (!r.is_polynomial()) fail("NotPolynomial", print_expr(e));
    return r.num() * (1 / r.den().constant_term());
}

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return to_mpoly(parse_expr(text, vars), vars).with_vars(vars);
}

RatFun parse_ratfun(const std::string& text, const std::vector<std::string>& vars) {
    return to_ratfun(parse_expr(text, vars), vars).with_vars(vars);
}

std::string print_canonical(const MPoly& p) {
    if (p.is_zero()) return "0";
    return primitive(p).str();
}

// ------------------------------------------------------------ spec files

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

SpecFile parse_spec_text(const std::string& text) {
    SpecFile s;
    std::istringstream in(text);
    std::string line;
    bool header = false, have_vars = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line == "[spec]") {
            if (header) fail("ValidationError", "duplicate [spec] header");
            header = true;
            continue;
        }
        if (!header) fail("ValidationError", "header: missing [spec] before line " + std::to_string(lineno));
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("ValidationError", "line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "name") s.name = val;
        else if (key == "kind") s.kind = val;
        else if (key == "tag") s.tag = val;
        else if (key == "vars") {
            std::istringstream vs(val);
            s.vars.clear();
            for (std::string v; vs >> v;) s.vars.push_back(v);
            have_vars = true;
        } else if (key == "alpha1") s.alpha1 = val;
        else if (key == "alpha2") s.alpha2 = val;
        else if (key == "coefficient") s.coefficient = val;
        else if (key == "scale") s.scale = parse_rational(val);
        else if (key.rfind("param.", 0) == 0) s.params[key.substr(6)] = parse_rational(val);
        else fail("ValidationError", key + ": unknown field");
    }
    if (!header) fail("ValidationError", "header: missing [spec]");
    if (s.name.empty()) fail("ValidationError", "name: missing");
    if (have_vars && s.vars.size() != 2) fail("ValidationError", "vars: exactly two index names required");
    std::vector<std::string> pnames;
    for (const auto& [k, v] : s.params) pnames.push_back(k);
    auto check = [&](const std::string& field, const std::string& val) {
        if (val.empty()) fail("ValidationError", field + ": missing");
        try {
            parse_expr(val, s.vars, pnames);
        } catch (const Error& e) {
            fail("ValidationError", field + ": " + e.what());
        }
    };
    if (s.kind == "ratio") {
        check("alpha1", s.alpha1);
        check("alpha2", s.alpha2);
        if (!s.coefficient.empty()) fail("ValidationError", "coefficient: not allowed for ratio kind");
        RatFun a1, a2;
        try {
            a1 = to_ratfun(parse_expr(s.alpha1, s.vars, pnames), s.vars, s.params);
            a2 = to_ratfun(parse_expr(s.alpha2, s.vars, pnames), s.vars, s.params);
        } catch (const Error& e) {
            fail("ValidationError", std::string("alpha1/alpha2: ") + e.what());
        }
        if (!ratios_compatible(a1, a2, s.vars[0], s.vars[1]))
            fail("ValidationError", "alpha1/alpha2: incompatible ratios");
    } else if (s.kind == "formula") {
        check("coefficient", s.coefficient);
        if (!s.alpha1.empty() || !s.alpha2.empty()) fail("ValidationError", "alpha1: not allowed for formula kind");
    } else {
        fail("ValidationError", "kind: expected ratio or formula");
    }
    return s;
}

SpecFile load_spec(const std::string& path) { return parse_spec_text(read_file(path)); }

std::string spec_to_text(const SpecFile& s) {
    std::string out = "[spec]\nname = " + s.name + "\nkind = " + s.kind + "\n";
    if (!s.tag.empty()) out += "tag = " + s.tag + "\n";
    out += "vars = " + s.vars[0] + " " + s.vars[1] + "\n";
    for (const auto& [k, v] : s.params) out += "param." + k + " = " + v.get_str() + "\n";
    if (s.scale != 1) out += "scale = " + s.scale.get_str() + "\n";
    if (s.kind == "ratio") out += "alpha1 = " + s.alpha1 + "\nalpha2 = " + s.alpha2 + "\n";
    else out += "coefficient = " + s.coefficient + "\n";
    return out;
}

}  // namespace hornsing
