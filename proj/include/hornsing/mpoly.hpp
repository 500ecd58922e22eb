#pragma once
#include <map>
#include <string>
#include <vector>

#include "hornsing/rational.hpp"

namespace hornsing {

using Monomial = std::vector<int>;

// Graded lex: total degree first, then lexicographic with the first declared
// variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Rational, GrlexLess>;

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars);
    MPoly(std::vector<std::string> vars, const Rational& c);

    static MPoly variable(const std::vector<std::string>& vars, const std::string& name);
    static MPoly monomial(const std::vector<std::string>& vars, const Monomial& m, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    int index_of(const std::string& name) const;
    size_t require_index(const std::string& name) const;
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    int total_degree() const;
    int degree_in(size_t i) const;
    int min_degree_in(size_t i) const;
    bool involves(size_t i) const { return degree_in(i) > 0; }
    std::vector<size_t> occurring() const;
    const Monomial& lead_monomial() const;
    const Rational& lead_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    MPoly operator-() const;
    MPoly pow(unsigned e) const;

    MPoly derivative(size_t i) const;
    MPoly derivative(const std::string& v) const { return derivative(require_index(v)); }
    // coefficient of v_i^k for k = 0..deg, each with the v_i exponent zeroed
    std::vector<MPoly> coefficients_in(size_t i) const;
    static MPoly from_coefficients(const std::vector<std::string>& vars, size_t i,
                                   const std::vector<MPoly>& cs);
    MPoly coefficient_of(size_t i, int k) const;
    // leading homogeneous part (terms of top total degree)
    MPoly top_homogeneous() const;

    Rational evaluate(const std::vector<Rational>& point) const;
    MPoly substitute(size_t i, const Rational& v) const;
    MPoly substitute(size_t i, const MPoly& v) const;
    // images[k] replaces variable k; all images share one variable list
    MPoly compose(const std::vector<MPoly>& images) const;
    // same polynomial over another variable list (looked up by name)
    MPoly with_vars(const std::vector<std::string>& vars) const;
    MPoly shifted_monomial(const Monomial& m) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // exact, unnormalized text in the expr_io grammar
    std::string str() const;

private:
    void align_with(const MPoly& o, MPoly& other_aligned) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(MPoly a, const Rational& c);
MPoly operator*(const Rational& c, MPoly a);

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Dense univariate polynomial over Q, low degree first.
struct UPoly {
    std::vector<Rational> c;

    UPoly() = default;
    explicit UPoly(std::vector<Rational> cs) : c(std::move(cs)) { trim(); }
    static UPoly constant(const Rational& a) { return UPoly(std::vector<Rational>{a}); }
    static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rational lead() const { return c.empty() ? Rational(0) : c.back(); }
    Rational at(size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    Rational eval(const Rational& t) const;
    UPoly derivative() const;
    UPoly shift(const Rational& t0) const;  // p(t + t0)
    UPoly monic() const;

    bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const Rational& k, const UPoly& a);
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic
UPoly upoly_pow(const UPoly& a, unsigned e);

UPoly to_upoly(const MPoly& p, size_t var);
MPoly from_upoly(const UPoly& p, const std::vector<std::string>& vars, size_t var);

}  // namespace hornsing
