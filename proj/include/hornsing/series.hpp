#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hornsing/expr.hpp"
#include "hornsing/ratfun.hpp"

namespace hornsing {

// c_{n+1,m}/c_{n,m} = alpha1, c_{n,m+1}/c_{n,m} = alpha2, c_{0,0} = 1
struct HyperSpec {
    RatFun alpha1, alpha2;
    std::string n = "n", m = "m";
};

class BiSeries {
public:
    BiSeries() = default;
    explicit BiSeries(int order);

    int order() const { return order_; }
    const Rational& at(int n, int m) const { return c_[index(n, m)]; }
    Rational& at(int n, int m) { return c_[index(n, m)]; }
    // zero outside the triangle
    Rational get(int n, int m) const;
    BiSeries truncated(int order) const;
    bool operator==(const BiSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

    static size_t index(int n, int m) {
        size_t d = static_cast<size_t>(n + m);
        return d * (d + 1) / 2 + static_cast<size_t>(m);
    }

private:
    int order_ = -1;
    std::vector<Rational> c_;
};

struct UniSeries {
    int order = -1;
    std::vector<Rational> c;

    UniSeries() = default;
    explicit UniSeries(int n) : order(n), c(static_cast<size_t>(n + 1)) {}
    explicit UniSeries(std::vector<Rational> cs) : order(static_cast<int>(cs.size()) - 1), c(std::move(cs)) {}
    Rational get(int k) const { return k >= 0 && k <= order ? c[k] : Rational(0); }
    int valuation() const;  // order+1 when zero through the window
    UniSeries truncated(int n) const;
    bool operator==(const UniSeries& o) const { return order == o.order && c == o.c; }
};

UniSeries operator+(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const UniSeries& a, const UniSeries& b);
UniSeries operator*(const Rational& k, const UniSeries& a);
UniSeries derivative(const UniSeries& a);
UniSeries geometric_series(int n);

bool check_compatibility(const HyperSpec& s);
BiSeries expand_from_ratios(const HyperSpec& s, int N);

// coefficient formula in the two index names, parameters bound
BiSeries expand_from_formula(const ExprPtr& f, const std::vector<std::string>& idx, const Bindings& params, int N);
BiSeries expand_from_formula_serial(const ExprPtr& f, const std::vector<std::string>& idx,
                                    const Bindings& params, int N);

// Taylor expansion at 0 of a univariate rational function
UniSeries taylor(const RatFun& g, int N);

UniSeries restrict(const BiSeries& b, const RatFun& xp, const RatFun& yp, int N);
UniSeries restrict_serial(const BiSeries& b, const RatFun& xp, const RatFun& yp, int N);
// bi-order restrict() wants for a result through t^N
int restrict_needed(const RatFun& xp, const RatFun& yp, int N);

UniSeries hadamard(const UniSeries& a, const UniSeries& b);
UniSeries compose_rational(const UniSeries& a, const RatFun& g, int N);

UniSeries diagonal_sum(const BiSeries& b);
// sum prod (a_i)_k / prod (b_j)_k * z^k / k!
UniSeries hypergeometric_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& z, int N);  // coefficient k = sum_{n+m=k} c_{n,m}

// A spec file turned into something expandable.
struct SeriesSource {
    std::string name, tag;
    std::optional<HyperSpec> ratios;
    ExprPtr formula;
    std::vector<std::string> idx{"n", "m"};
    Bindings params;
    Rational scale = 1;
};

SeriesSource series_source(const SpecFile& s);
BiSeries expand(const SeriesSource& src, int N);

// series files: "vars: x y" then "n m num/den" lines
std::string series_to_text(const BiSeries& b, const std::vector<std::string>& vars = {"x", "y"});
std::string series_to_text(const UniSeries& s, const std::string& var = "t");
UniSeries uniseries_from_text(const std::string& text);
BiSeries biseries_from_text(const std::string& text);

}  // namespace hornsing
