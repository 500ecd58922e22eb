#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hornsing/error.hpp"
#include "hornsing/expr.hpp"
#include "hornsing/linalg.hpp"
#include "hornsing/poly_algo.hpp"
#include "hornsing/registry.hpp"
#include "property_suites.hpp"

using namespace hornsing;

namespace {
const std::vector<std::string> XY{"x", "y"};
MPoly P(const std::string& s, const std::vector<std::string>& v = XY) { return parse_poly(s, v); }

template <class F>
std::string error_name(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}
}  // namespace

TEST_CASE("rationals stay reduced") {
    Rational q = parse_rational("6/-4");
    CHECK(q == Rational(-3, 2));
    CHECK(q.get_den() == 2);
    CHECK(parse_rational("0/7").get_den() == 1);
    CHECK(error_name([] { parse_rational("1/0"); }) == "DivisionByZero");
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(6, 3) == 20);
    CHECK(pochhammer(Rational(1, 2), 0) == 1);
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(denominator_lcm({Rational(1, 4), Rational(5, 6)}) == 12);
    CHECK(numerator_gcd({Rational(6), Rational(-9, 2)}) == 3);
}

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(P("x^2-y^2"), P("x-y")) == P("x-y"));
    CHECK(poly_gcd(P("x^3*y+7"), P("1")) == P("1"));
    CHECK(poly_gcd(MPoly(XY), MPoly(XY)).is_zero());
    MPoly h = P("x*y-3*x+1");
    CHECK(divides(h, poly_gcd(h * P("x+y^2"), h * P("x-2"))));
}

TEST_CASE("resultant examples") {
    MPoly r = resultant(P("x^2-2", {"x"}), P("x-1", {"x"}), "x");
    CHECK(r.is_constant());
    CHECK(abs(r.constant_term()) == 1);

    std::vector<std::string> v{"x", "y", "A"};
    MPoly a = parse_poly("27*x*(A+1)^3-A^3", v), b = parse_poly("27*y*(A+1)^3-1", v);
    MPoly disc = squarefree_primitive(resultant(a, b, "A")).with_vars(XY);
    CHECK(print_canonical(disc) == print_canonical(registry_curve("cand").F));

    std::vector<std::string> w{"x", "y", "t"};
    MPoly c = parse_poly("16*x*(t+1)^2-t^2", w), d = parse_poly("16*y*(t+1)^2-1", w);
    CHECK(print_canonical(squarefree_primitive(resultant(c, d, "t")).with_vars(XY)) ==
          "256*x^2 - 512*x*y + 256*y^2 - 32*x - 32*y + 1");

    CHECK(error_name([] { resultant(P("x+y"), P("y^2+1"), "x"); }) == "DegreeZero");
}

TEST_CASE("discriminant examples") {
    std::vector<std::string> v{"x", "b", "c"};
    CHECK(discriminant(parse_poly("x^2+b*x+c", v), "x") == parse_poly("b^2-4*c", v));
    std::vector<std::string> kr{"k", "r"};
    MPoly D = discriminant(parse_poly("-r*k^2+(3*r^2-1)*k-r", kr), "k");
    CHECK(primitive(D) == primitive(parse_poly("(3*r-1)*(3*r+1)*(r-1)*(r+1)", kr)));
    MPoly d3 = discriminant(P("x^3-x", {"x"}), "x");
    CHECK(d3.is_constant());
    CHECK(abs(d3.constant_term()) == 4);
    CHECK(error_name([] { discriminant(P("x+1", {"x"}), "x"); }) == "DegreeTooLow");
}

TEST_CASE("squarefree primitive part") {
    CHECK(squarefree_primitive(P("4*(x-y)^2*x")) == primitive(P("x*(x-y)")));
    CHECK(squarefree_primitive(P("-3*(2*x+2*y)")) == P("x+y"));
    CHECK(squarefree_primitive(P("(1-27*x)^2*(1-216*x)", {"x"})) ==
          primitive(P("(1-27*x)*(1-216*x)", {"x"})));
    CHECK(error_name([] { squarefree_primitive(MPoly(XY)); }) == "ZeroInput");
}

TEST_CASE("squarefree primitive: idempotent, blind to scalars and squares") {
    std::mt19937 g(props::SEED);
    for (int i = 0; i < 100; ++i) {
        MPoly f = props::random_poly(g, XY, {2, 2}, 3);
        if (f.is_constant()) continue;
        MPoly s = squarefree_primitive(f);
        CHECK(squarefree_primitive(s) == s);
        MPoly q = props::random_poly(g, XY, {1, 1}, 2);
        if (q.is_zero()) continue;
        CHECK(squarefree_primitive(Rational(-7, 3) * f * q * q) == squarefree_primitive(f * q));
    }
}

TEST_CASE("nullspace examples") {
    RMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(nullspace(id, 3).empty());
    auto ns = nullspace({{1, 1}}, 2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]);
    CHECK(ns[0][0] != 0);

    RMatrix m{{1, 2, 0, 1, 3, -1}, {0, 1, 1, 0, 2, 2}, {2, 0, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1}};
    auto ns2 = nullspace(m, 6);
    CHECK(rank(m, 6) == 4);
    REQUIRE(ns2.size() == 2);
    for (const auto& v : ns2)
        for (const auto& e : mat_vec(m, v)) CHECK(e == 0);
}

TEST_CASE("serial and parallel elimination agree") {
    std::mt19937 g(props::SEED + 1);
    for (int i = 0; i < 100; ++i) {
        RMatrix m(5, RVector(7));
        for (auto& row : m)
            for (auto& e : row) e = props::small_rat(g, -3, 3, 2);
        Echelon a = echelon_serial(m, 7), b = echelon_parallel(m, 7);
        CHECK(a.rows == b.rows);
        CHECK(a.pivots == b.pivots);
    }
}

TEST_CASE("univariate factoring of the diagonal reduction") {
    UPoly p = to_upoly(P("(1-27*x)^2*(1-216*x)", {"x"}), 0);
    UFactorization f = factor_univariate(p);
    REQUIRE(f.factors.size() == 2);
    int total = 0;
    for (const auto& u : f.factors) {
        CHECK(u.certified);
        total += u.mult * u.f.degree();
    }
    CHECK(total == 3);
    auto roots = rational_roots(p);
    CHECK(roots.size() == 2);
}

TEST_CASE("bareiss determinant") {
    std::vector<std::string> v{"a"};
    MPoly a = MPoly::variable(v, "a"), one(v, Rational(1));
    std::vector<std::vector<MPoly>> m{{a, one}, {one, a}};
    CHECK(bareiss_det(m, v) == parse_poly("a^2-1", v));
}

TEST_CASE("property: resultant vanishes exactly on a common factor") {
    auto o = props::resultant_common_factor();
    CHECK(o.cases >= 100);
    CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("property: gcd of products divisible by the shared factor") {
    auto o = props::gcd_divisibility();
    CHECK(o.cases >= 100);
    CHECK_MESSAGE(o.ok(), o.first);
}

TEST_CASE("property: nullspace vectors are exact") {
    auto o = props::nullspace_exact();
    CHECK(o.cases >= 100);
    CHECK_MESSAGE(o.ok(), o.first);
}
