#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hornsing/curve.hpp"
#include "hornsing/error.hpp"
#include "hornsing/expr.hpp"
#include "hornsing/ising.hpp"
#include "hornsing/registry.hpp"

using namespace hornsing;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> KR{"k", "r"};
const std::vector<std::string> S{"s"};
const std::vector<std::string> SR{"s", "r"};

template <class F>
std::string error_name(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

std::optional<Rational> j_direct(const Rational& u, const Rational& v) {
    Rational den = (v - 1) * (v - 1) * (u - 1) * (u - 1) * (u - v) * (u - v);
    if (den == 0) return std::nullopt;
    Rational a = u * u + v * v - u * v - u - v + 1;
    return 256 * a * a * a / den;
}
}  // namespace

TEST_CASE("parametrizations") {
    Curve cand = registry_curve("cand");
    CHECK(verify_parametrization(cand, Param::parse("(1/6+u)^3", "(1/6-u)^3")));
    Curve ts = registry_curve("tilde_s2xy");
    CHECK(verify_parametrization(ts, Param::parse("u^2", "(u/(1+8*u))^2")));
    CHECK_FALSE(verify_parametrization(Curve::parse("x-y", XY), Param::parse("u", "u^2")));
    for (const auto& e : curve_entries()) {
        INFO(e.name);
        Curve c = registry_curve(e.name);
        for (const auto& p : registry_params(e.name)) CHECK(verify_parametrization(c, p));
    }
}

TEST_CASE("Atkin-Lehner-like involutions") {
    RatFun inv = parse_ratfun("1/u", {"u"});
    for (std::string name : {"cand", "tilde_s2xy"}) {
        INFO(name);
        Param p = registry_params(name)[1];
        CHECK(p.yp == p.xp.compose({inv}));
        CHECK(p.xp == p.yp.compose({inv}));
    }
}

TEST_CASE("substitute and compare") {
    MPoly ts = registry_curve("tilde_s2xy").F, s2 = registry_curve("s2xy").F;
    CurveMap id{{parse_ratfun("x", XY), parse_ratfun("y", XY)}, std::nullopt};
    CurveMap inv{{parse_ratfun("1/(1024*x)", XY), parse_ratfun("1/(1024*y)", XY)}, parse_ratfun("4096*x^2*y^2", XY)};
    MatchReport r = substitute_compare(ts, id, s2, inv);
    CHECK(r.kind == MatchReport::Kind::Equal);

    MPoly f1 = registry_curve("factor1").F, f2 = registry_curve("factor2").F;
    CurveMap kmap{{parse_ratfun("s^2", S), parse_ratfun("1", S)}, std::nullopt};
    CurveMap wmap{{parse_ratfun("s/(2*(1+s^2))", S), parse_ratfun("1", S)}, std::nullopt};
    MatchReport at1 = substitute_compare(f2, kmap, f1, wmap);
    CHECK(at1.kind != MatchReport::Kind::Distinct);
    CHECK(primitive(at1.lhs) == primitive(parse_poly("4*s^8+15*s^6+26*s^4+15*s^2+4", S)));
    CHECK(primitive(at1.rhs) == primitive(parse_poly("4*s^8+15*s^6+26*s^4+15*s^2+4", S)));

    // at general r the stated w map does not carry one factor onto the other
    CurveMap kr{{parse_ratfun("s^2", SR), parse_ratfun("r", SR)}, std::nullopt};
    CurveMap wr{{parse_ratfun("s/(2*(1+s^2))", SR), parse_ratfun("r", SR)}, std::nullopt};
    CHECK(substitute_compare(f2, kr, f1, wr).kind == MatchReport::Kind::Distinct);
    CurveMap wrec{{parse_ratfun("(1+s^2)/(2*s)", SR), parse_ratfun("r", SR)}, std::nullopt};
    CHECK(substitute_compare(f2, kr, f1, wrec).kind != MatchReport::Kind::Distinct);

    MatchReport d = substitute_compare(parse_poly("x+y", XY), id, parse_poly("x-y", XY), id);
    CHECK(d.kind == MatchReport::Kind::Distinct);
    CHECK(d.gcd.is_constant());
    CHECK(error_name([&] {
              CurveMap collapse{{parse_ratfun("x", XY), parse_ratfun("x", XY)}, std::nullopt};
              pull_back(parse_poly("x-y", XY), collapse);
          }) == "DegenerateMap");
    CHECK(error_name([&] { pull_back(parse_poly("x-y", XY), CurveMap{{parse_ratfun("x", XY)}, std::nullopt}); }) ==
          "ArityMismatch");
}

TEST_CASE("affine singular points") {
    CHECK(affine_singular_points(Curve::parse("x^2+y^2-1", XY)).points.empty());
    auto node = affine_singular_points(Curve::parse("y^2-x^2*(x+1)", XY)).points;
    REQUIRE(node.size() == 1);
    CHECK(node[0] == std::make_pair(Rational(0), Rational(0)));
    auto ts = affine_singular_points(registry_curve("tilde_s2xy")).points;
    CHECK(std::find(ts.begin(), ts.end(), std::make_pair(Rational(0), Rational(0))) != ts.end());
    auto cs = affine_singular_points(registry_curve("cand")).points;
    CHECK(std::find(cs.begin(), cs.end(), std::make_pair(Rational(-1, 27), Rational(-1, 27))) != cs.end());
}

TEST_CASE("genus by quadratic fibers") {
    GenusCertificate g = genus_quadratic_fiber(Curve::parse("3*r^2*k-r-k-k^2*r", KR), "k");
    CHECK(g.genus == 1);
    CHECK(g.D_squarefree);
    CHECK(primitive(from_upoly(g.D, {"r"}, 0)) == primitive(parse_poly("(3*r-1)*(3*r+1)*(r-1)*(r+1)", {"r"})));

    MPoly uv = nickelian_curve_symbolic(1).substitute(2, Rational(1, 3)).substitute(3, Rational(1, 3)).with_vars(KR);
    CHECK(genus_quadratic_fiber(Curve(uv), "k").genus == 0);

    GenusCertificate p = genus_quadratic_fiber(Curve::parse("k^2-r", KR), "k");
    CHECK(p.genus == 0);
    CHECK(primitive(from_upoly(p.D, {"r"}, 0)) == parse_poly("r", {"r"}));

    CHECK(error_name([] { genus_quadratic_fiber(Curve::parse("k^3-r", KR), "k"); }) == "NotQuadratic");
}

TEST_CASE("genus of a conic bundle with a repeated root drops") {
    GenusCertificate g = genus_quadratic_fiber(Curve::parse("k^2-r^2*(r-1)*(r-2)", KR), "k");
    CHECK(g.genus == 0);
    CHECK_FALSE(g.D_squarefree);
    GenusCertificate h = genus_quadratic_fiber(Curve::parse("k^2-r^2*(r-1)*(r-2)*(r-3)", KR), "k");
    CHECK(h.genus == 1);
    GenusCertificate q = genus_quadratic_fiber(Curve::parse("k^2-(r-1)*(r-2)*(r-3)*(r-4)*(r-5)", KR), "k");
    CHECK(q.genus == 2);
}

TEST_CASE("Nickelian j-invariant") {
    CHECK(nickelian_j(Rational(0), Rational(1, 2)) == Rational(1728));
    CHECK_FALSE(nickelian_j(Rational(1, 4), Rational(1, 4)).has_value());
    CHECK(nickelian_j(Rational(1, 4), Rational(1, 16)) == j_direct(Rational(1, 4), Rational(1, 16)));
    std::vector<Rational> grid{Rational(-3), Rational(0), Rational(1, 5), Rational(1, 2), Rational(1), Rational(7, 3)};
    for (const auto& a : grid)
        for (const auto& b : grid) CHECK(nickelian_j(a, b) == nickelian_j(b, a));
}

TEST_CASE("non-degenerate j agrees with a genus-one fiber") {
    std::vector<std::pair<Rational, Rational>> uv{{Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(1, 2)},
                                                  {Rational(2), Rational(1, 3)},    {Rational(1, 5), Rational(3)},
                                                  {Rational(3, 4), Rational(-1, 2)}};
    for (const auto& [U, V] : uv) {
        REQUIRE(nickelian_j(U * U, V * V).has_value());
        MPoly c = nickelian_curve_symbolic(1).substitute(2, U).substitute(3, V).with_vars(KR);
        INFO(U.get_str() << " " << V.get_str());
        CHECK(genus_quadratic_fiber(Curve(c), "k").genus == 1);
    }
}

TEST_CASE("curves are normalized on construction") {
    Curve c(parse_poly("-4*(x-y)^2*(x+1)", XY));
    CHECK(c.F == primitive(parse_poly("(x-y)*(x+1)", XY)));
    CHECK(error_name([] { Curve(MPoly(XY)); }) == "ZeroInput");
}
