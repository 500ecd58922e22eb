#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hornsing/error.hpp"
#include "hornsing/registry.hpp"

using namespace hornsing;

namespace {
const std::vector<std::string> T{"t"};
RatFun rf(const std::string& s) { return parse_ratfun(s, T); }
MPoly tp(const std::string& s) { return parse_poly(s, T); }
UPoly up(const std::string& s) { return to_upoly(tp(s), 0); }

template <class F>
std::string error_name(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

UniSeries diagonal(const std::string& spec, int N) {
    RatFun t = rf("t");
    return restrict(expand(series_source(registry_spec(spec)), N), t, t, N);
}

UniODE geometric_ode() { return UniODE::parse({"-1", "1-t"}); }

bool head_divisible_by(const UniODE& ode, const std::string& f) {
    return divides(tp(f), from_upoly(ode.p.back(), T, 0));
}
}  // namespace

TEST_CASE("geometric series") {
    auto g = guess_ode(geometric_series(30), 1, 1);
    REQUIRE(g);
    CHECK(g->ode == geometric_ode().normalized());
    CHECK(g->checked_margin >= 10);
    CHECK(error_name([] { guess_ode(geometric_series(8), 1, 1); }) == "InsufficientOrder");
}

TEST_CASE("Batyrev1 from the diagonal of H0") {
    UniSeries s = diagonal("h2", 49);
    auto g = guess_ode(s, 4, 2);
    REQUIRE(g);
    CHECK(g->order == 4);
    CHECK(g->degree == 2);
    CHECK(g->checked_margin >= 10);
    CHECK(g->ode == registry_ode("batyrev1").normalized());
    // theta form is only fixed up to an overall sign
    ThetaOp mine = to_theta_op(g->theta), stored = registry_system("batyrev1")[0];
    CHECK(to_dform(from_theta_op(mine)).normalized() == to_dform(from_theta_op(stored)).normalized());
    for (int r = 1; r <= 4; ++r)
        for (int d = 0; d <= 2; ++d)
            if (r != 4 || d != 2) CHECK(guess_dimension(s, r, d) == 0);
}

TEST_CASE("singular points") {
    SingularReport r = singular_points(registry_ode("batyrev1"));
    CHECK(r.zero_multiplicity == 3);
    std::vector<UPoly> fs;
    for (const auto& f : r.factors) fs.push_back(f.f);
    CHECK(std::find(fs.begin(), fs.end(), primitive(up("1-216*t"))) != fs.end());
    // the diagonal reduction of the curve gives (1+27t), not (1-27t)
    CHECK(std::find(fs.begin(), fs.end(), primitive(up("1+27*t"))) != fs.end());
    CHECK(std::find(fs.begin(), fs.end(), primitive(up("1-27*t"))) == fs.end());

    SingularReport g = singular_points(geometric_ode());
    CHECK(g.zero_multiplicity == 0);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].f.eval(1) == 0);
}

TEST_CASE("slope c=2: the cubic S(t,2t) divides the guessed head") {
    UniSeries s = restrict(expand(series_source(registry_spec("h2")), 75), rf("t"), rf("2*t"), 75);
    auto g = guess_ode(s, 6, 6);
    REQUIRE(g);
    MPoly S = compose_poly(registry_curve("cand").F, {rf("t"), rf("2*t")}).num();
    CHECK(divides(S, from_upoly(g->ode.p.back(), T, 0)));
    CHECK(head_divisible_by(g->ode, "1+486*t"));
}

TEST_CASE("local bases") {
    auto e = local_basis(UniODE::parse({"-1", "1"}), 0, 6);
    REQUIRE(e.size() == 1);
    for (int k = 0; k <= 6; ++k) CHECK(e[0].c[k] == Rational(1) / Rational(factorial(k)));

    auto cs = local_basis(UniODE::parse({"1", "0", "1"}), 0, 8);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].c[2] == Rational(-1, 2));
    CHECK(cs[1].c[3] == Rational(-1, 6));
    UniSeries w = cs[0] * derivative(cs[1]) + Rational(-1) * (derivative(cs[0]) * cs[1]);
    CHECK(w.c[0] == 1);
    for (int k = 1; k <= 6; ++k) CHECK(w.c[k] == 0);

    UniODE c4 = registry_ode("c4");
    Rational t0(1, 10);
    auto b = local_basis(c4, t0, 40);
    REQUIRE(b.size() == 4);
    for (const auto& u : b) CHECK(annihilates_series(c4.shifted(t0), u));

    CHECK(error_name([] { local_basis(UniODE::parse({"-1", "1-t"}), 1, 5); }) == "SingularPoint");
}

TEST_CASE("Abel identity for the order-two operator") {
    UniODE l2 = registry_ode("l2_appD");
    Rational t0 = ordinary_base_point(l2);
    CHECK(t0 > 0);
    auto u = local_basis(l2, t0, 30);
    UniSeries w = u[0] * derivative(u[1]) + Rational(-1) * (derivative(u[0]) * u[1]);
    UniODE s = l2.shifted(t0);
    UniSeries p2 = taylor(RatFun(from_upoly(s.p[2], T, 0)), 30), p1 = taylor(RatFun(from_upoly(s.p[1], T, 0)), 30);
    UniSeries lhs = p2 * derivative(w) + p1 * w;
    for (int k = 0; k < 28; ++k) CHECK(lhs.c[k] == 0);
}

TEST_CASE("exterior square orders") {
    CHECK(exterior_square_order(UniODE::parse({"1", "0", "1"}), 20) == 1);
    CHECK(exterior_square_order(registry_ode("c4"), 30) == 5);
    // basis 1, t, t^3, t^4: wronskians span 1, t^2, t^3, t^4, t^6
    ThetaUni euler{{up("t*(t-1)*(t-3)*(t-4)")}};
    CHECK(exterior_square_order(to_dform(euler), 20) == 5);
}

TEST_CASE("symmetric square orders") {
    CHECK(symmetric_square_order(UniODE::parse({"1", "0", "1"}), 20) == 3);
    CHECK(symmetric_square_order(UniODE::parse({"0", "0", "1"}), 20) == 3);
    CHECK(symmetric_square_order(registry_ode("c3"), 30) == 5);
}

TEST_CASE("C3 kills the products of the order-two basis") {
    UniODE l2 = registry_ode("l2_appD"), c3 = registry_ode("c3");
    Rational t0 = ordinary_base_point(l2);
    auto u = local_basis(l2, t0, 40);
    UniODE s = c3.shifted(t0);
    CHECK(annihilates_series(s, u[0] * u[0]));
    CHECK(annihilates_series(s, u[0] * u[1]));
    CHECK(annihilates_series(s, u[1] * u[1]));
}

TEST_CASE("annihilates_series") {
    UniODE op = registry_ode("defbatyrev2");
    UniSeries d = diagonal("bat16", op.order() + op.degree() + 10);
    CHECK(d.c[4] == 190120);
    CHECK(annihilates_series(op, d));
    CHECK(annihilates_series(geometric_ode(), geometric_series(12)));
    UniSeries nat(12);
    for (int k = 0; k <= 12; ++k) nat.c[k] = k + 1;
    CHECK_FALSE(annihilates_series(geometric_ode(), nat));
    CHECK(error_name([] { annihilates_series(registry_ode("c4"), geometric_series(10)); }) == "InsufficientOrder");
}

TEST_CASE("theta and D forms convert both ways") {
    for (std::string name : {"batyrev1", "defbatyrev2", "batyrev5", "batyrev6"}) {
        UniODE d = registry_ode(name);
        CHECK(to_dform(to_theta(d)).normalized() == d.normalized());
    }
    // t*D = theta, t^2*D^2 = theta*(theta-1)
    ThetaUni th = to_theta(UniODE::parse({"0", "0", "t^2"}));
    REQUIRE(th.P.size() == 1);
    CHECK(th.P[0] == up("t^2-t"));
}

TEST_CASE("guessed operators keep a margin") {
    for (std::string spec : {"bat16", "bat18"}) {
        UniSeries s = diagonal(spec, 40);
        auto g = guess_ode(s, 4, 2);
        REQUIRE(g);
        CHECK(g->checked_margin >= 10);
        CHECK(annihilates_series(g->ode, s));
    }
}

TEST_CASE("ODE text round trip") {
    UniODE c4 = registry_ode("c4");
    CHECK(ode_from_text(ode_to_text(c4)) == c4);
    CHECK(head_divisible_by(c4, "t^2+t+1"));
}
