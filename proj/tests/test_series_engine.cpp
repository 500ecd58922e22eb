#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hornsing/error.hpp"
#include "hornsing/registry.hpp"
#include "property_suites.hpp"

using namespace hornsing;

namespace {
const std::vector<std::string> NM{"n", "m"};
const std::vector<std::string> T{"t"};

RatFun rf(const std::string& s, const std::vector<std::string>& v = T) { return parse_ratfun(s, v); }
HyperSpec hs(const std::string& a1, const std::string& a2) { return {rf(a1, NM), rf(a2, NM)}; }

template <class F>
std::string error_name(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

BiSeries ratios(const std::string& name, int N) { return expand(series_source(registry_spec(name)), N); }
BiSeries formula(const std::string& name, int N) { return expand(series_source(registry_spec(name, true)), N); }
}  // namespace

TEST_CASE("compatibility") {
    CHECK(check_compatibility(*series_source(registry_spec("h2")).ratios));
    CHECK(check_compatibility(hs("n+1", "m+2")));
    CHECK_FALSE(check_compatibility(hs("(n+m+1)/(n+1)", "1")));
    CHECK(error_name([] { expand_from_ratios(hs("(n+m+1)/(n+1)", "1"), 3); }) == "IncompatibleSpec");
}

TEST_CASE("expansion from ratios") {
    BiSeries h = ratios("h2", 2);
    CHECK(h.at(1, 0) == 6);
    CHECK(h.at(0, 1) == 6);
    CHECK(h.at(2, 0) == 90);
    CHECK(h.at(0, 2) == 90);
    CHECK(h.at(1, 1) == 720);

    BiSeries one = expand_from_ratios(hs("1", "1"), 5);
    for (int d = 0; d <= 5; ++d)
        for (int m = 0; m <= d; ++m) CHECK(one.at(d - m, m) == 1);

    BiSeries b = ratios("bat16", 4);
    CHECK(b.at(1, 1) == 96);
    CHECK(b.at(2, 1) == 2160);
    CHECK(b.at(2, 2) == 90720);

    CHECK(error_name([] { expand_from_ratios(hs("1/(n-2)", "1"), 4); }) == "RatioPole");
}

TEST_CASE("expansion from formulas") {
    CHECK(formula("bat18", 2).at(1, 1) == 96);
    CHECK(formula("asym", 2).at(1, 1) == 72);
    CHECK(formula("poch", 2).at(0, 1) == 4);
    CHECK(formula("poch", 2).at(1, 1) == 6);
}

TEST_CASE("ratio and formula forms agree through order 12, and are symmetric") {
    for (std::string name : {"h2", "bat16", "poch", "kdf_general", "bat18", "bat19"}) {
        INFO(name);
        BiSeries r = ratios(name, 12), f = formula(name, 12);
        CHECK(r == f);
        if (name == "kdf_general") continue;
        for (int d = 0; d <= 12; ++d)
            for (int m = 0; m <= d; ++m) CHECK(r.at(d - m, m) == r.at(m, d - m));
    }
}

TEST_CASE("parallel and serial formula expansion agree") {
    SeriesSource s = series_source(registry_spec("asym", true));
    CHECK(expand_from_formula(s.formula, s.idx, s.params, 10) ==
          expand_from_formula_serial(s.formula, s.idx, s.params, 10));
}

TEST_CASE("rescaled poch series has integer coefficients") {
    BiSeries p = formula("poch", 12);
    for (int d = 0; d <= 12; ++d)
        for (int m = 0; m <= d; ++m) CHECK(Rational(p.at(d - m, m) * rpow(4, d)).get_den() == 1);
    CHECK(p.at(2, 0) * 16 == 1296);
    CHECK(p.at(4, 0) * 256 == 24010000);
}

TEST_CASE("restriction") {
    RatFun t = rf("t");
    UniSeries d = restrict(ratios("h2", 4), t, t, 4);
    CHECK(d.c == std::vector<Rational>{1, 12, 900, 94080, 11988900});
    UniSeries d2 = restrict(ratios("h2", 1), t, rf("2*t"), 1);
    CHECK(d2.c[1] == 18);

    CHECK(error_name([&] { restrict(ratios("h2", 3), t, t, 6); }) == "InsufficientOrder");
    CHECK(error_name([&] { restrict(ratios("h2", 3), rf("1+t"), t, 3); }) == "NonzeroAtOrigin");
    CHECK(restrict_needed(rf("t^2"), rf("(t/(1-t))^2"), 9) == 5);
}

TEST_CASE("M=4 restriction along (8t, -8t/(1-8t)) has integer coefficients") {
    SpecFile s = kdf_general(4, Rational(1, 2), Rational(1, 2), Rational(1, 2), 1, 64, false);
    RatFun xp = rf("8*t"), yp = rf("-8*t/(1-8*t)");
    UniSeries u = restrict(expand(series_source(s), 14), xp, yp, 14);
    for (const auto& c : u.c) CHECK(c.get_den() == 1);
    CHECK(u.c[0] == 1);
}

TEST_CASE("restriction: diagonal-sum identity, and serial equals parallel") {
    RatFun t = rf("t");
    for (std::string name : {"h2", "bat19", "asym"}) {
        BiSeries b = expand(series_source(registry_spec(name)), 10);
        UniSeries r = restrict(b, t, t, 10);
        CHECK(r == diagonal_sum(b));
        for (int k = 0; k <= 10; ++k) {
            Rational s = 0;
            for (int n = 0; n <= k; ++n) s += b.at(n, k - n);
            CHECK(r.c[k] == s);
        }
        CHECK(restrict_serial(b, rf("t^2"), rf("t/(1-t)"), 10) == restrict(b, rf("t^2"), rf("t/(1-t)"), 10));
    }
}

TEST_CASE("hadamard") {
    UniSeries a(std::vector<Rational>{3, Rational(1, 2), -4, 7});
    CHECK(hadamard(a, geometric_series(3)) == a);
    UniSeries ones(std::vector<Rational>{1, 1, 1, 1, 1}), alt(std::vector<Rational>{0, 1, 0, 1, 0});
    CHECK(hadamard(ones, alt) == alt);
    CHECK(error_name([&] { hadamard(a, ones); }) == "OrderMismatch");

    std::mt19937 g(props::SEED);
    for (int i = 0; i < 100; ++i) {
        UniSeries x(6), y(6), z(6);
        for (int k = 0; k <= 6; ++k) {
            x.c[k] = props::small_rat(g, -5, 5, 3);
            y.c[k] = props::small_rat(g, -5, 5, 3);
            z.c[k] = props::small_rat(g, -5, 5, 3);
        }
        CHECK(hadamard(x, y) == hadamard(y, x));
        CHECK(hadamard(hadamard(x, y), z) == hadamard(x, hadamard(y, z)));
    }
}

TEST_CASE("rational composition") {
    RatFun g = rf("-27*t/(1-4*t)^3");
    UniSeries id(std::vector<Rational>{0, 1, 0, 0, 0});
    UniSeries c = compose_rational(id, g, 4);
    CHECK(c == taylor(g, 4));
    CHECK(c.c[1] == -27);
    CHECK(c.c[2] == -324);
    UniSeries a(std::vector<Rational>{2, -1, 5, 3});
    CHECK(compose_rational(a, rf("t"), 3) == a);
    UniSeries geo = compose_rational(geometric_series(6), rf("t^2"), 6);
    CHECK(geo.c == std::vector<Rational>{1, 0, 1, 0, 1, 0, 1});
    CHECK(error_name([&] { compose_rational(a, rf("1+t"), 3); }) == "NonzeroAtOrigin");
}

TEST_CASE("hypergeometric pFq coefficients") {
    UniSeries f = hypergeometric_pfq({Rational(1, 3), Rational(2, 3)}, {Rational(1)}, Rational(-27), 3);
    CHECK(f.c == std::vector<Rational>{1, -6, 90, -1680});
}

TEST_CASE("property: path independence against brute-force recursion") {
    auto o = props::series_path_independence();
    CHECK(o.cases >= 100);
    CHECK_MESSAGE(o.ok(), o.first);
}
