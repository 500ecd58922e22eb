#include "hornsing/ising.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <cstdio>
#include <numeric>

#include "hornsing/error.hpp"
#include "hornsing/expr.hpp"

namespace hornsing {

namespace {

const std::vector<std::string> KR{"k", "r"};
const std::vector<std::string> WR{"w", "r"};
const std::vector<std::string> KRUV{"k", "r", "U", "V"};

struct RawFactor {
    const char* text;
    int mult;
};

const std::vector<RawFactor> SING3_KR{
    {"k^2-1", 1}, {"3*k*r+r+4*k^2", 1}, {"k^2*r+3*k*r+4", 1}, {"k^2*r+r+k", 1},
    {"3*r^2*k-r-k-k^2*r", 1}, {"4+3*k*r+4*k+4*k^2", 1}, {"r+k", 1}, {"k*r+1", 1}};
const std::vector<RawFactor> SING4_KR{{"k^2-1", 1}, {"k*r+1+k^2", 1}, {"3*r^2*k-r-k-k^2*r", 1}};
const std::vector<RawFactor> SING3_WR{
    {"w^2-1", 1}, {"w", 2}, {"r^2-4*r+4+3*w^2*r^2-4*w^2*r+16*w^4*r", 2}, {"1+4*w^2*r-2*r", 2},
    {"3*r^2-1-4*w^2*r+2*r", 2}, {"3*r-4+16*w^2", 2}, {"1+4*w^2*r-2*r+r^2", 2}};
const std::vector<RawFactor> SING4_WR{{"w", 2}, {"w^2-1", 1}, {"4*w^2-2+r", 2}, {"3*r^2-1-4*w^2*r+2*r", 2}};

const char* DISPLAY3_KR =
    "(k^2-1)*(3*k*r+r+4*k^2)*(k^2*r+3*k*r+4)*(k^2*r+r+k)"
    "*(3*r^2*k-r-k-k^2*r)*(4+3*k*r+4*k+4*k^2)*(r+k)*(k*r+1)";
const char* DISPLAY4_KR = "(k^2-1)*(k*r+1+k^2)*(3*r^2*k-r-k-k^2*r)";
const char* DISPLAY3_WR =
    "(w^2-1)*w^2*(r^2-4*r+4+3*w^2*r^2-4*w^2*r+16*w^4*r)^2"
    "*(1+4*w^2*r-2*r)^2*(3*r^2-1-4*w^2*r+2*r)^2"
    "*(3*r-4+16*w^2)^2*(1+4*w^2*r-2*r+r^2)^2";
const char* DISPLAY4_WR = "w^2*(w^2-1)*(4*w^2-2+r)^2*(3*r^2-1-4*w^2*r+2*r)^2";

const std::vector<RawFactor>& raw(int n, Coords c) {
    if (n == 3) return c == Coords::kr ? SING3_KR : SING3_WR;
    if (n == 4) return c == Coords::kr ? SING4_KR : SING4_WR;
    fail("UnknownCatalog", "only n = 3, 4 are catalogued");
}

void check_index(const NickelianIndex& idx) {
    if (idx.n < 1) fail("InvalidIndex", "n must be at least 1");
    if (idx.j < 1 || idx.j > idx.n || idx.l < 1 || idx.l > idx.n)
        fail("InvalidIndex", "j and l must lie in 1.." + std::to_string(idx.n));
    if (idx.sign != 1 && idx.sign != -1) fail("InvalidIndex", "sign must be +1 or -1");
}

std::pair<Rational, Rational> exact_uv(const NickelianIndex& idx) {
    check_index(idx);
    auto u = rational_cos(idx.j, idx.n), v = rational_cos(idx.l, idx.n);
    if (!u || !v) fail("IrrationalCos", "cos(2 pi j/n) is irrational for n = " + std::to_string(idx.n));
    return {*u, *v};
}

MPoly strip_monomial(const MPoly& p) {
    Monomial m = monomial_content(p);
    MPoly q;
    for (const auto& [mono, c] : p.terms()) {
        Monomial e = mono;
        for (size_t i = 0; i < e.size(); ++i) e[i] -= m[i];
        q += MPoly::monomial(p.vars(), e, c);
    }
    return q.with_vars(p.vars());
}

bool is_monomial(const MPoly& p) { return p.size() == 1; }

MPoly reduced(const MPoly& p) { return squarefree_primitive(strip_monomial(p)); }

// squarefree part of a product of squarefree factors
MPoly reduced_product(const std::vector<MPoly>& fs, const std::vector<std::string>& vars) {
    MPoly acc(vars, Rational(1));
    for (const auto& f : fs) {
        if (f.is_constant()) continue;
        acc = acc * divide_exact(f, poly_gcd(acc, f));
    }
    return primitive(acc);
}

}  // namespace

std::optional<Rational> rational_cos(int j, int n) {
    if (n < 1) fail("InvalidIndex", "n must be at least 1");
    int jj = ((j % n) + n) % n;
    int g = std::gcd(jj, n);
    int num = jj / g, den = n / g;
    switch (den) {
        case 1: return Rational(1);
        case 2: return Rational(-1);
        case 3: return Rational(-1, 2);
        case 4: return Rational(0);
        case 6: return Rational(1, 2);
        default: (void)num; return std::nullopt;
    }
}

MPoly nickelian_curve_symbolic(int sign) {
    return parse_poly(sign > 0 ? "(r+k)*(k*r+1) - k*(r*U+V)^2" : "(r+k)*(k*r+1) - k*(r*U-V)^2", KRUV);
}

MPoly nickelian_curve(const NickelianIndex& idx) {
    auto [u, v] = exact_uv(idx);
    MPoly p = nickelian_curve_symbolic(idx.sign);
    p = p.substitute(2, u).substitute(3, v);
    return p.with_vars(KR);
}

std::string FloatPoly::str() const {
    std::string out;
    for (const auto& [m, c] : terms) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", c);
        if (!out.empty()) out += (c < 0 ? " - " : " + ");
        else if (c < 0) out += "-";
        std::snprintf(buf, sizeof buf, "%.17g", std::fabs(c));
        out += buf;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) out += "*" + vars[i] + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return out.empty() ? "0" : out;
}

FloatPoly nickelian_curve_float(const NickelianIndex& idx) {
    check_index(idx);
    const double pi = std::acos(-1.0);
    double u = std::cos(2 * pi * idx.j / idx.n), v = std::cos(2 * pi * idx.l / idx.n);
    MPoly p = nickelian_curve_symbolic(idx.sign);
    std::map<Monomial, double, std::function<bool(const Monomial&, const Monomial&)>> acc(
        [](const Monomial& a, const Monomial& b) { return GrlexLess()(b, a); });
    for (const auto& [m, c] : p.terms()) {
        double val = c.get_d() * std::pow(u, m[2]) * std::pow(v, m[3]);
        acc[Monomial{m[0], m[1]}] += val;
    }
    FloatPoly out{KR, {}};
    for (const auto& [m, c] : acc)
        if (c != 0.0) out.terms.push_back({m, c});
    return out;
}

MPoly nickelian_isotropic(const NickelianIndex& idx) {
    auto [u, v] = exact_uv(idx);
    return parse_poly("1 + s^2", {"s"}) - (u + v) * MPoly::variable({"s"}, "s");
}

std::vector<std::pair<int, int>> isotropic_indices(int n) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j <= n / 2; ++j)
        for (int l = 0; l <= n / 2; ++l) {
            if (j == 0 && l == 0) continue;
            if (n % 2 == 0 && j + l == n / 2) continue;
            out.push_back({j, l});
        }
    return out;
}

bool isotropic_consistent(const NickelianIndex& idx) {
    MPoly iso = nickelian_isotropic(idx);
    MPoly s = MPoly::variable({"s"}, "s");
    MPoly neg = iso.compose({-s});
    MPoly norm = iso * neg;  // even in s
    MPoly in_k(std::vector<std::string>{"k"});
    for (const auto& [m, c] : norm.terms()) in_k += MPoly::monomial({"k"}, Monomial{m[0] / 2}, c);
    MPoly at1 = nickelian_curve(idx).substitute(1, Rational(1)).with_vars({"k"});
    if (at1.is_zero()) return false;
    return reduced(in_k) == reduced(at1);
}

Coords parse_coords(const std::string& s) {
    if (s == "kr") return Coords::kr;
    if (s == "wr") return Coords::wr;
    fail("UsageError", "coords must be kr or wr");
}

std::string coords_name(Coords c) { return c == Coords::kr ? "kr" : "wr"; }

MPoly ChiCatalog::product() const {
    MPoly p(coords == Coords::kr ? KR : WR, Rational(1));
    for (const auto& f : factors) p = p * f.f.pow(f.mult);
    return p;
}

ChiCatalog chi_catalog(int n, Coords coords) {
    ChiCatalog c;
    c.n = n;
    c.coords = coords;
    const auto& vars = coords == Coords::kr ? KR : WR;
    for (const auto& rf : raw(n, coords)) c.factors.push_back({parse_poly(rf.text, vars), rf.mult});
    return c;
}

MPoly chi_displayed(int n, Coords coords) {
    raw(n, coords);
    const char* text = n == 3 ? (coords == Coords::kr ? DISPLAY3_KR : DISPLAY3_WR)
                              : (coords == Coords::kr ? DISPLAY4_KR : DISPLAY4_WR);
    return parse_poly(text, coords == Coords::kr ? KR : WR);
}

MPoly chi_gcd(Coords coords) {
    return primitive(poly_gcd(chi_catalog(3, coords).product(), chi_catalog(4, coords).product()));
}

bool KrWrReport::matches(size_t kr_i, size_t wr_j) const {
    for (const auto& m : matched) {
        bool a = std::find(m.kr.begin(), m.kr.end(), kr_i) != m.kr.end();
        bool b = std::find(m.wr.begin(), m.wr.end(), wr_j) != m.wr.end();
        if (a && b) return true;
    }
    return false;
}

KrWrReport kr_wr_report(int n, std::optional<Rational> r_value, WMap wmap) {
    KrWrReport rep;
    rep.n = n;
    rep.r_value = r_value;
    rep.wmap = wmap;
    const std::vector<std::string> SR{"s", "r"};
    RatFun s(MPoly::variable(SR, "s")), r(MPoly::variable(SR, "r"));
    if (r_value) r = RatFun(MPoly(SR, *r_value));
    RatFun k = s * s;
    RatFun two(MPoly(SR, Rational(2))), one(MPoly(SR, Rational(1)));
    RatFun w = wmap == WMap::stated ? s / (two * (one + s * s)) : (one + s * s) / (two * s);
    for (const auto& f : chi_catalog(n, Coords::kr).factors)
        rep.kr_pulled.push_back(compose_poly(f.f, {k, r}).num().with_vars(SR));
    for (const auto& f : chi_catalog(n, Coords::wr).factors)
        rep.wr_pulled.push_back(compose_poly(f.f, {w, r}).num().with_vars(SR));

    std::vector<MPoly> kred, wred;
    for (const auto& p : rep.kr_pulled) kred.push_back(is_monomial(p) ? p : reduced(p));
    for (const auto& p : rep.wr_pulled) wred.push_back(is_monomial(p) ? p : reduced(p));
    std::vector<bool> kr_used(kred.size(), false);
    for (size_t j = 0; j < wred.size(); ++j) {
        if (is_monomial(rep.wr_pulled[j])) {
            rep.wr_monomial.push_back(j);
            continue;
        }
        if (wred[j].is_constant()) continue;
        KrWrMatch m;
        std::vector<MPoly> parts;
        for (size_t i = 0; i < kred.size(); ++i) {
            if (is_monomial(rep.kr_pulled[i]) || kred[i].is_constant()) continue;
            if (divides(kred[i], wred[j])) {
                m.kr.push_back(i);
                parts.push_back(kred[i]);
            }
        }
        if (m.kr.empty() || reduced_product(parts, SR) != wred[j]) {
            rep.wr_unmatched.push_back(j);
            continue;
        }
        m.wr.push_back(j);
        MPoly raw_prod(SR, Rational(1));
        for (size_t i : m.kr) raw_prod = raw_prod * rep.kr_pulled[i];
        Rational q = rep.wr_pulled[j].lead_coeff() / raw_prod.lead_coeff();
        m.ratio = raw_prod * q == rep.wr_pulled[j] ? q : Rational(0);
        for (size_t i : m.kr) kr_used[i] = true;
        rep.matched.push_back(m);
    }
    for (size_t i = 0; i < kred.size(); ++i)
        if (!kr_used[i]) rep.kr_unmatched.push_back(i);

    // leftovers taken together
    std::vector<size_t> kl, wl;
    std::vector<MPoly> kparts, wparts;
    MPoly kp(SR, Rational(1)), wp(SR, Rational(1));
    for (size_t i : rep.kr_unmatched)
        if (!is_monomial(rep.kr_pulled[i]) && !kred[i].is_constant()) {
            kl.push_back(i);
            kp = kp * rep.kr_pulled[i];
            kparts.push_back(kred[i]);
        }
    for (size_t j : rep.wr_unmatched) {
        wl.push_back(j);
        wp = wp * rep.wr_pulled[j];
        wparts.push_back(wred[j]);
    }
    if (!kl.empty() && !wl.empty() && reduced_product(kparts, SR) == reduced_product(wparts, SR)) {
        Rational q = wp.lead_coeff() / kp.lead_coeff();
        rep.matched.push_back({kl, wl, kp * q == wp ? q : Rational(0)});
        auto drop = [](std::vector<size_t>& from, const std::vector<size_t>& gone) {
            std::vector<size_t> keep;
            for (size_t x : from)
                if (std::find(gone.begin(), gone.end(), x) == gone.end()) keep.push_back(x);
            from = keep;
        };
        drop(rep.kr_unmatched, kl);
        drop(rep.wr_unmatched, wl);
    }
    return rep;
}

std::vector<AuditEntry> elliptic_audit() {
    std::vector<AuditEntry> out;
    Param p1 = Param::parse("(u^2+1)/(2*u)", "-4/(u^2*(u^2+3))");
    MPoly factor1 = parse_poly("r^2-4*r+4+3*w^2*r^2-4*w^2*r+16*w^4*r", WR);
    for (Coords c : {Coords::kr, Coords::wr}) {
        std::vector<MPoly> seen;
        for (int n : {3, 4})
            for (const auto& f : chi_catalog(n, c).factors) {
                MPoly g = primitive(f.f);
                bool dup = false;
                for (const auto& h : seen) dup = dup || h == g;
                if (dup) continue;
                seen.push_back(g);
                AuditEntry e{c, g, "", std::nullopt, false};
                int d0 = g.degree_in(0), d1 = g.degree_in(1);
                if (d0 == 0 || d1 == 0) {
                    e.status = "univariate";
                } else if (d0 == 2 || d1 == 2) {
                    e.cert = genus_quadratic_fiber(Curve(g), g.vars()[d0 == 2 ? 0 : 1]);
                    e.status = e.cert->genus == 0 ? "genus 0" : (e.cert->genus == 1 ? "genus 1" : "genus >= 2");
                } else if (d0 == 1 || d1 == 1) {
                    e.status = "linear";
                } else {
                    e.status = "not quadratic";
                }
                if (g == primitive(factor1)) e.param_verified = verify_parametrization(Curve(g), p1);
                out.push_back(e);
            }
    }
    return out;
}

bool squaring_consistent(Rational& ratio) {
    // a = s1^2, b = s2^2
    const std::vector<std::string> AB{"a", "b", "U", "V"};
    MPoly P = parse_poly("(1+a)*(1+b) - a*U^2 - b*V^2", AB);
    MPoly branches = P * P - Rational(4) * parse_poly("a*b*U^2*V^2", AB);
    RatFun kk(MPoly::variable(KRUV, "k")), rr(MPoly::variable(KRUV, "r"));
    RatFun U(MPoly::variable(KRUV, "U")), V(MPoly::variable(KRUV, "V"));
    RatFun lhs = compose_poly(branches, {kk * rr, kk / rr, U, V}) * rr * rr;
    MPoly rhs = nickelian_curve_symbolic(1) * nickelian_curve_symbolic(-1);
    if (!lhs.den().is_constant()) return false;
    MPoly l = lhs.num() * (Rational(1) / lhs.den().lead_coeff());
    l = l.with_vars(KRUV);
    ratio = rhs.lead_coeff() / l.lead_coeff();
    return l * ratio == rhs;
}

std::vector<MPoly> isotropic_reduction(int n) {
    std::vector<MPoly> out;
    for (const auto& f : chi_catalog(n, Coords::kr).factors)
        out.push_back(primitive(f.f.substitute(1, Rational(1)).with_vars({"k"})));
    return out;
}

}  // namespace hornsing
