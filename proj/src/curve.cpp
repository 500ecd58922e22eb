#include "hornsing/curve.hpp"

#include <algorithm>

#include "hornsing/error.hpp"
#include "hornsing/expr.hpp"

namespace hornsing {

Curve::Curve(const MPoly& f) {
    if (f.is_zero()) fail("ZeroInput", "zero curve");
    F = squarefree_primitive(f);
}

Curve Curve::parse(const std::string& text, const std::vector<std::string>& vars) {
    return Curve(parse_poly(text, vars));
}

Param Param::parse(const std::string& x, const std::string& y, const std::string& var) {
    return {parse_ratfun(x, {var}), parse_ratfun(y, {var})};
}

bool verify_parametrization(const Curve& c, const Param& p) {
    return compose_poly(c.F, {p.xp, p.yp}).is_zero();
}

MPoly pull_back(const MPoly& f, const CurveMap& map) {
    if (map.images.size() != f.nvars()) fail("ArityMismatch", "map has wrong number of images");
    RatFun r = compose_poly(f, map.images);
    if (map.prefactor) r = r * *map.prefactor;
    if (r.is_zero()) fail("DegenerateMap", "curve " + f.str() + " pulls back to zero");
    return r.num();
}

MatchReport substitute_compare(const MPoly& c1, const CurveMap& map1, const MPoly& c2, const CurveMap& map2) {
    MatchReport rep;
    rep.lhs = pull_back(c1, map1);
    rep.rhs = pull_back(c2, map2);
    auto v = merge_vars(rep.lhs.vars(), rep.rhs.vars());
    rep.lhs = rep.lhs.with_vars(v);
    rep.rhs = rep.rhs.with_vars(v);
    if (rep.lhs == rep.rhs) {
        rep.kind = MatchReport::Kind::Equal;
        rep.ratio = 1;
    } else {
        Rational k = rep.rhs.lead_coeff() / rep.lhs.lead_coeff();
        if (rep.lhs * k == rep.rhs) {
            rep.kind = MatchReport::Kind::Proportional;
            rep.ratio = k;
        } else {
            rep.kind = MatchReport::Kind::Distinct;
            rep.gcd = poly_gcd(rep.lhs, rep.rhs);
        }
    }
    rep.same_zero_set = squarefree_primitive(rep.lhs) == squarefree_primitive(rep.rhs);
    return rep;
}

std::string to_string(const MatchReport& r) {
    switch (r.kind) {
        case MatchReport::Kind::Equal: return "equal";
        case MatchReport::Kind::Proportional: return "proportional(" + r.ratio.get_str() + ")";
        case MatchReport::Kind::Distinct: return "distinct(gcd " + primitive(r.gcd).str() + ")";
    }
    return "";
}

SingularLocus affine_singular_points(const Curve& c) {
    if (c.F.nvars() != 2) fail("ArityMismatch", "plane curves only");
    SingularLocus out;
    const MPoly& F = c.F;
    MPoly Fx = F.derivative(0), Fy = F.derivative(1);
    if (F.degree_in(1) == 0) return out;  // squarefree union of vertical lines
    MPoly g = resultant_general(F, Fx, 1);
    g = poly_gcd(g, resultant_general(F, Fy, 1));
    if (g.is_zero()) fail("ZeroInput", "curve is not squarefree");
    if (g.is_constant()) return out;
    UPoly gx = to_upoly(g.with_vars(F.vars()), 0);
    UFactorization fac = factor_univariate(gx);
    for (const auto& f : fac.factors) {
        if (f.f.degree() != 1) {
            out.residual.push_back(from_upoly(f.f, {F.vars()[0]}, 0));
            continue;
        }
        Rational x0 = -f.f.c[0] / f.f.c[1];
        UPoly h;
        for (const MPoly& p : {F, Fx, Fy}) h = upoly_gcd(h, to_upoly(p.substitute(0, x0), 1));
        if (h.degree() < 1) continue;
        UPoly rest = h;
        for (const auto& y0 : rational_roots(h)) {
            out.points.push_back({x0, y0});
            UPoly lin(std::vector<Rational>{-y0, 1}), q, r;
            for (divmod(rest, lin, q, r); r.is_zero(); divmod(rest, lin, q, r)) rest = q;
        }
        if (rest.degree() > 0) out.partial.push_back({x0, rest});
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

GenusCertificate genus_quadratic_fiber(const Curve& c, const std::string& var) {
    if (c.F.nvars() != 2) fail("ArityMismatch", "plane curves only");
    size_t v = c.F.require_index(var);
    if (c.F.degree_in(v) != 2) fail("NotQuadratic", c.F.str() + " has degree " + std::to_string(c.F.degree_in(v)) + " in " + var);
    size_t s = 1 - v;
    auto cs = c.F.coefficients_in(v);
    MPoly D = cs[1] * cs[1] - Rational(4) * cs[2] * cs[0];
    GenusCertificate cert;
    cert.fiber_var = var;
    cert.base_var = c.F.vars()[s];
    cert.D = to_upoly(D, s);
    UPoly odd = UPoly::constant(1);
    cert.D_squarefree = true;
    for (const auto& part : squarefree_decomposition(cert.D)) {
        if (part.mult > 1) cert.D_squarefree = false;
        if (part.mult % 2 == 1) odd = odd * part.f;
    }
    cert.odd_part = primitive(odd);
    int d = cert.odd_part.degree();
    cert.genus = d <= 2 ? 0 : (d <= 4 ? 1 : 2);
    return cert;
}

std::optional<Rational> nickelian_j(const Rational& u2, const Rational& v2) {
    Rational den = (v2 - 1) * (v2 - 1) * (u2 - 1) * (u2 - 1) * (u2 - v2) * (u2 - v2);
    if (den == 0) return std::nullopt;
    Rational n = u2 * u2 + v2 * v2 - u2 * v2 - u2 - v2 + 1;
    return Rational(256) * n * n * n / den;
}

}  // namespace hornsing
