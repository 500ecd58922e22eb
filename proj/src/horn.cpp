#include "hornsing/horn.hpp"

#include "hornsing/error.hpp"
#include "hornsing/poly_algo.hpp"

namespace hornsing {

namespace {

RatFun limit_map(const RatFun& alpha, const std::string& n, const std::string& m, bool swapped, const char* which) {
    RatFun inv = alpha.inverse();
    std::vector<std::string> nm{n, m};
    MPoly num = inv.num().with_vars(nm), den = inv.den().with_vars(nm);
    if (num.total_degree() != den.total_degree())
        fail("Confluent", std::string(which) + ": numerator degree " + std::to_string(num.total_degree()) +
                              " differs from denominator degree " + std::to_string(den.total_degree()));
    std::vector<std::string> tv{"t"};
    MPoly t = MPoly::variable(tv, "t"), one(tv, Rational(1));
    std::vector<MPoly> at = swapped ? std::vector<MPoly>{one, t} : std::vector<MPoly>{t, one};
    MPoly a = num.top_homogeneous().compose(at), b = den.top_homogeneous().compose(at);
    return RatFun(a.with_vars(tv), b.with_vars(tv));
}

}  // namespace

HornMaps horn_limit_maps(const HyperSpec& s, bool swapped) {
    return {limit_map(s.alpha1, s.n, s.m, swapped, "alpha1"), limit_map(s.alpha2, s.n, s.m, swapped, "alpha2")};
}

HornResult eliminate(const HornMaps& h) {
    std::vector<std::string> v{"x", "y", "t"};
    MPoly x = MPoly::variable(v, "x"), y = MPoly::variable(v, "y");
    MPoly fx = x * h.X.den().with_vars(v) - h.X.num().with_vars(v);
    MPoly fy = y * h.Y.den().with_vars(v) - h.Y.num().with_vars(v);
    MPoly res = resultant(fx, fy, "t");
    if (res.is_zero()) fail("IdenticallyZeroResultant", "X and Y share a common factor");
    res = res.with_vars({"x", "y"});
    MPoly sq = squarefree_primitive(res);
    HornResult out;
    Monomial mc = monomial_content(sq);
    if (mc[0] > 0 || mc[1] > 0) {
        out.monomial_components.push_back({mc[0], mc[1]});
        sq = divide_exact(sq, MPoly::monomial(sq.vars(), mc, 1));
    }
    out.main_curve = primitive(sq);
    UPoly xn = to_upoly(h.X.num().with_vars({"t"}), 0), xd = to_upoly(h.X.den().with_vars({"t"}), 0);
    if (xn.degree() < xd.degree()) out.x_at_infinity = Rational(0);
    else if (xn.degree() == xd.degree()) out.x_at_infinity = xn.lead() / xd.lead();
    UPoly yn = to_upoly(h.Y.num().with_vars({"t"}), 0), yd = to_upoly(h.Y.den().with_vars({"t"}), 0);
    if (yd.at(0) != 0) out.y_at_zero = yn.at(0) / yd.at(0);
    return out;
}

HornResult horn_curve(const HyperSpec& s) { return eliminate(horn_limit_maps(s)); }

}  // namespace hornsing
