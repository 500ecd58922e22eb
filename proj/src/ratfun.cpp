#include "hornsing/ratfun.hpp"

#include "hornsing/error.hpp"
#include "hornsing/poly_algo.hpp"

namespace hornsing {

RatFun::RatFun(const MPoly& num) : num_(num), den_(num.vars(), Rational(1)) {}

RatFun::RatFun(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
    auto vars = merge_vars(num.vars(), den.vars());
    num_ = num.with_vars(vars);
    den_ = den.with_vars(vars);
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(num_.vars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    // den primitive with positive leading coefficient; constants move to num
    MPoly pd = primitive(den_);
    Rational k = den_.lead_coeff() / pd.lead_coeff();
    num_ *= 1 / k;
    den_ = pd;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::inverse() const {
    if (num_.is_zero()) fail("DivisionByZero", "inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

Rational RatFun::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) fail("RatioPole", "denominator " + den_.str() + " vanishes");
    return num_.evaluate(point) / d;
}

RatFun RatFun::substitute(size_t i, const Rational& v) const {
    return RatFun(num_.substitute(i, v), den_.substitute(i, v));
}

RatFun RatFun::compose(const std::vector<RatFun>& images) const {
    return compose_poly(num_, images) / compose_poly(den_, images);
}

RatFun RatFun::with_vars(const std::vector<std::string>& vars) const {
    RatFun r;
    r.num_ = num_.with_vars(vars);
    r.den_ = den_.with_vars(vars);
    return r;
}

bool RatFun::operator==(const RatFun& o) const {
    auto vv = merge_vars(vars(), o.vars());
    return num_.with_vars(vv) * o.den_.with_vars(vv) == o.num_.with_vars(vv) * den_.with_vars(vv);
}

std::string RatFun::str() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den() == b.den()) return RatFun(a.num() + b.num(), a.den());
    return RatFun(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num() * b.num(), a.den() * b.den());
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) fail("DivisionByZero", "division by zero rational function");
    return RatFun(a.num() * b.den(), a.den() * b.num());
}

RatFun compose_poly(const MPoly& f, const std::vector<RatFun>& images) {
    if (images.size() != f.nvars()) fail("ArityMismatch", "compose");
    std::vector<std::string> target;
    for (const auto& im : images) target = merge_vars(target, im.vars());
    // clear denominators: F(p/q) = sum c prod p_i^e_i q_i^(d_i - e_i) / prod q_i^d_i
    std::vector<int> deg(f.nvars());
    for (size_t i = 0; i < f.nvars(); ++i) deg[i] = std::max(0, f.degree_in(i));
    std::vector<std::vector<MPoly>> pp(f.nvars()), qp(f.nvars());
    for (size_t i = 0; i < f.nvars(); ++i) {
        MPoly p = images[i].num().with_vars(target), q = images[i].den().with_vars(target);
        pp[i].push_back(MPoly(target, Rational(1)));
        qp[i].push_back(MPoly(target, Rational(1)));
        for (int k = 1; k <= deg[i]; ++k) {
            pp[i].push_back(pp[i].back() * p);
            qp[i].push_back(qp[i].back() * q);
        }
    }
    MPoly num(target), den(target, Rational(1));
    for (size_t i = 0; i < f.nvars(); ++i) den = den * qp[i][deg[i]];
    for (const auto& [m, c] : f.terms()) {
        MPoly t(target, c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (deg[i] == 0) continue;
            t = t * pp[i][m[i]];
            if (deg[i] - m[i] > 0) t = t * qp[i][deg[i] - m[i]];
        }
        num += t;
    }
    return RatFun(num, den);
}

}  // namespace hornsing

namespace hornsing {

bool ratios_compatible(const RatFun& a1, const RatFun& a2, const std::string& n,
                       const std::string& m) {
    auto vars = merge_vars(merge_vars(a1.vars(), a2.vars()), {n, m});
    RatFun A1 = a1.with_vars(vars), A2 = a2.with_vars(vars);
    MPoly N = MPoly::variable(vars, n), M = MPoly::variable(vars, m);
    MPoly one(vars, Rational(1));
    std::vector<RatFun> shift_m, shift_n;
    for (const auto& v : vars) {
        MPoly x = MPoly::variable(vars, v);
        shift_m.push_back(RatFun(v == m ? x + one : x));
        shift_n.push_back(RatFun(v == n ? x + one : x));
    }
    return A2 * A1.compose(shift_m) == A1 * A2.compose(shift_n);
}

}  // namespace hornsing
