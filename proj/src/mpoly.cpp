#include "hornsing/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "hornsing/error.hpp"

namespace hornsing {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> r = a;
    for (const auto& v : b)
        if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
    return r;
}

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MPoly::MPoly(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Monomial(vars_.size(), 0), c);
}

MPoly MPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    MPoly p(vars);
    Monomial m(vars.size(), 0);
    m[p.require_index(name)] = 1;
    p.terms_.emplace(m, Rational(1));
    return p;
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, const Monomial& m, const Rational& c) {
    MPoly p(vars);
    p.add_term(m, c);
    return p;
}

int MPoly::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

size_t MPoly::require_index(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) fail("UnknownVariable", name);
    return static_cast<size_t>(i);
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MPoly::constant_term() const { return coeff(Monomial(vars_.size(), 0)); }

Rational MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MPoly::degree_in(size_t i) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

int MPoly::min_degree_in(size_t i) const {
    if (terms_.empty()) return -1;
    int d = 1 << 30;
    for (const auto& [m, c] : terms_) d = std::min(d, m[i]);
    return d;
}

std::vector<size_t> MPoly::occurring() const {
    std::vector<size_t> r;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (degree_in(i) > 0) r.push_back(i);
    return r;
}

const Monomial& MPoly::lead_monomial() const {
    if (terms_.empty()) fail("ZeroInput", "leading monomial of zero");
    return terms_.rbegin()->first;
}

const Rational& MPoly::lead_coeff() const {
    if (terms_.empty()) fail("ZeroInput", "leading coefficient of zero");
    return terms_.rbegin()->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::align_with(const MPoly& o, MPoly& other_aligned) const {
    other_aligned = o.with_vars(vars_);
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (vars_ != o.vars_) {
        if (o.is_zero()) return *this;
        *this = with_vars(merge_vars(vars_, o.vars_));
        MPoly oo = o.with_vars(vars_);
        for (const auto& [m, c] : oo.terms_) add_term(m, c);
        return *this;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    *this += -o;
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(vars_, Rational(1));
    MPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MPoly MPoly::derivative(size_t i) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial mm = m;
        --mm[i];
        r.terms_.emplace(mm, c * m[i]);
    }
    return r;
}

std::vector<MPoly> MPoly::coefficients_in(size_t i) const {
    int d = degree_in(i);
    std::vector<MPoly> cs(d < 0 ? 0 : d + 1, MPoly(vars_));
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        int k = mm[i];
        mm[i] = 0;
        cs[k].terms_.emplace(mm, c);
    }
    return cs;
}

MPoly MPoly::from_coefficients(const std::vector<std::string>& vars, size_t i,
                               const std::vector<MPoly>& cs) {
    MPoly r(vars);
    for (size_t k = 0; k < cs.size(); ++k) {
        MPoly ck = cs[k].vars() == vars ? cs[k] : cs[k].with_vars(vars);
        for (const auto& [m, c] : ck.terms_) {
            Monomial mm = m;
            mm[i] += static_cast<int>(k);
            r.add_term(mm, c);
        }
    }
    return r;
}

MPoly MPoly::coefficient_of(size_t i, int k) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_)
        if (m[i] == k) {
            Monomial mm = m;
            mm[i] = 0;
            r.terms_.emplace(mm, c);
        }
    return r;
}

MPoly MPoly::top_homogeneous() const {
    MPoly r(vars_);
    int d = total_degree();
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0) == d) r.terms_.emplace(m, c);
    return r;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) fail("ArityMismatch", "evaluate");
    Rational s = 0;
    std::vector<std::vector<Rational>> powers(vars_.size());
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(1);
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * point[i]);
            t *= pw[m[i]];
        }
        s += t;
    }
    return s;
}

MPoly MPoly::substitute(size_t i, const Rational& v) const {
    MPoly r(vars_);
    std::vector<Rational> pw{1};
    for (const auto& [m, c] : terms_) {
        while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * v);
        Monomial mm = m;
        mm[i] = 0;
        r.add_term(mm, c * pw[m[i]]);
    }
    return r;
}

MPoly MPoly::substitute(size_t i, const MPoly& v) const {
    auto cs = coefficients_in(i);
    MPoly vv = v.with_vars(merge_vars(vars_, v.vars()));
    MPoly r(vv.vars());
    for (size_t k = cs.size(); k-- > 0;) {
        r = r * vv;
        r += cs[k].with_vars(vv.vars());
    }
    return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    if (images.size() != vars_.size()) fail("ArityMismatch", "compose");
    std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images[0].vars();
    for (const auto& im : images) target = merge_vars(target, im.vars());
    std::vector<MPoly> ims;
    for (const auto& im : images) ims.push_back(im.with_vars(target));
    std::vector<std::vector<MPoly>> powers(vars_.size());
    MPoly r(target);
    for (const auto& [m, c] : terms_) {
        MPoly t(target, c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(MPoly(target, Rational(1)));
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * ims[i]);
            t = t * pw[m[i]];
        }
        r += t;
    }
    return r;
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> map(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (size_t j = 0; j < vars.size(); ++j)
            if (vars[j] == vars_[i]) map[i] = static_cast<int>(j);
    }
    MPoly r(vars);
    for (const auto& [m, c] : terms_) {
        Monomial mm(vars.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0) fail("UnknownVariable", vars_[i] + " not in target variable list");
            mm[map[i]] = m[i];
        }
        r.terms_.emplace(mm, c);
    }
    return r;
}

MPoly MPoly::shifted_monomial(const Monomial& s) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        for (size_t i = 0; i < mm.size(); ++i) mm[i] += s[i];
        r.terms_.emplace(mm, c);
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (vars_ == o.vars_) return terms_ == o.terms_;
    auto all = merge_vars(vars_, o.vars_);
    return with_vars(all).terms_ == o.with_vars(all).terms_;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars()) {
        auto all = merge_vars(a.vars(), b.vars());
        return a.with_vars(all) * b.with_vars(all);
    }
    MPoly r(a.vars());
    if (a.is_zero() || b.is_zero()) return r;
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

// ---------------------------------------------------------------- UPoly

void UPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
    Rational s = 0;
    for (size_t i = c.size(); i-- > 0;) s = s * t + c[i];
    return s;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::shift(const Rational& t0) const {
    // Horner with (t + t0)
    UPoly r;
    UPoly lin(std::vector<Rational>{t0, 1});
    for (size_t i = c.size(); i-- > 0;) r = r * lin + UPoly::constant(c[i]);
    return r;
}

UPoly UPoly::monic() const {
    if (c.empty()) return *this;
    Rational l = c.back();
    UPoly r = *this;
    for (auto& v : r.c) v /= l;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) + b.at(i);
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) - b.at(i);
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return UPoly(std::move(r));
}

UPoly operator*(const Rational& k, const UPoly& a) {
    std::vector<Rational> r = a.c;
    for (auto& v : r) v *= k;
    return UPoly(std::move(r));
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    std::vector<Rational> rem = a.c;
    int db = b.degree();
    std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
    Rational lb = b.lead();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / lb;
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c[j];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UPoly upoly_pow(const UPoly& a, unsigned e) {
    UPoly r = UPoly::constant(1), base = a;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

UPoly to_upoly(const MPoly& p, size_t var) {
    std::vector<Rational> c(std::max(0, p.degree_in(var) + 1));
    for (const auto& [m, v] : p.terms()) {
        for (size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i] != 0) fail("NotUnivariate", p.str());
        c[m[var]] += v;
    }
    return UPoly(std::move(c));
}

MPoly from_upoly(const UPoly& p, const std::vector<std::string>& vars, size_t var) {
    MPoly r(vars);
    Monomial m(vars.size(), 0);
    for (size_t k = 0; k < p.c.size(); ++k) {
        m[var] = static_cast<int>(k);
        r.add_term(m, p.c[k]);
    }
    return r;
}

}  // namespace hornsing
