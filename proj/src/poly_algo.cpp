#include "hornsing/poly_algo.hpp"

#include <algorithm>
#include <functional>

#include "hornsing/error.hpp"

namespace hornsing {

Rational content(const MPoly& p) {
    if (p.is_zero()) return 0;
    std::vector<Rational> cs;
    cs.reserve(p.size());
    for (const auto& [m, c] : p.terms()) cs.push_back(c);
    Rational r(numerator_gcd(cs), denominator_lcm(cs));
    r.canonicalize();
    return r;
}

MPoly primitive(const MPoly& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    if (p.lead_coeff() < 0) c = -c;
    return p * (1 / c);
}

bool try_divide(const MPoly& a0, const MPoly& b0, MPoly& q) {
    if (b0.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    auto vars = merge_vars(a0.vars(), b0.vars());
    MPoly a = a0.with_vars(vars), b = b0.with_vars(vars);
    q = MPoly(vars);
    if (a.is_zero()) return true;
    for (size_t i = 0; i < vars.size(); ++i)
        if (a.degree_in(i) < b.degree_in(i)) return false;
    const Monomial& lb = b.lead_monomial();
    const Rational lcb = b.lead_coeff();
    int db = b.total_degree();
    MPoly r = a;
    Monomial t(vars.size());
    while (!r.is_zero()) {
        if (r.total_degree() < db) return false;
        const Monomial& lr = r.lead_monomial();
        for (size_t i = 0; i < vars.size(); ++i) {
            if (lr[i] < lb[i]) return false;
            t[i] = lr[i] - lb[i];
        }
        Rational f = r.lead_coeff() / lcb;
        q.add_term(t, f);
        Monomial m(vars.size());
        for (const auto& [mb, cb] : b.terms()) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = mb[i] + t[i];
            r.add_term(m, -f * cb);
        }
    }
    return true;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
    MPoly q;
    if (!try_divide(a, b, q)) fail("NotDivisible", "(" + a.str() + ") / (" + b.str() + ")");
    return q;
}

bool divides(const MPoly& b, const MPoly& a) {
    MPoly q;
    return try_divide(a, b, q);
}

Monomial monomial_content(const MPoly& p) {
    Monomial m(p.nvars(), 0);
    if (p.is_zero()) return m;
    for (size_t i = 0; i < p.nvars(); ++i) m[i] = p.min_degree_in(i);
    return m;
}

UPoly primitive(const UPoly& p) {
    if (p.is_zero()) return p;
    Rational c(numerator_gcd(p.c), denominator_lcm(p.c));
    c.canonicalize();
    if (p.lead() < 0) c = -c;
    return (1 / c) * p;
}

namespace {

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_in(const MPoly& p, size_t v) {
    auto cs = p.coefficients_in(v);
    MPoly g(p.vars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive(c) : gcd_rec(g, c);
        if (g.is_constant()) return MPoly(p.vars(), Rational(1));
    }
    return g;
}

MPoly prem(const MPoly& A, const MPoly& B, size_t v) {
    auto a = A.coefficients_in(v);
    auto b = B.coefficients_in(v);
    const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    const MPoly& lb = b[db];
    for (int k = da; k >= db; --k) {
        MPoly f = a[k];
        for (int i = 0; i < k; ++i)
            if (!a[i].is_zero()) a[i] = a[i] * lb;
        if (!f.is_zero())
            for (int j = 0; j < db; ++j)
                if (!b[j].is_zero()) a[k - db + j] -= f * b[j];
        a.pop_back();
    }
    return MPoly::from_coefficients(A.vars(), v, a);
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return primitive(b);
    if (b.is_zero()) return primitive(a);
    const auto& vars = a.vars();
    MPoly one(vars, Rational(1));
    if (a.is_constant() || b.is_constant()) return one;
    std::vector<size_t> occ;
    for (size_t i = 0; i < vars.size(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) occ.push_back(i);
    if (occ.size() == 1) {
        size_t v = occ[0];
        UPoly g = upoly_gcd(to_upoly(a, v), to_upoly(b, v));
        return primitive(from_upoly(g, vars, v));
    }
    // main variable: smallest combined degree
    size_t v = occ[0];
    int best = 1 << 30;
    for (size_t i : occ) {
        int d = std::max(a.degree_in(i), 0) + std::max(b.degree_in(i), 0);
        if (a.degree_in(i) > 0 && b.degree_in(i) > 0 && d < best) {
            best = d;
            v = i;
        }
    }
    if (a.degree_in(v) <= 0) return gcd_rec(a, content_in(b, v));
    if (b.degree_in(v) <= 0) return gcd_rec(content_in(a, v), b);
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly A = divide_exact(a, ca), B = divide_exact(b, cb);
    MPoly gc = gcd_rec(ca, cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (true) {
        if (B.is_zero()) break;
        if (B.degree_in(v) == 0) {
            A = one;
            break;
        }
        MPoly R = prem(A, B, v);
        A = std::move(B);
        if (R.is_zero()) break;
        B = divide_exact(R, content_in(R, v));
    }
    return primitive(gc * A);
}

}  // namespace

MPoly poly_gcd(const MPoly& a0, const MPoly& b0) {
    auto vars = merge_vars(a0.vars(), b0.vars());
    MPoly a = a0.with_vars(vars), b = b0.with_vars(vars);
    if (a.is_zero() && b.is_zero()) return MPoly(vars);
    return gcd_rec(a, b);
}

MPoly bareiss_det(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars) {
    const size_t n = m.size();
    if (n == 0) return MPoly(vars, Rational(1));
    MPoly prev(vars, Rational(1));
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MPoly(vars);
            std::swap(m[k], m[p]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() ? t * (1 / prev.constant_term()) : divide_exact(t, prev);
            }
            m[i][k] = MPoly(vars);
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    return neg ? -d : d;
}

MPoly resultant_general(const MPoly& a, const MPoly& b, size_t var) {
    const auto& vars = a.vars();
    int m = a.degree_in(var), n = b.degree_in(var);
    if (a.is_zero() || b.is_zero()) return MPoly(vars);
    if (m == 0) return b.vars() == vars ? a.pow(n) : a.pow(n).with_vars(vars);
    if (n == 0) return b.pow(m);
    auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<MPoly>> S(N, std::vector<MPoly>(N, MPoly(vars)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S[r][r + k] = ca[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S[n + r][r + k] = cb[n - k];
    return bareiss_det(std::move(S), vars);
}

MPoly resultant(const MPoly& a0, const MPoly& b0, const std::string& var) {
    auto vars = merge_vars(a0.vars(), b0.vars());
    MPoly a = a0.with_vars(vars), b = b0.with_vars(vars);
    int vi = a.index_of(var);
    if (vi < 0 || a.degree_in(vi) <= 0 || b.degree_in(vi) <= 0)
        fail("DegreeZero", "input constant in " + var);
    return resultant_general(a, b, static_cast<size_t>(vi));
}

MPoly discriminant(const MPoly& a, const std::string& var) {
    int vi = a.index_of(var);
    int n = vi < 0 ? 0 : a.degree_in(vi);
    if (n < 2) fail("DegreeTooLow", "degree in " + var + " below 2");
    MPoly r = resultant_general(a, a.derivative(vi), vi);
    MPoly lc = a.coefficient_of(vi, n);
    MPoly d = lc.is_constant() ? r * (1 / lc.constant_term()) : divide_exact(r, lc);
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

MPoly squarefree_primitive(const MPoly& a) {
    if (a.is_zero()) fail("ZeroInput", "squarefree part of zero");
    if (a.is_constant()) return MPoly(a.vars(), Rational(1));
    MPoly g = a;
    for (size_t i : a.occurring()) {
        g = poly_gcd(g, a.derivative(i));
        if (g.is_constant()) break;
    }
    return primitive(g.is_constant() ? a : divide_exact(a, g));
}

// ------------------------------------------------------------- univariate

std::vector<SquarefreePart> squarefree_decomposition(const UPoly& p0) {
    std::vector<SquarefreePart> out;
    if (p0.degree() < 1) return out;
    UPoly p = p0.monic();
    UPoly dp = p.derivative();
    UPoly a = upoly_gcd(p, dp);
    UPoly q, r;
    divmod(p, a, q, r);
    UPoly b = q;
    divmod(dp, a, q, r);
    UPoly c = q;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = upoly_gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        divmod(b, g, q, r);
        b = q;
        divmod(d, g, q, r);
        c = q;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// prime factorization by trial division; false if a large composite cofactor remains
bool factor_integer(Integer n, std::vector<std::pair<Integer, int>>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return true;
    for (unsigned long p = 2; p < 200000; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out.push_back({Integer(p), e});
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;
        out.push_back({n, 1});
    }
    return true;
}

bool divisors(const Integer& n, std::vector<Integer>& out, size_t cap) {
    std::vector<std::pair<Integer, int>> f;
    if (!factor_integer(n, f)) return false;
    out = {Integer(1)};
    for (auto& [p, e] : f) {
        size_t s = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < s; ++i) out.push_back(out[i] * pk);
        }
        if (out.size() > cap) return false;
    }
    return true;
}

std::vector<Integer> integer_coeffs(const UPoly& p) {
    UPoly q = primitive(p);
    std::vector<Integer> z;
    for (const auto& c : q.c) z.push_back(c.get_num());
    return z;
}

Integer eval_int(const std::vector<Integer>& z, const Integer& x) {
    Integer s = 0;
    for (size_t i = z.size(); i-- > 0;) s = s * x + z[i];
    return s;
}

bool find_root(const std::vector<Integer>& z, Rational& root, bool& complete) {
    complete = true;
    if (z[0] == 0) {
        root = 0;
        return true;
    }
    std::vector<Integer> dn, dd;
    if (!divisors(z[0], dn, 20000) || !divisors(z.back(), dd, 20000)) {
        complete = false;
        return false;
    }
    const size_t n = z.size() - 1;
    for (const auto& e : dd)
        for (const auto& d : dn) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
            if (g != 1) continue;
            for (int s : {1, -1}) {
                Integer num = s * d;
                // e^n p(num/e)
                Integer acc = 0, epow = 1;
                std::vector<Integer> ep(n + 1);
                for (size_t i = 0; i <= n; ++i) {
                    ep[i] = epow;
                    epow *= e;
                }
                Integer npow = 1;
                for (size_t i = 0; i <= n; ++i) {
                    acc += z[i] * npow * ep[n - i];
                    npow *= num;
                }
                if (acc == 0) {
                    root = Rational(num, e);
                    root.canonicalize();
                    return true;
                }
            }
        }
    return false;
}

// Kronecker: factor of degree k given values at k+1 small integer points.
bool kronecker_factor(const UPoly& f, int k, UPoly& g, bool& complete) {
    auto z = integer_coeffs(f);
    std::vector<Integer> xs, vals;
    for (long x = 0; static_cast<int>(xs.size()) <= k && x < 64; x = (x <= 0 ? 1 - x : -x)) {
        Integer v = eval_int(z, Integer(x));
        if (v == 0) return false;
        xs.push_back(x);
        vals.push_back(v);
    }
    std::vector<std::vector<Integer>> ds(xs.size());
    size_t combos = 1;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!divisors(vals[i], ds[i], 4000)) {
            complete = false;
            return false;
        }
        combos *= ds[i].size() * (i ? 2 : 1);
        if (combos > 400000) {
            complete = false;
            return false;
        }
    }
    std::vector<Integer> pick(xs.size());
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == xs.size()) {
            // Lagrange interpolation through (xs, pick)
            UPoly h;
            for (size_t a = 0; a < xs.size(); ++a) {
                UPoly term = UPoly::constant(Rational(pick[a]));
                for (size_t b = 0; b < xs.size(); ++b) {
                    if (a == b) continue;
                    term = term * UPoly(std::vector<Rational>{Rational(-xs[b]), 1});
                    term = Rational(1, 1) / Rational(xs[a] - xs[b]) * term;
                }
                h = h + term;
            }
            if (h.degree() != k) return false;
            for (const auto& c : h.c)
                if (c.get_den() != 1) return false;
            UPoly q, r;
            divmod(f, h, q, r);
            if (!r.is_zero()) return false;
            g = primitive(h);
            return true;
        }
        for (const auto& d : ds[i])
            for (int s : {1, -1}) {
                if (i == 0 && s < 0) continue;
                pick[i] = s * d;
                if (rec(i + 1)) return true;
            }
        return false;
    };
    return rec(0);
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
    std::vector<Rational> roots;
    UPoly f = primitive(p);
    while (f.degree() >= 1) {
        Rational r;
        bool complete;
        if (!find_root(integer_coeffs(f), r, complete)) break;
        roots.push_back(r);
        UPoly q, rem;
        divmod(f, UPoly(std::vector<Rational>{-r, 1}), q, rem);
        f = q;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UFactorization factor_univariate(const UPoly& p) {
    if (p.is_zero()) fail("ZeroInput", "factor of zero");
    UFactorization out;
    UPoly prim = primitive(p);
    out.unit = p.lead() / prim.lead();
    for (const auto& part : squarefree_decomposition(prim)) {
        UPoly f = primitive(part.f);
        while (f.degree() >= 1) {
            Rational r;
            bool complete;
            if (find_root(integer_coeffs(f), r, complete)) {
                UPoly lin = primitive(UPoly(std::vector<Rational>{-r, 1}));
                out.factors.push_back({lin, part.mult, true});
                UPoly q, rem;
                divmod(f, lin, q, rem);
                f = primitive(q);
                continue;
            }
            if (f.degree() <= 3) {
                out.factors.push_back({f, part.mult, complete});
                break;
            }
            bool split = false, all_complete = complete;
            if (f.degree() <= 6) {
                for (int k = 2; k <= f.degree() / 2 && !split; ++k) {
                    UPoly g;
                    bool c2 = true;
                    if (kronecker_factor(f, k, g, c2)) {
                        out.factors.push_back({g, part.mult, true});
                        UPoly q, rem;
                        divmod(f, g, q, rem);
                        f = primitive(q);
                        split = true;
                    }
                    all_complete = all_complete && c2;
                }
                if (split) continue;
                out.factors.push_back({f, part.mult, all_complete});
            } else {
                out.factors.push_back({f, part.mult, false});
            }
            break;
        }
    }
    return out;
}

}  // namespace hornsing
