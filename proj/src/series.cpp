#include "hornsing/series.hpp"

#include <algorithm>
#include <sstream>

#include "hornsing/error.hpp"

namespace hornsing {

BiSeries::BiSeries(int order) : order_(order), c_(index(0, order + 1)) {}

Rational BiSeries::get(int n, int m) const {
    if (n < 0 || m < 0 || n + m > order_) return 0;
    return c_[index(n, m)];
}

BiSeries BiSeries::truncated(int order) const {
    if (order > order_) fail("InsufficientOrder", "cannot extend a series by truncation");
    BiSeries r(order);
    std::copy(c_.begin(), c_.begin() + static_cast<long>(index(0, order + 1)), r.c_.begin());
    return r;
}

int UniSeries::valuation() const {
    for (int k = 0; k <= order; ++k)
        if (c[k] != 0) return k;
    return order + 1;
}

UniSeries UniSeries::truncated(int n) const {
    if (n > order) fail("InsufficientOrder", "cannot extend a series by truncation");
    return UniSeries(std::vector<Rational>(c.begin(), c.begin() + n + 1));
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order, b.order));
    for (int k = 0; k <= r.order; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

namespace {

// product truncated at N, both factors read through N
UniSeries mul_trunc(const UniSeries& a, const UniSeries& b, int N) {
    UniSeries r(N);
    int va = a.valuation(), vb = b.valuation();
    Rational t;
    for (int i = va; i <= std::min(N, a.order); ++i) {
        if (a.c[i] == 0) continue;
        for (int j = vb; i + j <= N && j <= b.order; ++j) {
            if (b.c[j] == 0) continue;
            t = a.c[i] * b.c[j];
            r.c[i + j] += t;
        }
    }
    return r;
}

}  // namespace

UniSeries operator*(const UniSeries& a, const UniSeries& b) { return mul_trunc(a, b, std::min(a.order, b.order)); }

UniSeries operator*(const Rational& k, const UniSeries& a) {
    UniSeries r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

UniSeries derivative(const UniSeries& a) {
    UniSeries r(std::max(a.order - 1, 0));
    if (a.order < 1) return r;
    for (int k = 1; k <= a.order; ++k) r.c[k - 1] = a.c[k] * k;
    return r;
}

UniSeries geometric_series(int n) {
    UniSeries r(n);
    for (auto& x : r.c) x = 1;
    return r;
}

bool check_compatibility(const HyperSpec& s) { return ratios_compatible(s.alpha1, s.alpha2, s.n, s.m); }

BiSeries expand_from_ratios(const HyperSpec& s, int N) {
    if (!check_compatibility(s)) fail("IncompatibleSpec", "alpha1 and alpha2 fail the compatibility identity");
    std::vector<std::string> idx{s.n, s.m};
    RatFun a1 = s.alpha1.with_vars(idx), a2 = s.alpha2.with_vars(idx);
    BiSeries b(N);
    if (N < 0) return b;
    b.at(0, 0) = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) b.at(n, 0) = b.at(n - 1, 0) * a1.evaluate({Rational(n - 1), Rational(0)});
        for (int m = 1; n + m <= N; ++m) b.at(n, m) = b.at(n, m - 1) * a2.evaluate({Rational(n), Rational(m - 1)});
    }
    return b;
}

BiSeries expand_from_formula_serial(const ExprPtr& f, const std::vector<std::string>& idx, const Bindings& params,
                                    int N) {
    BiSeries b(N);
    Bindings env = params;
    for (int d = 0; d <= N; ++d)
        for (int m = 0; m <= d; ++m) {
            env[idx[0]] = d - m;
            env[idx[1]] = m;
            b.at(d - m, m) = evaluate(f, env);
        }
    return b;
}

BiSeries expand_from_formula(const ExprPtr& f, const std::vector<std::string>& idx, const Bindings& params, int N) {
    BiSeries b(N);
    std::vector<std::pair<int, int>> cells;
    for (int d = 0; d <= N; ++d)
        for (int m = 0; m <= d; ++m) cells.emplace_back(d - m, m);
    long total = static_cast<long>(cells.size());
    std::string err;
#pragma omp parallel
    {
        Bindings env = params;
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < total; ++i) {
            auto [n, m] = cells[static_cast<size_t>(i)];
            env[idx[0]] = n;
            env[idx[1]] = m;
            try {
                b.at(n, m) = evaluate(f, env);
            } catch (const Error& e) {
#pragma omp critical
                if (err.empty()) err = e.what();
            }
        }
    }
    if (!err.empty()) {
        // rethrow the first failure in deterministic form
        expand_from_formula_serial(f, idx, params, N);
        fail("EvaluationError", err);
    }
    return b;
}

UniSeries taylor(const RatFun& g, int N) {
    if (g.vars().size() > 1) {
        size_t used = 0;
        for (size_t i = 0; i < g.vars().size(); ++i)
            if (g.num().involves(i) || g.den().involves(i)) ++used;
        if (used > 1) fail("NotUnivariate", g.str());
    }
    size_t var = 0;
    for (size_t i = 0; i < g.vars().size(); ++i)
        if (g.num().involves(i) || g.den().involves(i)) var = i;
    UPoly num = g.vars().empty() ? UPoly::constant(g.num().constant_term()) : to_upoly(g.num(), var);
    UPoly den = g.vars().empty() ? UPoly::constant(g.den().constant_term()) : to_upoly(g.den(), var);
    if (den.at(0) == 0) fail("NonzeroAtOrigin", "pole at the origin: " + g.str());
    UniSeries r(N);
    Rational inv = 1 / den.at(0);
    for (int k = 0; k <= N; ++k) {
        Rational s = num.at(static_cast<size_t>(k));
        for (int i = 1; i <= std::min(k, den.degree()); ++i) s -= den.c[i] * r.c[k - i];
        r.c[k] = s * inv;
    }
    return r;
}

namespace {

struct RestrictPlan {
    UniSeries X, Y;
    int vx, vy, need;
};

RestrictPlan plan_restrict(const BiSeries& b, const RatFun& xp, const RatFun& yp, int N) {
    RestrictPlan p;
    p.X = taylor(xp, N);
    p.Y = taylor(yp, N);
    if (p.X.c[0] != 0) fail("NonzeroAtOrigin", "x(0) = " + p.X.c[0].get_str());
    if (p.Y.c[0] != 0) fail("NonzeroAtOrigin", "y(0) = " + p.Y.c[0].get_str());
    p.vx = p.X.valuation();
    p.vy = p.Y.valuation();
    int v = std::min(p.vx, p.vy);
    p.need = (N + v - 1) / v;
    if (b.order() < p.need)
        fail("InsufficientOrder", "restriction through t^" + std::to_string(N) + " needs bi-order " +
                                      std::to_string(p.need) + ", series has " + std::to_string(b.order()));
    return p;
}

std::vector<UniSeries> powers(const UniSeries& a, int count, int v, int N) {
    std::vector<UniSeries> pw;
    UniSeries one(N);
    one.c[0] = 1;
    pw.push_back(one);
    for (int k = 1; k <= count && static_cast<long>(k) * v <= N; ++k) pw.push_back(mul_trunc(pw.back(), a, N));
    return pw;
}

UniSeries restrict_row(const BiSeries& b, const RestrictPlan& p, const std::vector<UniSeries>& xp,
                       const std::vector<UniSeries>& yp, int n, int N) {
    UniSeries inner(N);
    int room = N - n * p.vx;
    for (int m = 0; m <= p.need - n && m < static_cast<int>(yp.size()); ++m) {
        if (m * p.vy > room) break;
        const Rational& c = b.at(n, m);
        if (c == 0) continue;
        for (int k = m * p.vy; k <= N; ++k)
            if (yp[m].c[k] != 0) inner.c[k] += c * yp[m].c[k];
    }
    return mul_trunc(xp[n], inner, N);
}

}  // namespace

int restrict_needed(const RatFun& xp, const RatFun& yp, int N) {
    UniSeries X = taylor(xp, N), Y = taylor(yp, N);
    if (X.c[0] != 0) fail("NonzeroAtOrigin", "x(0) = " + X.c[0].get_str());
    if (Y.c[0] != 0) fail("NonzeroAtOrigin", "y(0) = " + Y.c[0].get_str());
    int v = std::min(X.valuation(), Y.valuation());
    return (N + v - 1) / v;
}

UniSeries restrict_serial(const BiSeries& b, const RatFun& xp, const RatFun& yp, int N) {
    RestrictPlan p = plan_restrict(b, xp, yp, N);
    auto XP = powers(p.X, p.need, p.vx, N), YP = powers(p.Y, p.need, p.vy, N);
    UniSeries r(N);
    for (int n = 0; n < static_cast<int>(XP.size()) && n <= p.need; ++n) r = r + restrict_row(b, p, XP, YP, n, N);
    return r;
}

UniSeries restrict(const BiSeries& b, const RatFun& xp, const RatFun& yp, int N) {
    RestrictPlan p = plan_restrict(b, xp, yp, N);
    auto XP = powers(p.X, p.need, p.vx, N), YP = powers(p.Y, p.need, p.vy, N);
    int rows = std::min(static_cast<int>(XP.size()) - 1, p.need) + 1;
    std::vector<UniSeries> parts(static_cast<size_t>(rows));
#pragma omp parallel for schedule(dynamic, 1)
    for (int n = 0; n < rows; ++n) parts[n] = restrict_row(b, p, XP, YP, n, N);
    UniSeries r(N);
    for (const auto& s : parts) r = r + s;
    return r;
}

UniSeries hadamard(const UniSeries& a, const UniSeries& b) {
    if (a.order != b.order)
        fail("OrderMismatch", std::to_string(a.order) + " vs " + std::to_string(b.order));
    UniSeries r(a.order);
    for (int k = 0; k <= a.order; ++k) r.c[k] = a.c[k] * b.c[k];
    return r;
}

UniSeries compose_rational(const UniSeries& a, const RatFun& g, int N) {
    UniSeries G = taylor(g, N);
    if (G.c[0] != 0) fail("NonzeroAtOrigin", "g(0) = " + G.c[0].get_str());
    int v = G.valuation();
    int need = v > N ? 0 : N / v;
    if (a.order < need) fail("InsufficientOrder", "composition needs " + std::to_string(need) + " terms");
    UniSeries r(N);
    for (int k = need; k >= 0; --k) {
        r = mul_trunc(r, G, N);
        r.c[0] += a.c[k];
    }
    return r;
}

UniSeries diagonal_sum(const BiSeries& b) {
    UniSeries r(b.order());
    for (int d = 0; d <= b.order(); ++d)
        for (int m = 0; m <= d; ++m) r.c[d] += b.at(d - m, m);
    return r;
}

SeriesSource series_source(const SpecFile& s) {
    SeriesSource src;
    src.name = s.name;
    src.tag = s.tag;
    src.idx = s.vars;
    src.params = s.params;
    std::vector<std::string> pnames;
    for (const auto& [k, v] : s.params) pnames.push_back(k);
    if (s.kind == "ratio") {
        HyperSpec h;
        h.n = s.vars[0];
        h.m = s.vars[1];
        h.alpha1 = to_ratfun(parse_expr(s.alpha1, s.vars, pnames), s.vars, s.params).with_vars(s.vars);
        h.alpha2 = to_ratfun(parse_expr(s.alpha2, s.vars, pnames), s.vars, s.params).with_vars(s.vars);
        if (s.scale != 1) {
            RatFun k(MPoly(s.vars, s.scale));
            h.alpha1 = h.alpha1 * k;
            h.alpha2 = h.alpha2 * k;
        }
        src.ratios = h;
    } else {
        src.formula = parse_expr(s.coefficient, s.vars, pnames);
        src.scale = s.scale;
    }
    return src;
}

BiSeries expand(const SeriesSource& src, int N) {
    if (src.ratios) return expand_from_ratios(*src.ratios, N);
    BiSeries b = expand_from_formula(src.formula, src.idx, src.params, N);
    if (src.scale != 1) {
        Rational p = 1;
        for (int d = 0; d <= N; ++d, p *= src.scale)
            for (int m = 0; m <= d; ++m) b.at(d - m, m) *= p;
    }
    return b;
}

UniSeries hypergeometric_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& z, int N) {
    UniSeries s;
    s.order = N;
    s.c.assign(N + 1, Rational(0));
    Rational t = 1;
    for (int k = 0; k <= N; ++k) {
        s.c[k] = t;
        Rational num = z, den = k + 1;
        for (const auto& x : a) num *= x + k;
        for (const auto& x : b) den *= x + k;
        if (den == 0) fail("RatioPole", "lower parameter hits a nonpositive integer");
        t = t * num / den;
    }
    return s;
}

std::string series_to_text(const BiSeries& b, const std::vector<std::string>& vars) {
    std::string out = "vars: " + vars[0] + " " + vars[1] + "\n";
    for (int d = 0; d <= b.order(); ++d)
        for (int m = 0; m <= d; ++m)
            out += std::to_string(d - m) + " " + std::to_string(m) + " " + b.at(d - m, m).get_str() + "\n";
    return out;
}

std::string series_to_text(const UniSeries& s, const std::string& var) {
    std::string out = "vars: " + var + "\n";
    for (int k = 0; k <= s.order; ++k) out += std::to_string(k) + " " + s.c[k].get_str() + "\n";
    return out;
}

namespace {

std::vector<std::vector<std::string>> series_lines(const std::string& text, size_t want_vars) {
    std::istringstream in(text);
    std::string line;
    bool header = false;
    std::vector<std::vector<std::string>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> w;
        for (std::string x; ls >> x;) w.push_back(x);
        if (w.empty()) continue;
        if (!header) {
            if (w[0] != "vars:" || w.size() != want_vars + 1)
                fail("ValidationError", "series header: expected 'vars:' with " + std::to_string(want_vars) + " names");
            header = true;
            continue;
        }
        if (w.size() != want_vars + 1) fail("SyntaxError", "line " + std::to_string(lineno) + ": bad series line");
        rows.push_back(w);
    }
    if (!header) fail("ValidationError", "series header missing");
    return rows;
}

int to_index(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail("SyntaxError", "bad exponent " + s);
    }
}

}  // namespace

UniSeries uniseries_from_text(const std::string& text) {
    auto rows = series_lines(text, 1);
    int order = -1;
    for (const auto& r : rows) order = std::max(order, to_index(r[0]));
    UniSeries s(order);
    for (const auto& r : rows) s.c[to_index(r[0])] = parse_rational(r[1]);
    return s;
}

BiSeries biseries_from_text(const std::string& text) {
    auto rows = series_lines(text, 2);
    int order = -1;
    for (const auto& r : rows) order = std::max(order, to_index(r[0]) + to_index(r[1]));
    BiSeries b(order);
    for (const auto& r : rows) b.at(to_index(r[0]), to_index(r[1])) = parse_rational(r[2]);
    return b;
}

}  // namespace hornsing
