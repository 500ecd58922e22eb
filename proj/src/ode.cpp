#include "hornsing/ode.hpp"

#include <algorithm>
#include <sstream>

#include "hornsing/error.hpp"
#include "hornsing/linalg.hpp"

namespace hornsing {

namespace {

Integer stirling2(int k, int j) {
    static std::vector<std::vector<Integer>> table{{1}};
    while (static_cast<int>(table.size()) <= k) {
        size_t n = table.size();
        std::vector<Integer> row(n + 1);
        for (size_t i = 1; i <= n; ++i)
            row[i] = (i < n ? Integer(i) * table[n - 1][i] : Integer(0)) + table[n - 1][i - 1];
        table.push_back(row);
    }
    return j <= k ? table[k][j] : Integer(0);
}

UPoly falling(int j) {
    UPoly r = UPoly::constant(1);
    for (int i = 0; i < j; ++i) r = r * UPoly(std::vector<Rational>{-i, 1});
    return r;
}

Rational falling_at(long m, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) r *= m - i;
    return r;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    return q;
}

}  // namespace

int UniODE::degree() const {
    int d = 0;
    for (const auto& q : p) d = std::max(d, q.degree());
    return d;
}

MPoly UniODE::coefficient(int j, const std::string& var) const {
    return from_upoly(p.at(static_cast<size_t>(j)), {var}, 0);
}

UniODE UniODE::normalized() const {
    UniODE r = *this;
    while (!r.p.empty() && r.p.back().is_zero()) r.p.pop_back();
    if (r.p.empty()) fail("ZeroInput", "zero operator");
    UPoly g;
    for (const auto& q : r.p) g = upoly_gcd(g, q);
    if (g.degree() > 0)
        for (auto& q : r.p) q = exact_quotient(q, g);
    std::vector<Rational> all;
    for (const auto& q : r.p) all.insert(all.end(), q.c.begin(), q.c.end());
    Rational k = Rational(denominator_lcm(all)) / Rational(numerator_gcd(all));
    const UPoly& head = r.p.back();
    Rational low = 0;
    for (const auto& c : head.c)
        if (c != 0) {
            low = c;
            break;
        }
    if (low < 0) k = -k;
    for (auto& q : r.p) q = k * q;
    return r;
}

UniODE UniODE::parse(const std::vector<std::string>& coeffs, const std::string& var) {
    UniODE r;
    for (const auto& s : coeffs) r.p.push_back(to_upoly(parse_poly(s, {var}), 0));
    return r;
}

int ThetaUni::order() const {
    int d = -1;
    for (const auto& q : P) d = std::max(d, q.degree());
    return d;
}

ThetaUni to_theta(const UniODE& ode) {
    int r = ode.order();
    ThetaUni out;
    for (int j = 0; j <= r; ++j) {
        const UPoly& pj = ode.p[j];
        UPoly fj = falling(j);
        for (int i = 0; i <= pj.degree(); ++i) {
            if (pj.c[i] == 0) continue;
            size_t xi = static_cast<size_t>(i + r - j);
            if (out.P.size() <= xi) out.P.resize(xi + 1);
            out.P[xi] = out.P[xi] + pj.c[i] * fj;
        }
    }
    size_t lead = 0;
    while (lead < out.P.size() && out.P[lead].is_zero()) ++lead;
    out.P.erase(out.P.begin(), out.P.begin() + static_cast<long>(lead));
    while (!out.P.empty() && out.P.back().is_zero()) out.P.pop_back();
    return out;
}

UniODE to_dform(const ThetaUni& op) {
    int r = op.order();
    if (r < 0) fail("ZeroInput", "zero operator");
    UniODE out;
    out.p.assign(static_cast<size_t>(r + 1), UPoly());
    for (size_t i = 0; i < op.P.size(); ++i)
        for (int k = 0; k <= op.P[i].degree(); ++k) {
            if (op.P[i].c[k] == 0) continue;
            for (int j = 0; j <= k; ++j) {
                Integer s = stirling2(k, j);
                if (s == 0) continue;
                std::vector<Rational> c(i + static_cast<size_t>(j) + 1);
                c.back() = op.P[i].c[k] * Rational(s);
                out.p[j] = out.p[j] + UPoly(c);
            }
        }
    return out.normalized();
}

ThetaOp to_theta_op(const ThetaUni& op) {
    std::vector<ThetaTerm> terms;
    for (size_t i = 0; i < op.P.size(); ++i)
        terms.push_back({static_cast<int>(i), 0, from_upoly(op.P[i], ThetaOp::theta_vars(), 0)});
    return ThetaOp::make(terms);
}

ThetaUni from_theta_op(const ThetaOp& op) {
    if (op.involves_y()) fail("NotUnivariate", "operator involves y");
    ThetaUni out;
    for (const auto& t : op.terms) {
        if (out.P.size() <= static_cast<size_t>(t.a)) out.P.resize(static_cast<size_t>(t.a) + 1);
        out.P[t.a] = to_upoly(t.Q, 0);
    }
    return out;
}

// ------------------------------------------------------------ guessing

namespace {

RMatrix guess_matrix(const UniSeries& s, int order, int degree, int rows) {
    size_t U = static_cast<size_t>((order + 1) * (degree + 1));
    RMatrix a(static_cast<size_t>(rows), RVector(U));
    for (int n = 0; n < rows; ++n)
        for (int i = 0; i <= degree && i <= n; ++i) {
            const Rational& c = s.c[n - i];
            if (c == 0) continue;
            Rational pw = 1;
            for (int k = 0; k <= order; ++k) {
                a[n][static_cast<size_t>(i * (order + 1) + k)] = pw * c;
                pw *= n - i;
            }
        }
    return a;
}

}  // namespace

size_t guess_dimension(const UniSeries& s, int order, int degree) {
    size_t U = static_cast<size_t>((order + 1) * (degree + 1));
    return nullspace(guess_matrix(s, order, degree, s.order + 1), U).size();
}

std::optional<GuessReport> guess_ode(const UniSeries& s, int max_order, int max_degree) {
    if (max_order < 1 || max_degree < 0) fail("ValidationError", "bounds must be order >= 1, degree >= 0");
    int need = (max_order + 1) * (max_degree + 1) + max_order + 10;
    if (s.order < need)
        fail("InsufficientOrder", "guessing with bounds (" + std::to_string(max_order) + "," +
                                      std::to_string(max_degree) + ") needs order " + std::to_string(need));
    int rows = s.order + 1;
    for (int r = 1; r <= max_order; ++r) {
        if (guess_dimension(s, r, max_degree) == 0) continue;
        for (int d = 0; d <= max_degree; ++d) {
            size_t U = static_cast<size_t>((r + 1) * (d + 1));
            RMatrix a = guess_matrix(s, r, d, rows);
            auto ns = nullspace(a, U);
            if (ns.empty()) continue;
            // shortest prefix of equations that already pins the solution space
            size_t lo = 1, hi = static_cast<size_t>(rows);
            while (lo < hi) {
                size_t mid = (lo + hi) / 2;
                RMatrix pre(a.begin(), a.begin() + static_cast<long>(mid));
                if (U - rank(pre, U) == ns.size()) hi = mid;
                else lo = mid + 1;
            }
            int margin = rows - static_cast<int>(lo);
            if (margin < 10) continue;
            auto last_nz = [](const RVector& v) {
                size_t k = v.size();
                while (k > 0 && v[k - 1] == 0) --k;
                return k;
            };
            const RVector* best = &ns[0];
            for (const auto& v : ns)
                if (last_nz(v) < last_nz(*best)) best = &v;
            ThetaUni th;
            for (int i = 0; i <= d; ++i) {
                std::vector<Rational> c((*best).begin() + i * (r + 1), (*best).begin() + (i + 1) * (r + 1));
                th.P.push_back(UPoly(c));
            }
            while (!th.P.empty() && th.P.back().is_zero()) th.P.pop_back();
            GuessReport rep;
            rep.theta = th;
            rep.ode = to_dform(th);
            rep.order = r;
            rep.degree = d;
            rep.checked_margin = margin;
            return rep;
        }
    }
    return std::nullopt;
}

SingularReport singular_points(const UniODE& ode) {
    UPoly head = ode.p.back();
    SingularReport rep;
    int z = 0;
    while (z <= head.degree() && head.c[z] == 0) ++z;
    rep.zero_multiplicity = z;
    UPoly rest(std::vector<Rational>(head.c.begin() + z, head.c.end()));
    UFactorization f = factor_univariate(rest);
    rep.unit = f.unit;
    rep.factors = f.factors;
    return rep;
}

UniODE UniODE::shifted(const Rational& t0) const {
    UniODE out;
    for (const auto& pj : p) out.p.push_back(pj.shift(t0));
    return out;
}

std::vector<UniSeries> local_basis(const UniODE& ode, const Rational& t0, int N) {
    int r = ode.order();
    std::vector<UPoly> q;
    for (const auto& pj : ode.p) q.push_back(pj.shift(t0));
    Rational h = q[r].at(0);
    if (h == 0) fail("SingularPoint", "head vanishes at t0 = " + t0.get_str());
    std::vector<UniSeries> out;
    for (int b = 0; b < r; ++b) {
        UniSeries y(N);
        if (b <= N) y.c[b] = 1;
        for (int n = 0; n + r <= N; ++n) {
            Rational s = 0;
            for (int j = 0; j <= r; ++j)
                for (int i = 0; i <= q[j].degree(); ++i) {
                    if (j == r && i == 0) continue;
                    long m = n - i + j;
                    if (m < 0 || q[j].c[i] == 0 || y.c[m] == 0) continue;
                    s += q[j].c[i] * falling_at(m, j) * y.c[m];
                }
            y.c[n + r] = -s / (h * falling_at(n + r, r));
        }
        out.push_back(std::move(y));
    }
    return out;
}

Rational ordinary_base_point(const UniODE& ode) {
    const UPoly& head = ode.p.back();
    for (int q = 7;; q = (q == 7 ? 10 : q + 1)) {
        Rational t0(1, q);
        if (head.eval(t0) != 0) return t0;
    }
}

namespace {

size_t series_rank(const std::vector<UniSeries>& fs, int N) {
    RMatrix a;
    for (const auto& f : fs) a.push_back(RVector(f.c.begin(), f.c.begin() + N + 1));
    // rank of the function set = column rank of the transposed layout
    RMatrix t(static_cast<size_t>(N + 1), RVector(fs.size()));
    for (size_t i = 0; i < fs.size(); ++i)
        for (int k = 0; k <= N; ++k) t[k][i] = a[i][k];
    return rank(t, fs.size());
}

int square_order(const UniODE& ode, int N, bool exterior) {
    Rational t0 = ordinary_base_point(ode);
    int M = N + 10;
    auto basis = local_basis(ode, t0, M + 1);
    std::vector<UniSeries> fs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = exterior ? i + 1 : i; j < basis.size(); ++j) {
            if (exterior) {
                UniSeries di = derivative(basis[i]), dj = derivative(basis[j]);
                UniSeries w = basis[i].truncated(M) * dj + Rational(-1) * (di * basis[j].truncated(M));
                fs.push_back(w);
            } else {
                fs.push_back(basis[i].truncated(M) * basis[j].truncated(M));
            }
        }
    if (fs.empty()) return 0;
    size_t a = series_rank(fs, N), b = series_rank(fs, M);
    if (a != b)
        fail("Unstable", "order changes from " + std::to_string(a) + " to " + std::to_string(b) + " between N = " +
                             std::to_string(N) + " and N + 10");
    return static_cast<int>(a);
}

}  // namespace

int exterior_square_order(const UniODE& ode, int N) { return square_order(ode, N, true); }
int symmetric_square_order(const UniODE& ode, int N) { return square_order(ode, N, false); }

UniSeries apply(const UniODE& ode, const UniSeries& s) {
    int r = ode.order();
    if (s.order < r) fail("InsufficientOrder", "series shorter than the operator order");
    UniSeries out(s.order - r);
    for (int n = 0; n <= out.order; ++n) {
        Rational acc = 0;
        for (int j = 0; j <= r; ++j)
            for (int i = 0; i <= ode.p[j].degree(); ++i) {
                long m = n - i + j;
                if (m < 0 || ode.p[j].c[i] == 0 || s.c[m] == 0) continue;
                acc += ode.p[j].c[i] * falling_at(m, j) * s.c[m];
            }
        out.c[n] = acc;
    }
    return out;
}

bool annihilates_series(const UniODE& ode, const UniSeries& s) {
    int need = ode.order() + ode.degree() + 10;
    if (s.order < need)
        fail("InsufficientOrder", "need order " + std::to_string(need) + ", have " + std::to_string(s.order));
    UniSeries r = apply(ode, s);
    return std::all_of(r.c.begin(), r.c.end(), [](const Rational& c) { return c == 0; });
}

std::string ode_to_text(const UniODE& ode, const std::string& var) {
    std::string out;
    for (int j = 0; j <= ode.order(); ++j) out += std::to_string(j) + " : " + ode.coefficient(j, var).str() + "\n";
    return out;
}

UniODE ode_from_text(const std::string& text, const std::string& var) {
    std::istringstream in(text);
    std::string line;
    std::map<int, UPoly> cs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("SyntaxError", "line " + std::to_string(lineno) + ": missing ':'");
        std::istringstream js(line.substr(0, colon));
        int j = -1;
        if (!(js >> j) || j < 0) fail("SyntaxError", "line " + std::to_string(lineno) + ": bad order index");
        if (cs.count(j)) fail("ValidationError", "order " + std::to_string(j) + " given twice");
        cs[j] = to_upoly(parse_poly(line.substr(colon + 1), {var}), 0);
    }
    if (cs.empty()) fail("ValidationError", "empty ODE file");
    UniODE ode;
    ode.p.assign(static_cast<size_t>(cs.rbegin()->first + 1), UPoly());
    for (auto& [j, q] : cs) ode.p[j] = q;
    if (ode.p.back().is_zero()) fail("ValidationError", "zero head coefficient");
    return ode;
}

}  // namespace hornsing
