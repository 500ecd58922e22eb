#include "hornsing/theta.hpp"

#include <algorithm>
#include <sstream>

#include "hornsing/error.hpp"
#include "hornsing/linalg.hpp"

namespace hornsing {

const std::vector<std::string>& ThetaOp::theta_vars() {
    static const std::vector<std::string> v{"tx", "ty"};
    return v;
}

ThetaOp ThetaOp::make(std::vector<ThetaTerm> terms) {
    std::map<std::pair<int, int>, MPoly> acc;
    for (auto& t : terms) {
        if (t.a < 0 || t.b < 0) fail("ValidationError", "negative shift in theta operator");
        MPoly q = t.Q.with_vars(theta_vars());
        auto it = acc.find({t.a, t.b});
        if (it == acc.end()) acc.emplace(std::make_pair(t.a, t.b), q);
        else it->second += q;
    }
    ThetaOp op;
    for (auto& [ab, q] : acc)
        if (!q.is_zero()) op.terms.push_back({ab.first, ab.second, q});
    return op;
}

ThetaOp ThetaOp::parse(const std::vector<std::pair<std::pair<int, int>, std::string>>& terms) {
    std::vector<ThetaTerm> ts;
    for (const auto& [ab, text] : terms) ts.push_back({ab.first, ab.second, parse_poly(text, theta_vars())});
    return make(ts);
}

int ThetaOp::max_shift() const {
    int s = 0;
    for (const auto& t : terms) s = std::max(s, t.a + t.b);
    return s;
}

bool ThetaOp::involves_y() const {
    for (const auto& t : terms)
        if (t.b > 0 || t.Q.involves(1)) return true;
    return false;
}

bool ThetaOp::operator==(const ThetaOp& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].a != o.terms[i].a || terms[i].b != o.terms[i].b || terms[i].Q != o.terms[i].Q) return false;
    return true;
}

BiSeries apply(const ThetaOp& op, const BiSeries& s) {
    int order = s.order() - op.max_shift();
    if (order < 0) fail("InsufficientOrder", "series shorter than the operator shift");
    BiSeries r(order);
    for (const auto& t : op.terms) {
        for (int d = 0; d + t.a + t.b <= order; ++d)
            for (int m = 0; m <= d; ++m) {
                int n = d - m;
                const Rational& c = s.at(n, m);
                if (c == 0) continue;
                r.at(n + t.a, m + t.b) += t.Q.evaluate({Rational(n), Rational(m)}) * c;
            }
    }
    return r;
}

bool annihilates(const PdeSystem& sys, const BiSeries& s) {
    for (const auto& op : sys) {
        if (s.order() < 10 + op.max_shift())
            fail("InsufficientOrder", "need order " + std::to_string(10 + op.max_shift()) + ", have " +
                                          std::to_string(s.order()));
    }
    for (const auto& op : sys) {
        BiSeries r = apply(op, s);
        for (int d = 0; d <= r.order(); ++d)
            for (int m = 0; m <= d; ++m)
                if (r.at(d - m, m) != 0) return false;
    }
    return true;
}

std::vector<RecTerm> to_recurrence(const ThetaOp& op) {
    std::vector<std::string> nm{"n", "m"};
    std::vector<RecTerm> out;
    for (const auto& t : op.terms) {
        MPoly n = MPoly::variable(nm, "n"), m = MPoly::variable(nm, "m");
        MPoly R = t.Q.with_vars(ThetaOp::theta_vars())
                      .compose({n - MPoly(nm, Rational(t.a)), m - MPoly(nm, Rational(t.b))});
        out.push_back({t.a, t.b, R.with_vars(nm)});
    }
    return out;
}

Rational recurrence_residual(const std::vector<RecTerm>& rec, const BiSeries& s, int n, int m) {
    Rational r = 0;
    for (const auto& t : rec) r += t.R.evaluate({Rational(n), Rational(m)}) * s.get(n - t.da, m - t.db);
    return r;
}

// ------------------------------------------------------------ log series

namespace {

bool log_before(const LogMonomial& a, const LogMonomial& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
}

// derivatives d^k/dtx^k d^l/dty^l Q for k,l <= L
struct TermData {
    int a, b;
    std::vector<std::vector<MPoly>> dq;
};

std::vector<TermData> term_data(const ThetaOp& op, int L) {
    std::vector<TermData> out;
    for (const auto& t : op.terms) {
        TermData td{t.a, t.b, {}};
        MPoly qx = t.Q;
        for (int k = 0; k <= L; ++k) {
            std::vector<MPoly> row;
            MPoly q = qx;
            for (int l = 0; l <= L; ++l) {
                row.push_back(q);
                q = q.derivative(1);
            }
            td.dq.push_back(row);
            qx = qx.derivative(0);
        }
        out.push_back(td);
    }
    return out;
}

// coefficient sending H_{(i,j)} at (n,m) to log monomial (i-k, j-l) at (n+a, m+b)
Rational log_coeff(const TermData& td, int i, int j, int k, int l, int n, int m) {
    const MPoly& q = td.dq[k][l];
    if (q.is_zero()) return 0;
    return Rational(binomial(i, k) * binomial(j, l)) * q.evaluate({Rational(n), Rational(m)});
}

}  // namespace

LogSeries apply(const ThetaOp& op, const LogSeries& s) {
    int N = -1, L = 0;
    for (const auto& [lm, h] : s) {
        N = std::max(N, h.order());
        L = std::max({L, lm.first, lm.second});
    }
    int order = N - op.max_shift();
    if (order < 0) fail("InsufficientOrder", "log series shorter than the operator shift");
    auto tds = term_data(op, L);
    LogSeries r;
    for (const auto& [lm, h] : s) {
        auto [i, j] = lm;
        for (const auto& td : tds)
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (td.dq[k][l].is_zero()) continue;
                    auto it = r.find({i - k, j - l});
                    if (it == r.end()) it = r.emplace(LogMonomial{i - k, j - l}, BiSeries(order)).first;
                    for (int d = 0; d + td.a + td.b <= order; ++d)
                        for (int m = 0; m <= d; ++m) {
                            const Rational& c = h.at(d - m, m);
                            if (c == 0) continue;
                            it->second.at(d - m + td.a, m + td.b) += log_coeff(td, i, j, k, l, d - m, m) * c;
                        }
                }
    }
    return r;
}

LogMonomial leading_log(const LogSeries& s) {
    LogMonomial best{-1, -1};
    for (const auto& [lm, h] : s) {
        bool nonzero = false;
        for (int d = 0; d <= h.order() && !nonzero; ++d)
            for (int m = 0; m <= d; ++m)
                if (h.at(d - m, m) != 0) {
                    nonzero = true;
                    break;
                }
        if (nonzero && (best.first < 0 || log_before(lm, best))) best = lm;
    }
    return best;
}

LogBasis log_basis(const PdeSystem& sys, int N, int max_log) {
    if (max_log < 0) fail("ValidationError", "max_log must be nonnegative");
    if (sys.empty()) fail("ValidationError", "empty system");
    bool two = std::any_of(sys.begin(), sys.end(), [](const ThetaOp& op) { return op.involves_y(); });
    std::vector<LogMonomial> logs;
    for (int i = 0; i <= max_log; ++i)
        for (int j = 0; j <= (two ? max_log : 0); ++j) logs.push_back({i, j});
    std::sort(logs.begin(), logs.end(), log_before);
    std::map<LogMonomial, size_t> log_index;
    for (size_t k = 0; k < logs.size(); ++k) log_index[logs[k]] = k;
    const size_t nl = logs.size();

    std::vector<std::vector<TermData>> tds;
    for (const auto& op : sys) tds.push_back(term_data(op, max_log));

    // vals[d][(m * nl) + log] = vector over the current parameters
    std::vector<std::vector<RVector>> vals;
    size_t nparams = 0;
    LogBasis out;

    for (int d = 0; d <= N; ++d) {
        int cells = two ? d + 1 : 1;
        size_t nu = static_cast<size_t>(cells) * nl;
        RMatrix rows;
        for (size_t o = 0; o < sys.size(); ++o) {
            for (int mo = 0; mo < cells; ++mo) {
                int no = d - mo;
                for (size_t lo = 0; lo < nl; ++lo) {
                    RVector row(nu + nparams);
                    bool any = false;
                    auto [io, jo] = logs[lo];
                    for (const auto& td : tds[o]) {
                        int n = no - td.a, m = mo - td.b;
                        if (n < 0 || m < 0) continue;
                        if (!two && m != 0) continue;
                        for (int k = 0; io + k <= max_log; ++k)
                            for (int l = 0; jo + l <= (two ? max_log : 0); ++l) {
                                int i = io + k, j = jo + l;
                                Rational c = log_coeff(td, i, j, k, l, n, m);
                                if (c == 0) continue;
                                size_t li = log_index.at({i, j});
                                if (td.a + td.b == 0) {
                                    row[static_cast<size_t>(m) * nl + li] += c;
                                } else {
                                    const RVector& v = vals[static_cast<size_t>(n + m)][static_cast<size_t>(two ? m : 0) * nl + li];
                                    for (size_t p = 0; p < nparams; ++p)
                                        if (v[p] != 0) row[nu + p] += c * v[p];
                                }
                                any = true;
                            }
                    }
                    if (any && std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
                        rows.push_back(std::move(row));
                }
            }
        }
        std::vector<RVector> ns;
        if (rows.empty()) {
            for (size_t k = 0; k < nu + nparams; ++k) {
                RVector e(nu + nparams);
                e[k] = 1;
                ns.push_back(e);
            }
        } else {
            ns = nullspace(rows, nu + nparams);
        }
        size_t q = ns.size();
        for (auto& level : vals)
            for (auto& v : level) {
                RVector w(q);
                for (size_t k = 0; k < q; ++k)
                    for (size_t p = 0; p < nparams; ++p)
                        if (v[p] != 0) w[k] += v[p] * ns[k][nu + p];
                v = std::move(w);
            }
        std::vector<RVector> fresh(nu, RVector(q));
        for (size_t k = 0; k < q; ++k)
            for (size_t u = 0; u < nu; ++u) fresh[u][k] = ns[k][u];
        vals.push_back(std::move(fresh));
        nparams = q;
        out.history.push_back(static_cast<int>(q));
    }

    if (N < 2 || out.history[N] != out.history[N - 1] || out.history[N] != out.history[N - 2])
        fail("InsufficientOrder", "log-basis dimension not stable over the last 3 orders");
    out.dimension = static_cast<int>(nparams);

    // coordinates in column order: degree 0 first (logs in preference order), then higher degrees
    std::vector<std::pair<int, size_t>> cols;
    for (int d = 0; d <= N; ++d)
        for (size_t u = 0; u < vals[d].size(); ++u) cols.push_back({d, u});
    RMatrix m(nparams, RVector(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        const RVector& v = vals[cols[c].first][cols[c].second];
        for (size_t k = 0; k < nparams; ++k) m[k][c] = v[k];
    }
    // reduced row echelon form
    size_t r = 0;
    for (size_t c = 0; c < cols.size() && r < nparams; ++c) {
        size_t piv = r;
        while (piv < nparams && m[piv][c] == 0) ++piv;
        if (piv == nparams) continue;
        std::swap(m[r], m[piv]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t k = 0; k < nparams; ++k) {
            if (k == r || m[k][c] == 0) continue;
            Rational f = m[k][c];
            for (size_t j = c; j < cols.size(); ++j)
                if (m[r][j] != 0) m[k][j] -= f * m[r][j];
        }
        ++r;
    }
    for (size_t k = 0; k < nparams; ++k) {
        LogSeries ls;
        for (const auto& lm : logs) ls.emplace(lm, BiSeries(N));
        for (size_t c = 0; c < cols.size(); ++c) {
            if (m[k][c] == 0) continue;
            int d = cols[c].first;
            size_t u = cols[c].second;
            int mm = two ? static_cast<int>(u / nl) : 0;
            ls.at(logs[u % nl]).at(d - mm, mm) = m[k][c];
        }
        for (auto it = ls.begin(); it != ls.end();) {
            bool zero = true;
            for (int d = 0; d <= N && zero; ++d)
                for (int j = 0; j <= d; ++j)
                    if (it->second.at(d - j, j) != 0) {
                        zero = false;
                        break;
                    }
            it = zero ? ls.erase(it) : std::next(it);
        }
        out.basis.push_back(std::move(ls));
    }
    return out;
}

// ------------------------------------------------------------ operator files

std::string op_to_text(const ThetaOp& op) {
    std::string out = "op-vars: x y\n";
    for (const auto& t : op.terms)
        out += std::to_string(t.a) + " " + std::to_string(t.b) + " : " + t.Q.str() + "\n";
    return out;
}

ThetaOp op_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header = false;
    std::vector<ThetaTerm> terms;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!header) {
            std::istringstream hs(line);
            std::string tag, x, y;
            hs >> tag >> x >> y;
            if (tag != "op-vars:" || x != "x" || y != "y")
                fail("ValidationError", "operator header: expected 'op-vars: x y'");
            header = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("SyntaxError", "line " + std::to_string(lineno) + ": missing ':'");
        std::istringstream ab(line.substr(0, colon));
        int a = -1, b = -1;
        if (!(ab >> a >> b) || a < 0 || b < 0)
            fail("SyntaxError", "line " + std::to_string(lineno) + ": expected two nonnegative shifts");
        terms.push_back({a, b, parse_poly(line.substr(colon + 1), ThetaOp::theta_vars())});
    }
    if (!header) fail("ValidationError", "operator header missing");
    return ThetaOp::make(terms);
}

}  // namespace hornsing
