#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hornsing/series.hpp"

namespace hornsing {

// x^a y^b Q(tx, ty) with tx = θx, ty = θy
struct ThetaTerm {
    int a = 0, b = 0;
    MPoly Q;
};

struct ThetaOp {
    std::vector<ThetaTerm> terms;

    static const std::vector<std::string>& theta_vars();
    // combines equal shifts, drops zero terms
    static ThetaOp make(std::vector<ThetaTerm> terms);
    static ThetaOp parse(const std::vector<std::pair<std::pair<int, int>, std::string>>& terms);
    int max_shift() const;
    bool involves_y() const;
    bool operator==(const ThetaOp& o) const;
};

using PdeSystem = std::vector<ThetaOp>;

BiSeries apply(const ThetaOp& op, const BiSeries& s);
bool annihilates(const PdeSystem& sys, const BiSeries& s);

struct RecTerm {
    int da, db;
    MPoly R;  // in (n, m); relation sum R(n,m) c_{n-da,m-db} = 0
};
std::vector<RecTerm> to_recurrence(const ThetaOp& op);
// value of the relation at (n, m)
Rational recurrence_residual(const std::vector<RecTerm>& rec, const BiSeries& s, int n, int m);

using LogMonomial = std::pair<int, int>;  // powers of ln x, ln y
using LogSeries = std::map<LogMonomial, BiSeries>;

struct LogBasis {
    int dimension = 0;
    std::vector<LogSeries> basis;
    std::vector<int> history;  // dimension after each degree 0..N
};

// log powers bounded by max_log in each variable
LogBasis log_basis(const PdeSystem& sys, int N, int max_log);
LogMonomial leading_log(const LogSeries& s);

// apply to a log series; the result is again a log series
LogSeries apply(const ThetaOp& op, const LogSeries& s);

std::string op_to_text(const ThetaOp& op);
ThetaOp op_from_text(const std::string& text);

}  // namespace hornsing
