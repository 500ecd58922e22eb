#include "hornsing/linalg.hpp"

#include <utility>

#include "hornsing/error.hpp"

namespace hornsing {

namespace {

ZMatrix integer_rows(const RMatrix& a, size_t ncols) {
    ZMatrix z;
    z.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != ncols) fail("ShapeError", "ragged matrix");
        Integer l = denominator_lcm(row);
        std::vector<Integer> zr(ncols);
        Integer g = 0;
        for (size_t j = 0; j < ncols; ++j) {
            Rational t = row[j] * l;
            zr[j] = t.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zr[j].get_mpz_t());
        }
        if (g == 0) continue;
        if (g != 1)
            for (auto& v : zr) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        z.push_back(std::move(zr));
    }
    return z;
}

void update_row(std::vector<Integer>& ri, const std::vector<Integer>& rp, size_t c,
                const Integer& prev, Integer& tmp) {
    const Integer& piv = rp[c];
    const Integer f = ri[c];
    if (f == 0) {
        if (prev != 1)
            for (size_t j = c + 1; j < ri.size(); ++j) {
                ri[j] *= piv;
                mpz_divexact(ri[j].get_mpz_t(), ri[j].get_mpz_t(), prev.get_mpz_t());
            }
        else
            for (size_t j = c + 1; j < ri.size(); ++j) ri[j] *= piv;
        return;
    }
    for (size_t j = c + 1; j < ri.size(); ++j) {
        tmp = ri[j] * piv;
        mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), rp[j].get_mpz_t());
        if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        std::swap(ri[j], tmp);
    }
    ri[c] = 0;
}

Echelon eliminate(const RMatrix& a, size_t ncols, bool parallel) {
    Echelon e;
    e.ncols = ncols;
    e.rows = integer_rows(a, ncols);
    auto& m = e.rows;
    const size_t nr = m.size();
    Integer prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nr; ++c) {
        size_t p = r;
        while (p < nr && m[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(m[r], m[p]);
        const auto& rp = m[r];
        const long lo = static_cast<long>(r + 1), hi = static_cast<long>(nr);
        if (parallel) {
#pragma omp parallel
            {
                Integer tmp;
#pragma omp for schedule(dynamic, 4)
                for (long i = lo; i < hi; ++i) update_row(m[i], rp, c, prev, tmp);
            }
        } else {
            Integer tmp;
            for (long i = lo; i < hi; ++i) update_row(m[i], rp, c, prev, tmp);
        }
        prev = rp[c];
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return e;
}

}  // namespace

Echelon echelon_serial(const RMatrix& a, size_t ncols) { return eliminate(a, ncols, false); }
Echelon echelon_parallel(const RMatrix& a, size_t ncols) { return eliminate(a, ncols, true); }

RVector primitive_vector(const RVector& v) {
    Integer l = denominator_lcm(v);
    RVector r(v.size());
    Integer g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        r[i] = v[i] * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_num_mpz_t());
    }
    if (g == 0) return r;
    for (auto& x : r) x /= g;
    return r;
}

std::vector<RVector> nullspace_of(const Echelon& e) {
    const size_t n = e.ncols, rk = e.rank();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<RVector> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RVector x(n);
        x[f] = 1;
        for (size_t k = rk; k-- > 0;) {
            size_t pc = e.pivots[k];
            if (pc > f) continue;
            Rational s = 0;
            const auto& row = e.rows[k];
            for (size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0 && row[j] != 0) s += Rational(row[j]) * x[j];
            x[pc] = -s / Rational(row[pc]);
        }
        basis.push_back(primitive_vector(x));
    }
    return basis;
}

std::vector<RVector> nullspace(const RMatrix& a, size_t ncols) {
    return nullspace_of(echelon_parallel(a, ncols));
}

std::vector<RVector> nullspace_serial(const RMatrix& a, size_t ncols) {
    return nullspace_of(echelon_serial(a, ncols));
}

size_t rank(const RMatrix& a, size_t ncols) { return echelon_parallel(a, ncols).rank(); }

RVector mat_vec(const RMatrix& a, const RVector& v) {
    RVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

}  // namespace hornsing
