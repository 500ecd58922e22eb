#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hornsing/poly_algo.hpp"
#include "hornsing/series.hpp"
#include "hornsing/theta.hpp"

namespace hornsing {

// sum_j p_j(t) D^j, D = d/dt
struct UniODE {
    std::vector<UPoly> p;

    int order() const { return static_cast<int>(p.size()) - 1; }
    int degree() const;
    MPoly coefficient(int j, const std::string& var = "t") const;
    // divide by the gcd of the p_j, clear content, lowest head coefficient positive
    UniODE normalized() const;
    static UniODE parse(const std::vector<std::string>& coeffs, const std::string& var = "t");
    // coefficients p_j(t + t0), for series in t - t0
    UniODE shifted(const Rational& t0) const;
    bool operator==(const UniODE& o) const { return p == o.p; }
};

// sum_i x^i P_i(θ)
struct ThetaUni {
    std::vector<UPoly> P;
    int order() const;
};

ThetaUni to_theta(const UniODE& ode);
UniODE to_dform(const ThetaUni& op);
ThetaOp to_theta_op(const ThetaUni& op);
ThetaUni from_theta_op(const ThetaOp& op);

struct GuessReport {
    UniODE ode;
    ThetaUni theta;
    int order = 0, degree = 0;
    int checked_margin = 0;
};

// order is the θ-order, degree the x-degree of the θ-form
std::optional<GuessReport> guess_ode(const UniSeries& s, int max_order, int max_degree);
// nullspace dimension of the θ-form ansatz with exactly these bounds
size_t guess_dimension(const UniSeries& s, int order, int degree);

struct SingularReport {
    int zero_multiplicity = 0;     // power of t in the head
    Rational unit;
    std::vector<UFactor> factors;  // nonmonomial part
};
SingularReport singular_points(const UniODE& ode);

// power series in (t - t0); initial segments are unit vectors
std::vector<UniSeries> local_basis(const UniODE& ode, const Rational& t0, int N);
Rational ordinary_base_point(const UniODE& ode);

int exterior_square_order(const UniODE& ode, int N);
int symmetric_square_order(const UniODE& ode, int N);

// L(s) through order s.order - r
UniSeries apply(const UniODE& ode, const UniSeries& s);
bool annihilates_series(const UniODE& ode, const UniSeries& s);

std::string ode_to_text(const UniODE& ode, const std::string& var = "t");
UniODE ode_from_text(const std::string& text, const std::string& var = "t");

}  // namespace hornsing
