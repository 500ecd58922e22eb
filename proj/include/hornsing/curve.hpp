#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hornsing/poly_algo.hpp"
#include "hornsing/ratfun.hpp"

namespace hornsing {

struct Curve {
    MPoly F;  // squarefree, primitive

    Curve() = default;
    explicit Curve(const MPoly& f);
    static Curve parse(const std::string& text, const std::vector<std::string>& vars);
    const std::vector<std::string>& vars() const { return F.vars(); }
};

struct Param {
    RatFun xp, yp;
    static Param parse(const std::string& x, const std::string& y, const std::string& var = "u");
};

bool verify_parametrization(const Curve& c, const Param& p);

// images for the curve variables, plus an optional rational prefactor
struct CurveMap {
    std::vector<RatFun> images;
    std::optional<RatFun> prefactor;
};

struct MatchReport {
    enum class Kind { Equal, Proportional, Distinct } kind = Kind::Distinct;
    Rational ratio;        // second numerator / first numerator when proportional
    MPoly gcd;             // gcd of the two numerators when distinct
    bool same_zero_set = false;
    MPoly lhs, rhs;        // pulled-back numerators
};

MPoly pull_back(const MPoly& f, const CurveMap& map);
MatchReport substitute_compare(const MPoly& c1, const CurveMap& map1, const MPoly& c2, const CurveMap& map2);
std::string to_string(const MatchReport& r);

struct SingularLocus {
    std::vector<std::pair<Rational, Rational>> points;
    std::vector<MPoly> residual;  // eliminant factors in x without rational roots
    std::vector<std::pair<Rational, UPoly>> partial;  // rational x, irrational y part
};
SingularLocus affine_singular_points(const Curve& c);

struct GenusCertificate {
    std::string fiber_var, base_var;
    UPoly D;         // discriminant in the base variable
    UPoly odd_part;  // product of the odd-multiplicity factors
    bool D_squarefree = false;
    int genus = 0;   // 2 stands for "at least 2"
};
GenusCertificate genus_quadratic_fiber(const Curve& c, const std::string& var);

// std::nullopt marks the degenerate (genus-zero) cases
std::optional<Rational> nickelian_j(const Rational& u2, const Rational& v2);

}  // namespace hornsing
