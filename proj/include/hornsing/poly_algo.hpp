#pragma once
#include <string>
#include <vector>

#include "hornsing/mpoly.hpp"

namespace hornsing {

// Positive rational c with p/c integral with coprime coefficients; 0 for p = 0.
Rational content(const MPoly& p);
// p/content, sign fixed so the graded-lex leading coefficient is positive.
MPoly primitive(const MPoly& p);

bool try_divide(const MPoly& a, const MPoly& b, MPoly& q);
MPoly divide_exact(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);

MPoly poly_gcd(const MPoly& a, const MPoly& b);
MPoly resultant(const MPoly& a, const MPoly& b, const std::string& var);
// Res(a, c) = c^deg(a) convention when one side is constant in var.
MPoly resultant_general(const MPoly& a, const MPoly& b, size_t var);
MPoly discriminant(const MPoly& a, const std::string& var);
MPoly squarefree_primitive(const MPoly& a);

// Determinant of a square matrix of polynomials, fraction-free.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars);

// x^a y^b... factor of smallest exponents, and the quotient
Monomial monomial_content(const MPoly& p);

struct SquarefreePart {
    UPoly f;
    int mult;
};
// Yun's algorithm; factors monic
std::vector<SquarefreePart> squarefree_decomposition(const UPoly& p);

struct UFactor {
    UPoly f;           // primitive integer coefficients, positive leading coefficient
    int mult = 1;
    bool certified = true;  // false: not split further and not proven irreducible
};

struct UFactorization {
    Rational unit;
    std::vector<UFactor> factors;
};

// Rational roots plus Kronecker search for factors of degree ≤ 3 in
// polynomials of degree ≤ 6; larger residues are flagged uncertified.
UFactorization factor_univariate(const UPoly& p);
// distinct, ascending
std::vector<Rational> rational_roots(const UPoly& p);
UPoly primitive(const UPoly& p);

}  // namespace hornsing
