#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace hornsing {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(long n);
Integer binomial(long n, long k);
Rational pochhammer(const Rational& a, long n);
Rational rpow(const Rational& a, long e);

// lcm of denominators and gcd of numerators of a coefficient list
Integer denominator_lcm(const std::vector<Rational>& v);
Integer numerator_gcd(const std::vector<Rational>& v);

}  // namespace hornsing
