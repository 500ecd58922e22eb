#include "hornsing/rational.hpp"

#include "hornsing/error.hpp"

namespace hornsing {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail("SyntaxError", "empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) fail("SyntaxError", "not a rational: " + text);
    if (q.get_den() == 0) fail("DivisionByZero", text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(long n) {
    if (n < 0) fail("EvaluationError", "factorial of negative " + std::to_string(n));
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // negative upper index: (-1)^k C(k-n-1, k)
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return (k % 2) ? Integer(-r) : r;
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) fail("EvaluationError", "pochhammer with negative length");
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= a + i;
    return r;
}

Rational rpow(const Rational& a, long e) {
    if (e < 0) {
        if (a == 0) fail("DivisionByZero", "0 to a negative power");
        return rpow(1 / a, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Integer denominator_lcm(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

Integer numerator_gcd(const std::vector<Rational>& v) {
    Integer g = 0;
    for (const auto& q : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    return g;
}

}  // namespace hornsing
