#pragma once
#include "hornsing/mpoly.hpp"

namespace hornsing {

class RatFun {
public:
    RatFun() = default;
    RatFun(const MPoly& num);
    RatFun(const MPoly& num, const MPoly& den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator-() const;
    RatFun inverse() const;
    RatFun pow(int e) const;
    Rational evaluate(const std::vector<Rational>& point) const;  // RatioPole on den = 0
    RatFun substitute(size_t i, const Rational& v) const;
    RatFun compose(const std::vector<RatFun>& images) const;
    RatFun with_vars(const std::vector<std::string>& vars) const;

    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }
    std::string str() const;

private:
    void normalize();
    MPoly num_;
    MPoly den_{std::vector<std::string>{}, Rational(1)};
};

// alpha2(n,m)*alpha1(n,m+1) == alpha1(n,m)*alpha2(n+1,m)
bool ratios_compatible(const RatFun& alpha1, const RatFun& alpha2, const std::string& n,
                       const std::string& m);

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator*(const RatFun& a, const RatFun& b);
RatFun operator/(const RatFun& a, const RatFun& b);

// F(images) for a polynomial F, as a reduced rational function
RatFun compose_poly(const MPoly& f, const std::vector<RatFun>& images);

}  // namespace hornsing
