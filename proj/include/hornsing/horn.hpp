#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "hornsing/series.hpp"

namespace hornsing {

// limits of c_{n,m}/c_{n+1,m} and c_{n,m}/c_{n,m+1}, as functions of t
struct HornMaps {
    RatFun X, Y;
};

struct HornResult {
    MPoly main_curve;                              // in (x, y)
    std::vector<std::pair<int, int>> monomial_components;
    std::optional<Rational> x_at_infinity, y_at_zero;
};

// (n, m) = (t, 1); with swapped = true, (n, m) = (1, t)
HornMaps horn_limit_maps(const HyperSpec& s, bool swapped = false);
HornResult eliminate(const HornMaps& h);
HornResult horn_curve(const HyperSpec& s);

}  // namespace hornsing
