#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hornsing/curve.hpp"

namespace hornsing {

struct NickelianIndex {
    int n = 1, j = 1, l = 1;
    int sign = 1;
};

// cos(2 pi j / n) when rational
std::optional<Rational> rational_cos(int j, int n);

// (r+k)(kr+1) - k(rU +- V)^2 in (k, r); symbolic mode adds U, V
MPoly nickelian_curve(const NickelianIndex& idx);
MPoly nickelian_curve_symbolic(int sign);

struct FloatPoly {
    std::vector<std::string> vars;
    std::vector<std::pair<Monomial, double>> terms;
    std::string str() const;
};
FloatPoly nickelian_curve_float(const NickelianIndex& idx);

// 1 + s^2 - s(U + V)
MPoly nickelian_isotropic(const NickelianIndex& idx);
// (j, l) pairs of the isotropic indexing, exclusions applied
std::vector<std::pair<int, int>> isotropic_indices(int n);
// isotropic curve with k = s^2 folded in, against nickelian_curve at r = 1
bool isotropic_consistent(const NickelianIndex& idx);

enum class Coords { kr, wr };
Coords parse_coords(const std::string& s);
std::string coords_name(Coords c);

struct ChiFactor {
    MPoly f;
    int mult = 1;
};
struct ChiCatalog {
    int n = 3;
    Coords coords = Coords::kr;
    std::vector<ChiFactor> factors;
    MPoly product() const;
};
ChiCatalog chi_catalog(int n, Coords coords);
// the displayed polynomial, parsed as one expression
MPoly chi_displayed(int n, Coords coords);
MPoly chi_gcd(Coords coords);

// stated: w = s/(2(1+s^2)); reciprocal: w = (1+s^2)/(2s)
enum class WMap { stated, reciprocal };

struct KrWrMatch {
    std::vector<size_t> kr, wr;
    Rational ratio;  // wr numerator / product of kr numerators, 0 when only the zero sets agree
};
struct KrWrReport {
    int n = 3;
    std::optional<Rational> r_value;
    std::vector<MPoly> kr_pulled, wr_pulled;
    std::vector<KrWrMatch> matched;
    std::vector<size_t> kr_unmatched, wr_unmatched;
    std::vector<size_t> wr_monomial;  // numerators that are powers of s
    WMap wmap = WMap::stated;
    bool matches(size_t kr_i, size_t wr_j) const;
};
// k = s^2 and w per WMap; optionally specialise r first
KrWrReport kr_wr_report(int n, std::optional<Rational> r_value = std::nullopt, WMap wmap = WMap::stated);

struct AuditEntry {
    Coords coords;
    MPoly factor;
    std::string status;  // "genus 0", "genus 1", "genus >= 2", "linear", "univariate"
    std::optional<GenusCertificate> cert;
    bool param_verified = false;
};
std::vector<AuditEntry> elliptic_audit();

// product of the two sign branches of the squared (s1, s2) form, with
// s1^2 = kr, s2^2 = k/r, times r^2, against the two branches of the (k, r) form
bool squaring_consistent(Rational& ratio);

// factor(k, 1) for each kr factor
std::vector<MPoly> isotropic_reduction(int n);

}  // namespace hornsing
