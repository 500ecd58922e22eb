#pragma once
#include <string>
#include <utility>
#include <vector>

#include "hornsing/curve.hpp"
#include "hornsing/expr.hpp"
#include "hornsing/ode.hpp"
#include "hornsing/theta.hpp"

namespace hornsing {

struct SpecEntry {
    std::string name, tag;
    std::string ratio_text, formula_text;  // spec-file texts, either may be empty
};

enum class OpKind { System, Theta, DForm };

struct OperatorEntry {
    std::string name, tag;
    OpKind kind = OpKind::System;
    // System: one operator text per member; Theta: one univariate operator text; DForm: ODE text
    std::vector<std::string> texts;
};

struct CurveEntry {
    std::string name, tag;
    std::vector<std::string> vars;
    std::string text;
    std::vector<std::pair<std::string, std::string>> params;  // in u
};

const std::vector<SpecEntry>& spec_entries();
const std::vector<OperatorEntry>& operator_entries();
const std::vector<CurveEntry>& curve_entries();

const SpecEntry& spec_entry(const std::string& name);
const OperatorEntry& operator_entry(const std::string& name);
const CurveEntry& curve_entry(const std::string& name);

// ratio form when present unless formula is asked for
SpecFile registry_spec(const std::string& name, bool formula = false);
SpecFile kdf_general(int M, const Rational& a, const Rational& b, const Rational& bp, const Rational& g,
                     const Rational& scale = 1, bool formula = true);

PdeSystem registry_system(const std::string& name);
UniODE registry_ode(const std::string& name);
Curve registry_curve(const std::string& name);
std::vector<Param> registry_params(const std::string& name);

// head of the order-six operator for H0(x, c x): coefficient of D^6
MPoly w6_head(const Rational& c);
// both sign branches multiplied, with U^2 = u2, V^2 = v2, in (k, r)
MPoly genus1_curve(const Rational& u2, const Rational& v2);

std::string curve_to_text(const CurveEntry& e);
CurveEntry curve_from_text(const std::string& text);
// fixture file contents, keyed by relative path under data/
std::vector<std::pair<std::string, std::string>> fixture_files();

}  // namespace hornsing
