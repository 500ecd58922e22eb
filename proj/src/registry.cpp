#include "hornsing/registry.hpp"

#include <sstream>

#include "hornsing/error.hpp"

namespace hornsing {

namespace {

std::string ratio_spec(const std::string& name, const std::string& tag, const std::string& a1, const std::string& a2,
                       const std::string& extra = "") {
    return "[spec]\nname = " + name + "\nkind = ratio\ntag = " + tag + "\nvars = n m\n" + extra + "alpha1 = " + a1 +
           "\nalpha2 = " + a2 + "\n";
}

std::string formula_spec(const std::string& name, const std::string& tag, const std::string& f,
                         const std::string& extra = "") {
    return "[spec]\nname = " + name + "\nkind = formula\ntag = " + tag + "\nvars = n m\n" + extra +
           "coefficient = " + f + "\n";
}

std::string op_text(const std::vector<std::pair<std::string, std::string>>& lines) {
    std::string out = "op-vars: x y\n";
    for (const auto& [shift, q] : lines) out += shift + " : " + q + "\n";
    return out;
}

std::string ode_text(const std::vector<std::string>& p) {
    std::string out;
    for (size_t j = 0; j < p.size(); ++j) out += std::to_string(j) + " : " + p[j] + "\n";
    return out;
}

std::string kdf_formula(int M) {
    std::string e = std::to_string(M);
    return "poch(a,n)^" + e + "*poch(b,m)^" + e + "*poch(bp,m+n)/(poch(g,m+n)^" + e + "*fact(n)*fact(m))";
}

std::vector<SpecEntry> make_specs() {
    const std::string h2r = "(3*n+3*m+1)*(3*n+3*m+2)*(3*n+3*m+3)";
    const std::string b16 = "2*(2*n+2*m+1)*(2*n+2*m+2)";
    const std::string kdf_params = "param.a = 1/2\nparam.b = 1/2\nparam.bp = 1/2\nparam.g = 1\n";
    return {
        {"h2", "H2", ratio_spec("h2", "H2", h2r + "/(n+1)^3", h2r + "/(m+1)^3"),
         formula_spec("h2", "H2", "fact(3*n+3*m)/(fact(n)^3*fact(m)^3)")},
        {"bat16", "24", ratio_spec("bat16", "24", b16 + "*(2*n+1)/(n+1)^3", b16 + "*(2*m+1)/(m+1)^3"),
         formula_spec("bat16", "24", "fact(2*n+2*m)*fact(2*n)*fact(2*m)/(fact(n)^4*fact(m)^4)")},
        {"poch", "poch",
         ratio_spec("poch", "poch", "4*(2*n+1)^3*(2*n+2*m+1)/((n+m+1)^3*(n+1))",
                    "4*(2*m+1)^3*(2*n+2*m+1)/((n+m+1)^3*(m+1))"),
         formula_spec("poch", "poch",
                      "poch(1/2,n)^3*poch(1/2,m)^3*poch(1/2,m+n)/(poch(1,n+m)^3*fact(n)*fact(m))",
                      "scale = 64\n")},
        {"kdf_general", "Kampdeftext",
         ratio_spec("kdf_general", "Kampdeftext", "(a+n)^3*(bp+n+m)/((g+n+m)^3*(n+1))",
                    "(b+m)^3*(bp+n+m)/((g+n+m)^3*(m+1))", kdf_params),
         formula_spec("kdf_general", "Kampdeftext", kdf_formula(3), kdf_params)},
        {"bat18", "defBat5def",
         ratio_spec("bat18", "defBat5def", "2*(n+m+1)^3*(2*n+2*m+1)/(n+1)^4", "2*(n+m+1)^3*(2*n+2*m+1)/(m+1)^4"),
         formula_spec("bat18", "defBat5def", "fact(n+m)^2*fact(2*m+2*n)/(fact(n)^4*fact(m)^4)")},
        {"bat19", "defBat6def",
         ratio_spec("bat19", "defBat6def", "(n+m+1)*(2*n+m+1)*(2*n+m+2)*(2*m+n+1)/(n+1)^4",
                    "(n+m+1)*(2*m+n+1)*(2*m+n+2)*(2*n+m+1)/(m+1)^4"),
         formula_spec("bat19", "defBat6def", "fact(n+m)*fact(2*n+m)*fact(2*m+n)/(fact(n)^4*fact(m)^4)")},
        {"asym", "asym", "",
         formula_spec("asym", "asym", "fact(2*n+2*m)/(fact(n)*fact(m))^2*sum(k,0,m,binom(m,k)^2*binom(2*k,k))")},
    };
}

std::vector<OperatorEntry> make_operators() {
    const std::string s3 = "(3*tx+3*ty+1)*(3*tx+3*ty+2)*(3*tx+3*ty+3)";
    const std::string p13 = "(tx+ty+1)*(2*tx+2*ty+1)";
    return {
        {"picard", "picard", OpKind::System,
         {op_text({{"0 0", "tx^3"}, {"1 0", "-" + s3}}), op_text({{"0 0", "ty^3"}, {"0 1", "-" + s3}})}},
        {"pde13", "PDE13", OpKind::System,
         {op_text({{"0 0", "tx^3"}, {"1 0", "-4*(2*tx+1)*" + p13}}),
          op_text({{"0 0", "ty^3"}, {"0 1", "-4*(2*ty+1)*" + p13}})}},
        {"asym_sys", "asym", OpKind::System,
         {op_text({{"0 0", "tx^2"}, {"1 0", "-2*" + p13}}),
          op_text({{"0 0", "ty^4"},
                   {"0 1", "-2*(10*ty^2+10*ty+3)*" + p13},
                   {"0 2", "36*(2*tx+2*ty+3)*(2*tx+2*ty+1)*(tx+ty+2)*(tx+ty+1)"}})}},
        {"batyrev1", "Batyrev1", OpKind::Theta,
         {op_text({{"0 0", "tx^4"},
                   {"1 0", "-3*(7*tx^2+7*tx+2)*(3*tx+1)*(3*tx+2)"},
                   {"2 0", "-72*(3*tx+5)*(3*tx+4)*(3*tx+2)*(3*tx+1)"}})}},
        {"defbatyrev2", "defBatyrev2", OpKind::Theta,
         {op_text({{"0 0", "tx^4"},
                   {"1 0", "-4*(5*tx^2+5*tx+2)*(2*tx+1)^2"},
                   {"2 0", "64*(2*tx+3)*(2*tx+1)*(2*tx+2)^2"}})}},
        {"batyrev5", "Batyrev5", OpKind::Theta,
         {op_text({{"0 0", "tx^4"},
                   {"1 0", "-4*(3*tx^2+3*tx+1)*(2*tx+1)^2"},
                   {"2 0", "-4*(4*tx+5)*(4*tx+6)*(4*tx+2)*(4*tx+3)"}})}},
        {"batyrev6", "Batyrev6", OpKind::Theta,
         {op_text({{"0 0", "529*tx^4"},
                   {"1 0", "-23*(921*tx^4+2046*tx^3+1644*tx^2+621*tx+92)"},
                   {"2 0", "-(380851*tx^4+1328584*tx^3+1772673*tx^2+1033528*tx+221168)"},
                   {"3 0", "-2*(475861*tx^4+1310172*tx^3+1028791*tx^2+208932*tx-27232)"},
                   {"4 0", "-68*(8873*tx^4+14020*tx^3+5139*tx^2-1664*tx-976)"},
                   {"5 0", "6936*(3*tx+4)*(3*tx+2)*(tx+1)^2"}})}},
        {"c4", "calC4", OpKind::DForm,
         {ode_text({"2*t*(t+2)*(t^2+t+1)^4",
                    "2*(t+1)*(15*t^10+82*t^9+228*t^8+411*t^7+531*t^6+513*t^5+333*t^4+99*t^3-12*t^2-12*t-1)",
                    "t*(t+1)^2*(50*t^9+243*t^8+588*t^7+903*t^6+885*t^5+501*t^4+33*t^3-174*t^2-99*t-14)",
                    "2*t^2*(t^2+t+1)*(t+1)^3*(10*t^6+32*t^5+39*t^4+20*t^3-17*t^2-24*t-6)",
                    "t^3*(t-1)*(2*t+1)*(t+2)*(t^2+t+1)^2*(t+1)^4"})}},
        {"c3", "C3", OpKind::DForm,
         {ode_text({"t*(t-2)", "2*(13*t^2-16*t+4)*(t-1)", "12*t*(3*t-2)*(t-1)^2", "8*t^2*(t-1)^3"})}},
        {"l2_appD", "L2", OpKind::DForm, {ode_text({"t", "8*(3*t-2)*(t-1)", "16*t*(t-1)^2"})}},
    };
}

std::vector<CurveEntry> make_curves() {
    const std::vector<std::string> XY{"x", "y"};
    return {
        {"cand", "cand", XY, "3^9*(x+y)^3 - 3^7*(x^2+y^2-7*x*y) + 3^4*(x+y) - 1",
         {{"(1/6+u)^3", "(1/6-u)^3"}, {"((5*u+7)/(6*(1-u)))^3", "((5+7*u)/(6*(u-1)))^3"}}},
        {"s2xy", "S2xy", XY, "2^8*(x-y)^2 - 2^5*(x+y) + 1", {{"(1/8-u)^2", "(1/8+u)^2"}}},
        {"tilde_s2xy", "tildeS2xy", XY, "2^12*x^2*y^2 - 2^7*x*y*(x+y) + (x-y)^2",
         {{"u^2", "(u/(1+8*u))^2"}, {"((u+1)/8)^2", "((u+1)/(8*u))^2"}}},
        {"sing_kamp", "singKamp", XY, "x^2*y^2 - 2*x*y*(x+y) + (x-y)^2", {{"u^2", "(-u/(1-u))^2"}}},
        {"m4_even", "M4", XY, "(x+y)^2 - x^2*y^2", {{"u", "-u/(1-u)"}}},
        {"m4_quartic", "M4", XY, "(x+y-x*y)^3 + 27*x^2*y^2", {{"u^3", "(-u/(1-u))^3"}}},
        {"kamp_m5", "singKamp", XY,
         "(x+y+x*y)^4 - 136*x^2*y^2*(x+y+x*y) - 8*x*y*(x+1+y)*(x^2+y^2) - 8*x^2*y^2*(x+y)*(x*y-1)",
         {{"u^4", "(-u/(1-u))^4"}}},
        {"sing_bat5", "singBat5", XY,
         "2^8*(x-y)^4 - 2^8*(x+y)*(x^2+y^2+30*x*y) + 2^5*(3*x^2+3*y^2-62*x*y) - 2^4*(x+y) + 1",
         {{"(u-1)^4/64", "(u+1)^4/64"}, {"(u+1)^4/64", "(u-1)^4/64"}}},
        {"sing_bat6", "singBat6", XY,
         "27*x^2*y^2*(x+y) - (256*(x^4+y^4) + 304*x*y*(x^2+y^2) + 69*x^2*y^2) + 8*(x+y)*(32*(x^2+y^2) + 339*x*y)"
         " - (96*(x^2+y^2) - 1261*x*y) + 16*(x+y) - 1",
         {{"u^4/((u+1)*(u+2)*(2*u+1)^2)", "1/((u+1)*(u+2)^2*(2*u+1))"}}},
        {"asym_conic1", "asym", XY, "16*x^2 - 8*(4*y+1)*x + (4*y-1)^2", {}},
        {"asym_conic2", "asym", XY, "16*x^2 - 8*(36*y+1)*x + (36*y-1)^2", {}},
        {"factor1", "factor1", {"w", "r"}, "r^2-4*r+4+3*w^2*r^2-4*w^2*r+16*w^4*r",
         {{"(u^2+1)/(2*u)", "-4/(u^2*(u^2+3))"}}},
        {"factor2", "factor2", {"k", "r"}, "(3*k*r+r+4*k^2)*(k^2*r+3*k*r+4)", {}},
        {"genus1", "genus1", {"k", "r", "U", "V"}, "(r+k)*(k*r+1) - k*(r*U+V)^2", {}},
    };
}

template <class E>
const E& find_entry(const std::vector<E>& v, const std::string& name, const char* what) {
    for (const auto& e : v)
        if (e.name == name) return e;
    fail("UnknownEntry", std::string("no ") + what + " named '" + name + "'");
}

}  // namespace

const std::vector<SpecEntry>& spec_entries() {
    static const std::vector<SpecEntry> v = make_specs();
    return v;
}
const std::vector<OperatorEntry>& operator_entries() {
    static const std::vector<OperatorEntry> v = make_operators();
    return v;
}
const std::vector<CurveEntry>& curve_entries() {
    static const std::vector<CurveEntry> v = make_curves();
    return v;
}

const SpecEntry& spec_entry(const std::string& name) { return find_entry(spec_entries(), name, "spec"); }
const OperatorEntry& operator_entry(const std::string& name) { return find_entry(operator_entries(), name, "operator"); }
const CurveEntry& curve_entry(const std::string& name) { return find_entry(curve_entries(), name, "curve"); }

SpecFile registry_spec(const std::string& name, bool formula) {
    const SpecEntry& e = spec_entry(name);
    const std::string& text = (formula || e.ratio_text.empty()) ? e.formula_text : e.ratio_text;
    if (text.empty()) fail("UnknownEntry", "spec '" + name + "' has no formula form");
    return parse_spec_text(text);
}

SpecFile kdf_general(int M, const Rational& a, const Rational& b, const Rational& bp, const Rational& g,
                     const Rational& scale, bool formula) {
    if (M < 1) fail("ValidationError", "M must be positive");
    SpecFile s;
    s.name = "kdf_general";
    s.tag = "Kampdeftext";
    s.params = {{"a", a}, {"b", b}, {"bp", bp}, {"g", g}};
    s.scale = scale;
    std::string e = std::to_string(M);
    if (formula) {
        s.kind = "formula";
        s.coefficient = kdf_formula(M);
    } else {
        s.kind = "ratio";
        s.alpha1 = "(a+n)^" + e + "*(bp+n+m)/((g+n+m)^" + e + "*(n+1))";
        s.alpha2 = "(b+m)^" + e + "*(bp+n+m)/((g+n+m)^" + e + "*(m+1))";
    }
    return parse_spec_text(spec_to_text(s));
}

PdeSystem registry_system(const std::string& name) {
    const OperatorEntry& e = operator_entry(name);
    if (e.kind == OpKind::DForm) fail("UnknownEntry", "'" + name + "' is an ordinary differential operator");
    PdeSystem sys;
    for (const auto& t : e.texts) sys.push_back(op_from_text(t));
    return sys;
}

UniODE registry_ode(const std::string& name) {
    const OperatorEntry& e = operator_entry(name);
    if (e.kind == OpKind::System) fail("UnknownEntry", "'" + name + "' is a system in two variables");
    if (e.kind == OpKind::DForm) return ode_from_text(e.texts[0]);
    return to_dform(from_theta_op(op_from_text(e.texts[0])));
}

Curve registry_curve(const std::string& name) {
    const CurveEntry& e = curve_entry(name);
    return Curve::parse(e.text, e.vars);
}

std::vector<Param> registry_params(const std::string& name) {
    std::vector<Param> out;
    for (const auto& [x, y] : curve_entry(name).params) out.push_back(Param::parse(x, y));
    return out;
}

MPoly w6_head(const Rational& c) {
    MPoly p = parse_poly("(1+162*(c+1)*x)*(1-81*(c+1)*x+2187*(c^2-7*c+1)*x^2-19683*(c+1)^3*x^3)*x^4", {"x", "c"});
    return p.substitute(1, c).with_vars({"x"});
}

MPoly genus1_curve(const Rational& u2, const Rational& v2) {
    const std::vector<std::string> v{"k", "r", "a", "b", "q"};
    // a = U^2, b = V^2, q = UV
    MPoly base = parse_poly("(r+k)*(k*r+1) - k*(r^2*a+b)", v);
    MPoly p = base * base - Rational(4) * parse_poly("k^2*r^2*a*b", v);
    return p.substitute(2, u2).substitute(3, v2).with_vars({"k", "r"});
}

std::string curve_to_text(const CurveEntry& e) {
    std::string out = "curve-vars:";
    for (const auto& v : e.vars) out += " " + v;
    out += "\nname: " + e.name + "\ntag: " + e.tag + "\ncurve: " + e.text + "\n";
    for (const auto& [x, y] : e.params) out += "param: " + x + " ; " + y + "\n";
    return out;
}

CurveEntry curve_from_text(const std::string& text) {
    CurveEntry e;
    std::istringstream in(text);
    std::string line;
    auto after = [](const std::string& l, const std::string& key) {
        std::string s = l.substr(key.size());
        size_t a = s.find_first_not_of(' ');
        return a == std::string::npos ? std::string() : s.substr(a);
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("curve-vars:", 0) == 0) {
            std::istringstream vs(after(line, "curve-vars:"));
            std::string v;
            while (vs >> v) e.vars.push_back(v);
        } else if (line.rfind("name:", 0) == 0) {
            e.name = after(line, "name:");
        } else if (line.rfind("tag:", 0) == 0) {
            e.tag = after(line, "tag:");
        } else if (line.rfind("curve:", 0) == 0) {
            e.text = after(line, "curve:");
        } else if (line.rfind("param:", 0) == 0) {
            std::string p = after(line, "param:");
            size_t semi = p.find(';');
            if (semi == std::string::npos) fail("ValidationError", "param: expected 'x(u) ; y(u)'");
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(' '), b = s.find_last_not_of(' ');
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            e.params.push_back({trim(p.substr(0, semi)), trim(p.substr(semi + 1))});
        } else {
            fail("ValidationError", "unrecognised line: " + line);
        }
    }
    if (e.vars.empty() || e.text.empty()) fail("ValidationError", "curve file needs curve-vars and curve");
    return e;
}

std::vector<std::pair<std::string, std::string>> fixture_files() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : spec_entries()) {
        if (!e.ratio_text.empty()) out.push_back({"specs/" + e.name + ".ratio.spec", e.ratio_text});
        if (!e.formula_text.empty()) out.push_back({"specs/" + e.name + ".formula.spec", e.formula_text});
    }
    for (const auto& e : operator_entries()) {
        if (e.kind == OpKind::DForm) {
            out.push_back({"operators/" + e.name + ".ode", e.texts[0]});
            continue;
        }
        for (size_t i = 0; i < e.texts.size(); ++i)
            out.push_back({"operators/" + e.name + (e.texts.size() > 1 ? "." + std::to_string(i + 1) : "") + ".op",
                           e.texts[i]});
    }
    for (const auto& e : curve_entries()) out.push_back({"curves/" + e.name + ".curve", curve_to_text(e)});
    return out;
}

}  // namespace hornsing
