#include <omp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hornsing/curve.hpp"
#include "hornsing/error.hpp"
#include "hornsing/horn.hpp"
#include "hornsing/ising.hpp"
#include "hornsing/registry.hpp"

using namespace hornsing;
using json = nlohmann::ordered_json;

namespace {

bool as_json = false;

struct Out {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::string tag;
    std::ostringstream text;
};

void emit(const Out& o) {
    if (as_json) {
        json j;
        j["command"] = o.command;
        j["inputs"] = o.inputs;
        j["result"] = o.result;
        j["paper_tag"] = o.tag;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << o.text.str();
    }
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
}

std::vector<std::string> var_list(const std::string& s) {
    std::vector<std::string> v;
    for (auto& p : split_top(s, ',')) v.push_back(trim(p));
    return v;
}

bool looks_like_file(const std::string& s) {
    return s.find('/') != std::string::npos || std::filesystem::exists(s);
}

SpecFile spec_arg(const std::string& s, bool formula, std::string& tag) {
    if (looks_like_file(s)) {
        SpecFile f = load_spec(s);
        tag = f.tag;
        return f;
    }
    tag = spec_entry(s).tag;
    return registry_spec(s, formula);
}

// "x=<expr>,y=<expr>" in t
std::pair<RatFun, RatFun> path_arg(const std::string& s) {
    std::optional<RatFun> x, y;
    for (const auto& part : split_top(s, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) fail("UsageError", "path entry '" + part + "' needs name=expr");
        std::string k = trim(part.substr(0, eq));
        RatFun v = parse_ratfun(part.substr(eq + 1), {"t"});
        if (k == "x") x = v;
        else if (k == "y") y = v;
        else fail("UsageError", "path names must be x and y, got '" + k + "'");
    }
    if (!x || !y) fail("UsageError", "path needs both x= and y=");
    return {*x, *y};
}

UniSeries restricted(const SpecFile& spec, const std::string& path, int N) {
    auto [xp, yp] = path_arg(path);
    BiSeries b = expand(series_source(spec), restrict_needed(xp, yp, N));
    return restrict(b, xp, yp, N);
}

Curve curve_arg(const std::string& s, const std::string& vars, std::string& tag) {
    for (const auto& e : curve_entries())
        if (e.name == s) {
            tag = e.tag;
            return registry_curve(s);
        }
    return Curve::parse(s, var_list(vars));
}

json series_json(const UniSeries& s) {
    json a = json::array();
    for (const auto& c : s.c) a.push_back(c.get_str());
    return a;
}

json ode_json(const UniODE& ode) {
    json a = json::array();
    for (int j = 0; j <= ode.order(); ++j) a.push_back(ode.coefficient(j).str());
    return a;
}

std::string mono_text(int a, int b) {
    std::string s;
    if (a) s += "x" + (a > 1 ? "^" + std::to_string(a) : std::string());
    if (b) s += std::string(a ? "*" : "") + "y" + (b > 1 ? "^" + std::to_string(b) : std::string());
    return s.empty() ? "1" : s;
}

void horn_one(const std::string& name, Out& o) {
    std::string tag;
    SpecFile spec = spec_arg(name, false, tag);
    SeriesSource src = series_source(spec);
    if (!src.ratios) fail("ValidationError", "horn needs a ratio spec, '" + name + "' has only a formula");
    HornResult h = horn_curve(*src.ratios);
    o.tag = tag;
    std::string curve = print_canonical(h.main_curve);
    json mono = json::array();
    o.text << "curve: " << curve << "\n";
    for (auto [a, b] : h.monomial_components) {
        mono.push_back(mono_text(a, b));
        o.text << "monomial: " << mono_text(a, b) << "\n";
    }
    o.result["curve"] = curve;
    o.result["monomial_components"] = mono;
    if (h.x_at_infinity) {
        o.result["x_at_infinity"] = h.x_at_infinity->get_str();
        o.text << "x_at_infinity: " << h.x_at_infinity->get_str() << "\n";
    }
    if (h.y_at_zero) {
        o.result["y_at_zero"] = h.y_at_zero->get_str();
        o.text << "y_at_zero: " << h.y_at_zero->get_str() << "\n";
    }
}

std::string kind_name(OpKind k) {
    switch (k) {
        case OpKind::System: return "system";
        case OpKind::Theta: return "theta";
        case OpKind::DForm: return "dform";
    }
    return "?";
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p);
    if (!f) fail("IoError", "cannot write " + p.string());
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hornsing: exact series, operators and singular curves"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    int jobs = 1;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    Out o;

    // horn
    std::string horn_spec;
    bool horn_all = false;
    auto* horn = app.add_subcommand("horn", "singular curve by the Horn limit method");
    horn->add_option("spec", horn_spec, "registry name or spec file");
    horn->add_flag("--all", horn_all, "every ratio spec in the registry");

    // series
    std::string ser_spec;
    int ser_order = 6;
    bool ser_formula = false;
    auto* series = app.add_subcommand("series", "expand a double series");
    series->add_option("spec", ser_spec)->required();
    series->add_option("--order", ser_order)->check(CLI::NonNegativeNumber);
    series->add_flag("--formula", ser_formula, "use the closed formula");

    // restrict
    std::string res_spec, res_path = "x=t,y=t";
    int res_order = 10;
    bool res_formula = false;
    auto* restr = app.add_subcommand("restrict", "restrict a double series along a path in t");
    restr->add_option("spec", res_spec)->required();
    restr->add_option("--path", res_path, "x=<expr>,y=<expr>");
    restr->add_option("--order", res_order)->check(CLI::NonNegativeNumber);
    restr->add_flag("--formula", res_formula);

    // guess-ode
    std::string g_spec, g_path = "x=t,y=t";
    int g_r = 4, g_d = 2, g_terms = -1;
    bool g_formula = false;
    auto* guess = app.add_subcommand("guess-ode", "fit a linear ODE to a restricted series");
    guess->add_option("--spec", g_spec)->required();
    guess->add_option("--restrict", g_path);
    guess->add_option("--max-order", g_r)->check(CLI::PositiveNumber);
    guess->add_option("--max-degree", g_d)->check(CLI::NonNegativeNumber);
    guess->add_option("--terms", g_terms, "series order used (default: the minimum allowed)");
    guess->add_flag("--formula", g_formula);

    // annihilate
    std::string an_op, an_spec, an_path = "x=t,y=t";
    int an_order = -1;
    bool an_formula = false;
    auto* annih = app.add_subcommand("annihilate", "check that an operator kills a series");
    annih->add_option("operator", an_op)->required();
    annih->add_option("spec", an_spec)->required();
    annih->add_option("--restrict", an_path, "path for univariate operators");
    annih->add_option("--order", an_order);
    annih->add_flag("--formula", an_formula);

    // logbasis
    std::string lb_sys;
    int lb_order = 8, lb_log = 2;
    auto* logb = app.add_subcommand("logbasis", "formal log-series solutions of a system");
    logb->add_option("system", lb_sys)->required();
    logb->add_option("--order", lb_order)->check(CLI::NonNegativeNumber);
    logb->add_option("--max-log", lb_log)->check(CLI::NonNegativeNumber);

    // hadamard
    std::string h_a, h_b;
    auto* had = app.add_subcommand("hadamard", "termwise product of two series files");
    had->add_option("a", h_a)->required();
    had->add_option("b", h_b)->required();

    // resultant / gcd
    std::string p_a, p_b, p_var, p_vars = "x,y";
    auto* res = app.add_subcommand("resultant", "Sylvester resultant");
    res->add_option("a", p_a)->required();
    res->add_option("b", p_b)->required();
    res->add_option("--var", p_var)->required();
    res->add_option("--vars", p_vars);
    auto* gcd = app.add_subcommand("gcd", "polynomial gcd");
    gcd->add_option("a", p_a)->required();
    gcd->add_option("b", p_b)->required();
    gcd->add_option("--vars", p_vars);

    // curve
    auto* curve = app.add_subcommand("curve", "plane curve tools");
    curve->require_subcommand(1);
    std::string c_name, c_vars = "x,y", c_x, c_y, c_var, c_u2, c_v2;
    auto* vp = curve->add_subcommand("verify-param", "check a rational parametrization");
    vp->add_option("curve", c_name)->required();
    vp->add_option("--vars", c_vars);
    vp->add_option("--x", c_x);
    vp->add_option("--y", c_y);
    auto* genus = curve->add_subcommand("genus", "genus of a curve quadratic in one variable");
    genus->add_option("curve", c_name)->required();
    genus->add_option("--vars", c_vars);
    genus->add_option("--var", c_var)->required();
    auto* jinv = curve->add_subcommand("jinv", "Nickelian j-invariant");
    jinv->add_option("--u2", c_u2)->required();
    jinv->add_option("--v2", c_v2)->required();
    auto* sing = curve->add_subcommand("singular", "affine singular points");
    sing->add_option("curve", c_name)->required();
    sing->add_option("--vars", c_vars);
    std::string cc1, cc2, cv1 = "x,y", cv2 = "x,y", cm1, cm2, ctarget = "s";
    auto* cmp = curve->add_subcommand("compare", "pull two curves back and compare");
    cmp->add_option("--c1", cc1)->required();
    cmp->add_option("--vars1", cv1);
    cmp->add_option("--map1", cm1, "comma list of images, one per variable")->required();
    cmp->add_option("--c2", cc2)->required();
    cmp->add_option("--vars2", cv2);
    cmp->add_option("--map2", cm2)->required();
    cmp->add_option("--target", ctarget, "comma list of target variables");

    // catalog
    auto* cat = app.add_subcommand("catalog", "Ising singularity catalogs");
    cat->require_subcommand(1);
    std::string coords = "kr";
    auto* chi3 = cat->add_subcommand("chi3", "factors of the chi3 catalog");
    chi3->add_option("--coords", coords);
    auto* chi4 = cat->add_subcommand("chi4", "factors of the chi4 catalog");
    chi4->add_option("--coords", coords);
    auto* cgcd = cat->add_subcommand("gcd", "gcd of the chi3 and chi4 products");
    cgcd->add_option("--coords", coords);
    auto* audit = cat->add_subcommand("audit", "genus of every catalog factor");
    int kw_n = 3;
    std::string kw_r;
    bool kw_recip = false;
    auto* krwr = cat->add_subcommand("kr-wr", "match kr factors to wr factors");
    krwr->add_option("--n", kw_n);
    krwr->add_option("--r", kw_r, "specialise r first");
    krwr->add_flag("--reciprocal", kw_recip, "use w = (1+s^2)/(2s)");

    // nickelian
    int nk_n = 4, nk_j = 1, nk_l = 4, nk_sign = 1;
    std::string nk_mode = "exact";
    auto* nick = app.add_subcommand("nickelian", "Nickelian curve for (n, j, l)");
    nick->add_option("--n", nk_n);
    nick->add_option("--j", nk_j);
    nick->add_option("--l", nk_l);
    nick->add_option("--sign", nk_sign);
    nick->add_option("--mode", nk_mode)->check(CLI::IsMember({"exact", "symbolic", "float", "isotropic"}));

    // registry
    auto* reg = app.add_subcommand("registry", "built-in data");
    reg->require_subcommand(1);
    auto* rlist = reg->add_subcommand("list", "list entries");
    std::string dump_dir;
    auto* rdump = reg->add_subcommand("dump", "write the fixture files");
    rdump->add_option("dir", dump_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    omp_set_num_threads(jobs);

    try {
        if (*horn) {
            o.command = "horn";
            if (horn_all) {
                std::vector<std::string> names;
                for (const auto& e : spec_entries())
                    if (!e.ratio_text.empty()) names.push_back(e.name);
                std::vector<Out> outs(names.size());
                std::vector<std::string> errs(names.size());
#pragma omp parallel for schedule(dynamic, 1)
                for (size_t i = 0; i < names.size(); ++i) {
                    try {
                        horn_one(names[i], outs[i]);
                    } catch (const std::exception& e) {
                        errs[i] = e.what();
                    }
                }
                for (size_t i = 0; i < names.size(); ++i) {
                    if (!errs[i].empty()) fail("EvaluationError", names[i] + ": " + errs[i]);
                    o.text << "[" << names[i] << "]\n" << outs[i].text.str();
                    json r = outs[i].result;
                    r["paper_tag"] = outs[i].tag;
                    o.result[names[i]] = r;
                }
                o.inputs["all"] = true;
            } else {
                if (horn_spec.empty()) fail("UsageError", "horn needs a spec or --all");
                o.inputs["spec"] = horn_spec;
                horn_one(horn_spec, o);
            }
        } else if (*series) {
            o.command = "series";
            SpecFile s = spec_arg(ser_spec, ser_formula, o.tag);
            BiSeries b = expand(series_source(s), ser_order);
            o.inputs = {{"spec", ser_spec}, {"order", ser_order}, {"formula", ser_formula}};
            json c = json::array();
            for (int d = 0; d <= ser_order; ++d)
                for (int m = 0; m <= d; ++m) c.push_back({d - m, m, b.at(d - m, m).get_str()});
            o.result["coefficients"] = c;
            o.text << series_to_text(b);
        } else if (*restr) {
            o.command = "restrict";
            SpecFile s = spec_arg(res_spec, res_formula, o.tag);
            UniSeries u = restricted(s, res_path, res_order);
            o.inputs = {{"spec", res_spec}, {"path", res_path}, {"order", res_order}};
            o.result["coefficients"] = series_json(u);
            o.text << series_to_text(u);
        } else if (*guess) {
            o.command = "guess-ode";
            SpecFile s = spec_arg(g_spec, g_formula, o.tag);
            int N = g_terms >= 0 ? g_terms : (g_r + 1) * (g_d + 1) + g_r + 10;
            UniSeries u = restricted(s, g_path, N);
            o.inputs = {{"spec", g_spec}, {"restrict", g_path}, {"max_order", g_r}, {"max_degree", g_d}, {"terms", N}};
            auto g = guess_ode(u, g_r, g_d);
            if (!g) {
                o.result["found"] = false;
                o.text << "NotFound\n";
            } else {
                o.result["found"] = true;
                o.result["order"] = g->order;
                o.result["degree"] = g->degree;
                o.result["checked_margin"] = g->checked_margin;
                o.result["coefficients"] = ode_json(g->ode);
                o.text << "theta-order: " << g->order << "\nx-degree: " << g->degree
                       << "\nchecked_margin: " << g->checked_margin << "\n"
                       << ode_to_text(g->ode);
            }
        } else if (*annih) {
            o.command = "annihilate";
            std::string spec_tag;
            SpecFile s = spec_arg(an_spec, an_formula, spec_tag);
            o.inputs = {{"operator", an_op}, {"spec", an_spec}};
            bool ok = false;
            bool system = false;
            PdeSystem sys;
            UniODE ode;
            if (looks_like_file(an_op)) {
                std::string t = read_file(an_op);
                system = t.find("op-vars:") != std::string::npos;
                if (system) sys = {op_from_text(t)};
                else ode = ode_from_text(t);
            } else {
                const OperatorEntry& e = operator_entry(an_op);
                o.tag = e.tag;
                system = e.kind == OpKind::System;
                if (system) sys = registry_system(an_op);
                else ode = registry_ode(an_op);
            }
            if (system) {
                int N = an_order >= 0 ? an_order : 24;
                ok = annihilates(sys, expand(series_source(s), N));
                o.inputs["order"] = N;
            } else {
                int N = an_order >= 0 ? an_order : ode.order() + ode.degree() + 12;
                ok = annihilates_series(ode, restricted(s, an_path, N));
                o.inputs["restrict"] = an_path;
                o.inputs["order"] = N;
            }
            o.result["annihilates"] = ok;
            o.text << (ok ? "true" : "false") << "\n";
        } else if (*logb) {
            o.command = "logbasis";
            o.tag = operator_entry(lb_sys).tag;
            LogBasis lb = log_basis(registry_system(lb_sys), lb_order, lb_log);
            o.inputs = {{"system", lb_sys}, {"order", lb_order}, {"max_log", lb_log}};
            o.result["dimension"] = lb.dimension;
            o.result["history"] = lb.history;
            json lead = json::array();
            o.text << "dimension: " << lb.dimension << "\nleading logs:";
            for (const auto& el : lb.basis) {
                auto [i, j] = leading_log(el);
                lead.push_back({i, j});
                o.text << " (" << i << "," << j << ")";
            }
            o.text << "\n";
            o.result["leading_logs"] = lead;
        } else if (*had) {
            o.command = "hadamard";
            UniSeries r = hadamard(uniseries_from_text(read_file(h_a)), uniseries_from_text(read_file(h_b)));
            o.inputs = {{"a", h_a}, {"b", h_b}};
            o.result["coefficients"] = series_json(r);
            o.text << series_to_text(r);
        } else if (*res) {
            o.command = "resultant";
            auto vars = var_list(p_vars);
            MPoly r = resultant(parse_poly(p_a, vars), parse_poly(p_b, vars), p_var);
            std::string sf = r.is_zero() ? "0" : print_canonical(squarefree_primitive(r));
            o.inputs = {{"a", p_a}, {"b", p_b}, {"var", p_var}, {"vars", vars}};
            o.result["resultant"] = r.str();
            o.result["squarefree"] = sf;
            o.text << "resultant: " << r.str() << "\nsquarefree: " << sf << "\n";
        } else if (*gcd) {
            o.command = "gcd";
            auto vars = var_list(p_vars);
            MPoly g = poly_gcd(parse_poly(p_a, vars), parse_poly(p_b, vars));
            o.inputs = {{"a", p_a}, {"b", p_b}, {"vars", vars}};
            o.result["gcd"] = print_canonical(g);
            o.text << print_canonical(g) << "\n";
        } else if (*curve) {
            if (*vp) {
                o.command = "curve verify-param";
                Curve c = curve_arg(c_name, c_vars, o.tag);
                std::vector<Param> ps;
                if (!c_x.empty() || !c_y.empty()) {
                    if (c_x.empty() || c_y.empty()) fail("UsageError", "give both --x and --y");
                    ps.push_back(Param::parse(c_x, c_y));
                } else {
                    ps = registry_params(c_name);
                    if (ps.empty()) fail("UsageError", "no stored parametrization for '" + c_name + "'");
                }
                o.inputs = {{"curve", c_name}};
                json all = json::array();
                for (const auto& p : ps) {
                    bool ok = verify_parametrization(c, p);
                    all.push_back({{"x", p.xp.str()}, {"y", p.yp.str()}, {"verified", ok}});
                    o.text << "(" << p.xp.str() << ", " << p.yp.str() << "): " << (ok ? "true" : "false") << "\n";
                }
                o.result["params"] = all;
            } else if (*genus) {
                o.command = "curve genus";
                Curve c = curve_arg(c_name, c_vars, o.tag);
                GenusCertificate g = genus_quadratic_fiber(c, c_var);
                std::string D = from_upoly(g.D, {g.base_var}, 0).str();
                std::string odd = from_upoly(g.odd_part, {g.base_var}, 0).str();
                o.inputs = {{"curve", c_name}, {"var", c_var}};
                o.result = {{"genus", g.genus}, {"D", D}, {"odd_part", odd}, {"D_squarefree", g.D_squarefree}};
                o.text << "genus: " << (g.genus >= 2 ? ">= 2" : std::to_string(g.genus)) << "\nD(" << g.base_var
                       << "): " << D << "\nsquarefree: " << (g.D_squarefree ? "yes" : "no") << "\n";
            } else if (*jinv) {
                o.command = "curve jinv";
                o.tag = "jUV";
                auto j = nickelian_j(parse_rational(c_u2), parse_rational(c_v2));
                o.inputs = {{"u2", c_u2}, {"v2", c_v2}};
                if (j) {
                    o.result["j"] = j->get_str();
                    o.text << j->get_str() << "\n";
                } else {
                    o.result["j"] = "Degenerate";
                    o.text << "Degenerate\n";
                }
            } else if (*sing) {
                o.command = "curve singular";
                Curve c = curve_arg(c_name, c_vars, o.tag);
                SingularLocus L = affine_singular_points(c);
                json pts = json::array(), resid = json::array();
                for (const auto& [x, y] : L.points) {
                    pts.push_back({x.get_str(), y.get_str()});
                    o.text << "point: (" << x.get_str() << ", " << y.get_str() << ")\n";
                }
                for (const auto& r : L.residual) {
                    resid.push_back(r.str());
                    o.text << "residual: " << r.str() << "\n";
                }
                o.inputs = {{"curve", c_name}};
                o.result = {{"points", pts}, {"residual", resid}};
            } else if (*cmp) {
                o.command = "curve compare";
                auto target = var_list(ctarget);
                auto mk = [&](const std::string& m) {
                    CurveMap map;
                    for (const auto& e : var_list(m)) map.images.push_back(parse_ratfun(e, target));
                    return map;
                };
                std::string t1, t2;
                Curve a = curve_arg(cc1, cv1, t1), b = curve_arg(cc2, cv2, t2);
                MatchReport r = substitute_compare(a.F, mk(cm1), b.F, mk(cm2));
                o.inputs = {{"c1", cc1}, {"map1", cm1}, {"c2", cc2}, {"map2", cm2}, {"target", target}};
                const char* kinds[] = {"equal", "proportional", "distinct"};
                o.result = {{"kind", kinds[static_cast<int>(r.kind)]},
                            {"ratio", r.ratio.get_str()},
                            {"same_zero_set", r.same_zero_set},
                            {"gcd", r.gcd.str()}};
                o.text << to_string(r) << "\n";
            }
        } else if (*cat) {
            if (*chi3 || *chi4) {
                int n = *chi3 ? 3 : 4;
                o.command = "catalog chi" + std::to_string(n);
                Coords c = parse_coords(coords);
                ChiCatalog cc = chi_catalog(n, c);
                o.tag = c == Coords::kr ? (n == 3 ? "sing3" : "sing4") : (n == 3 ? "singw" : "singwbis");
                o.inputs = {{"coords", coords}};
                json fs = json::array();
                for (const auto& f : cc.factors) {
                    fs.push_back({{"factor", f.f.str()}, {"multiplicity", f.mult}});
                    o.text << "(" << f.f.str() << ")" << (f.mult > 1 ? "^" + std::to_string(f.mult) : "") << "\n";
                }
                bool intact = cc.product() == chi_displayed(n, c);
                o.result = {{"factors", fs}, {"integrity", intact}};
                o.text << "integrity: " << (intact ? "ok" : "MISMATCH") << "\n";
            } else if (*cgcd) {
                o.command = "catalog gcd";
                Coords c = parse_coords(coords);
                MPoly g = chi_gcd(c);
                o.inputs = {{"coords", coords}};
                o.result["gcd"] = print_canonical(g);
                o.text << print_canonical(g) << "\n";
            } else if (*audit) {
                o.command = "catalog audit";
                json a = json::array();
                for (const auto& e : elliptic_audit()) {
                    json row = {{"coords", coords_name(e.coords)}, {"factor", e.factor.str()}, {"status", e.status}};
                    if (e.param_verified) row["parametrization"] = "verified";
                    a.push_back(row);
                    o.text << coords_name(e.coords) << "  " << e.factor.str() << "  " << e.status
                           << (e.param_verified ? "  (param ok)" : "") << "\n";
                }
                o.result["factors"] = a;
            } else if (*krwr) {
                o.command = "catalog kr-wr";
                std::optional<Rational> rv;
                if (!kw_r.empty()) rv = parse_rational(kw_r);
                KrWrReport r = kr_wr_report(kw_n, rv, kw_recip ? WMap::reciprocal : WMap::stated);
                o.inputs = {{"n", kw_n}, {"r", kw_r}, {"map", kw_recip ? "reciprocal" : "stated"}};
                ChiCatalog kr = chi_catalog(kw_n, Coords::kr), wr = chi_catalog(kw_n, Coords::wr);
                json m = json::array();
                for (const auto& g : r.matched) {
                    json ks = json::array(), ws = json::array();
                    std::string line;
                    for (auto i : g.kr) {
                        ks.push_back(kr.factors[i].f.str());
                        line += "(" + kr.factors[i].f.str() + ")";
                    }
                    line += "  <->  ";
                    for (auto j : g.wr) {
                        ws.push_back(wr.factors[j].f.str());
                        line += "(" + wr.factors[j].f.str() + ")";
                    }
                    m.push_back({{"kr", ks}, {"wr", ws}, {"ratio", g.ratio.get_str()}});
                    o.text << "matched: " << line << "  ratio " << g.ratio.get_str() << "\n";
                }
                json ku = json::array(), wu = json::array(), wm = json::array();
                for (auto i : r.kr_unmatched) {
                    ku.push_back(kr.factors[i].f.str());
                    o.text << "unmatched kr: " << kr.factors[i].f.str() << "\n";
                }
                for (auto j : r.wr_unmatched) {
                    wu.push_back(wr.factors[j].f.str());
                    o.text << "unmatched wr: " << wr.factors[j].f.str() << "\n";
                }
                for (auto j : r.wr_monomial) {
                    wm.push_back(wr.factors[j].f.str());
                    o.text << "monomial wr: " << wr.factors[j].f.str() << "\n";
                }
                o.result = {{"matched", m}, {"kr_unmatched", ku}, {"wr_unmatched", wu}, {"wr_monomial", wm}};
            }
        } else if (*nick) {
            o.command = "nickelian";
            o.tag = nk_mode == "isotropic" ? "location" : "genus1";
            NickelianIndex idx{nk_n, nk_j, nk_l, nk_sign};
            o.inputs = {{"n", nk_n}, {"j", nk_j}, {"l", nk_l}, {"sign", nk_sign}, {"mode", nk_mode}};
            std::string text;
            if (nk_mode == "exact") text = print_canonical(nickelian_curve(idx));
            else if (nk_mode == "symbolic") text = nickelian_curve_symbolic(nk_sign).str();
            else if (nk_mode == "float") text = nickelian_curve_float(idx).str();
            else text = print_canonical(nickelian_isotropic(idx));
            o.result["curve"] = text;
            o.text << text << "\n";
        } else if (*reg) {
            if (*rlist) {
                o.command = "registry list";
                json specs = json::array(), ops = json::array(), curves = json::array();
                o.text << "specs:\n";
                for (const auto& e : spec_entries()) {
                    std::string forms = std::string(e.ratio_text.empty() ? "" : "ratio") +
                                        (e.ratio_text.empty() || e.formula_text.empty() ? "" : ",") +
                                        (e.formula_text.empty() ? "" : "formula");
                    specs.push_back({{"name", e.name}, {"tag", e.tag}, {"forms", forms}});
                    o.text << "  " << e.name << "  [" << e.tag << "]  " << forms << "\n";
                }
                o.text << "operators:\n";
                for (const auto& e : operator_entries()) {
                    ops.push_back({{"name", e.name}, {"tag", e.tag}, {"kind", kind_name(e.kind)}});
                    o.text << "  " << e.name << "  [" << e.tag << "]  " << kind_name(e.kind) << "\n";
                }
                o.text << "curves:\n";
                for (const auto& e : curve_entries()) {
                    curves.push_back({{"name", e.name}, {"tag", e.tag}, {"params", e.params.size()}});
                    o.text << "  " << e.name << "  [" << e.tag << "]  " << e.params.size() << " param(s)\n";
                }
                o.result = {{"specs", specs}, {"operators", ops}, {"curves", curves}};
            } else if (*rdump) {
                o.command = "registry dump";
                json files = json::array();
                for (const auto& [rel, text] : fixture_files()) {
                    write_file(std::filesystem::path(dump_dir) / rel, text);
                    files.push_back(rel);
                    o.text << rel << "\n";
                }
                o.inputs["dir"] = dump_dir;
                o.result["files"] = files;
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.name() == "UsageError" || e.name() == "UnknownEntry") return 2;
        return 1;
    }
    emit(o);
    return 0;
}
