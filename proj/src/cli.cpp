#include "hh/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hh/bounds.hpp"
#include "hh/convexity.hpp"
#include "hh/families.hpp"

namespace hh {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::vector<double> split_doubles(const std::string& s, char sep) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("malformed number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Rect parse_rect(const std::string& s) {
    std::vector<double> v = split_doubles(s, ',');
    if (v.size() != 4) throw std::invalid_argument("--rect expects a,b,c,d");
    Rect r{v[0], v[1], v[2], v[3]};
    validate(r);
    return r;
}

Interval parse_interval(const std::string& s) {
    std::vector<double> v = split_doubles(s, ',');
    if (v.size() != 2) throw std::invalid_argument("--interval expects lo,hi");
    Interval iv{v[0], v[1]};
    validate(iv);
    return iv;
}

// "lo:hi:step" inclusive of lo; hi included when (hi-lo) is an integer
// multiple of step within 1e-12. A bare number is a single-point range.
std::vector<double> parse_range(const std::string& s) {
    if (s.find(':') == std::string::npos) return {std::stod(s)};
    std::vector<double> v = split_doubles(s, ':');
    if (v.size() != 3) throw std::invalid_argument("range expects lo:hi:step");
    double lo = v[0], hi = v[1], step = v[2];
    if (!(step > 0.0) || hi < lo) throw std::invalid_argument("range requires lo <= hi, step > 0");
    long kmax = static_cast<long>(std::floor((hi - lo) / step + 1e-12));
    std::vector<double> out;
    for (long k = 0; k <= kmax; ++k) out.push_back(lo + k * step);
    if (out.empty()) throw std::invalid_argument("empty range");
    return out;
}

json report_to_json(const InequalityReport& rep, double quad_tol) {
    json params(rep.params);
    params["tol"] = rep.tol;
    params["quad_tol"] = quad_tol;
    json j{{"inequality", rep.inequality}, {"params", params},
           {"lhs", rep.lhs},              {"rhs", rep.rhs},
           {"margin", rep.margin},        {"satisfied", rep.satisfied},
           {"quad_error", rep.quad_error}};
    if (rep.variant) j["variant"] = *rep.variant;
    return j;
}

void print_report_text(const InequalityReport& rep, double quad_tol, std::ostream& out) {
    out << "inequality: " << rep.inequality << "\n";
    if (rep.variant) out << "variant: " << *rep.variant << "\n";
    for (const auto& [k, v] : rep.params) out << k << " = " << fmt(v) << "\n";
    out << "tol = " << fmt(rep.tol) << "\n";
    out << "quad_tol = " << fmt(quad_tol) << "\n";
    out << "lhs = " << fmt(rep.lhs) << "\n";
    out << "rhs = " << fmt(rep.rhs) << "\n";
    out << "margin = " << fmt(rep.margin) << "\n";
    out << "quad_error = " << fmt(rep.quad_error) << "\n";
    out << "satisfied: " << (rep.satisfied ? "yes" : "no") << "\n";
}

json witness_to_json(const Witness& w) {
    json j{{"lhs", w.lhs}, {"rhs", w.rhs}, {"violation", w.violation},
           {"points", w.points}, {"lambdas", w.lambdas}};
    return j;
}

struct CommonArgs {
    std::string f_expr;
    std::string g_expr;
    std::string rect_str;
    std::string interval_str;
    std::string s_str = "1";
    std::string s1_str = "1";
    std::string s2_str = "1";
    std::string variant = "proof";
    double tol = 1e-7;
    double quad_tol = 1e-9;
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;
};

// Either a family instantiation "name:p1:p2" or an expression.
ScalarFn make_fn(const std::string& text) {
    if (const FamilySpec* spec = find_family(text.substr(0, text.find(':')))) {
        std::vector<double> params;
        std::size_t pos = text.find(':');
        if (pos != std::string::npos) params = split_doubles(text.substr(pos + 1), ':');
        return instantiate(spec->name, params);
    }
    return ScalarFn::parse(text);
}

std::ostream& resolve_out(const CommonArgs& a, std::ofstream& file, std::ostream& fallback) {
    if (a.out_path.empty()) return fallback;
    file.open(a.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + a.out_path + "'");
    return file;
}

std::vector<std::string> param_columns(Ineq id) {
    switch (id) {
        case Ineq::Eq12:
        case Ineq::Eq14:
        case Ineq::Thm7:
            return {"s"};
        case Ineq::Thm9:
            return {"s", "variant"};
        case Ineq::Eq13:
        case Ineq::Thm8:
            return {"s1", "s2"};
        default:
            return {};
    }
}

int run_verify_or_sweep(const CommonArgs& a, const std::string& ineq_str, bool sweep,
                        std::ostream& out) {
    std::optional<Ineq> id = parse_ineq(ineq_str);
    if (!id) throw std::invalid_argument("unknown inequality '" + ineq_str + "'");
    if (a.as_json && a.as_csv) throw std::invalid_argument("choose exactly one output format");

    ScalarFn f = make_fn(a.f_expr);
    std::optional<ScalarFn> g;
    if (ineq_takes_g(*id)) {
        if (a.g_expr.empty())
            throw std::invalid_argument(std::string(ineq_name(*id)) + " requires --g");
        g = make_fn(a.g_expr);
    }

    EvalInput in;
    in.f = &f;
    in.g = g ? &*g : nullptr;
    in.tol = a.tol;
    in.quad_tol = a.quad_tol;
    if (ineq_is_2d(*id)) {
        if (a.rect_str.empty()) throw std::invalid_argument("--rect is required");
        in.rect = parse_rect(a.rect_str);
    } else {
        if (a.interval_str.empty()) throw std::invalid_argument("--interval is required");
        in.interval = parse_interval(a.interval_str);
    }
    if (a.variant == "proof")
        in.params.variant = Thm9Variant::Proof;
    else if (a.variant == "statement")
        in.params.variant = Thm9Variant::Statement;
    else
        throw std::invalid_argument("--variant must be 'proof' or 'statement'");

    std::vector<double> s_vals = parse_range(a.s_str);
    std::vector<double> s1_vals = parse_range(a.s1_str);
    std::vector<double> s2_vals = parse_range(a.s2_str);
    if (!sweep && (s_vals.size() != 1 || s1_vals.size() != 1 || s2_vals.size() != 1))
        throw std::invalid_argument("verify takes single parameter values; use sweep for ranges");

    std::vector<std::string> cols = param_columns(*id);
    bool uses_s = std::find(cols.begin(), cols.end(), "s") != cols.end();
    bool uses_s12 = std::find(cols.begin(), cols.end(), "s1") != cols.end();
    if (!uses_s) s_vals = {1.0};
    if (!uses_s12) s1_vals = s2_vals = {1.0};

    std::vector<InequalityReport> reports;
    for (double s : s_vals) {
        for (double s1 : s1_vals) {
            for (double s2 : s2_vals) {
                EvalInput cur = in;
                cur.params.s = s;
                cur.params.s1 = s1;
                cur.params.s2 = s2;
                reports.push_back(evaluate(*id, cur));
            }
        }
    }

    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.satisfied;

    if (sweep && !a.as_json) {
        // CSV, one row per parameter tuple
        for (std::size_t i = 0; i < cols.size(); ++i) out << cols[i] << ",";
        out << "lhs,rhs,margin,satisfied,err\n";
        for (const auto& r : reports) {
            for (const auto& c : cols) {
                if (c == "variant")
                    out << *r.variant << ",";
                else
                    out << fmt(r.params.at(c)) << ",";
            }
            out << fmt(r.lhs) << "," << fmt(r.rhs) << "," << fmt(r.margin) << ","
                << (r.satisfied ? "true" : "false") << "," << fmt(r.quad_error) << "\n";
        }
    } else if (sweep) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, a.quad_tol));
        out << arr.dump(2) << "\n";
    } else if (a.as_json) {
        out << report_to_json(reports[0], a.quad_tol).dump(2) << "\n";
    } else if (a.as_csv) {
        for (std::size_t i = 0; i < cols.size(); ++i) out << cols[i] << ",";
        out << "lhs,rhs,margin,satisfied,err\n";
        const auto& r = reports[0];
        for (const auto& c : cols) {
            if (c == "variant")
                out << *r.variant << ",";
            else
                out << fmt(r.params.at(c)) << ",";
        }
        out << fmt(r.lhs) << "," << fmt(r.rhs) << "," << fmt(r.margin) << ","
            << (r.satisfied ? "true" : "false") << "," << fmt(r.quad_error) << "\n";
    } else {
        print_report_text(reports[0], a.quad_tol, out);
    }
    return all_ok ? 0 : 1;
}

int run_certify(const CommonArgs& a, const std::string& prop_str, int grid_n, int lambda_n,
                double cert_tol, std::ostream& out) {
    std::optional<Property> prop = parse_property(prop_str);
    if (!prop) throw std::invalid_argument("unknown property '" + prop_str + "'");
    ScalarFn f = make_fn(a.f_expr);
    CertifyOptions opt;
    opt.grid_n = grid_n;
    opt.lambda_n = lambda_n;
    opt.tol = cert_tol;
    opt.s = parse_range(a.s_str).at(0);

    Certificate cert;
    bool one_d = *prop == Property::Convex1D || *prop == Property::SConvex1D;
    if (one_d) {
        if (a.interval_str.empty()) throw std::invalid_argument("--interval is required");
        cert = certify_1d(f, parse_interval(a.interval_str), *prop, opt);
    } else {
        if (a.rect_str.empty()) throw std::invalid_argument("--rect is required");
        cert = certify_2d(f, parse_rect(a.rect_str), *prop, opt);
    }

    if (a.as_json) {
        json j{{"property", property_name(*prop)},
               {"status", cert.pass ? "pass" : "fail"},
               {"samples_checked", cert.samples_checked}};
        if (property_uses_s(*prop)) j["s"] = opt.s;
        if (cert.witness) j["witness"] = witness_to_json(*cert.witness);
        out << j.dump(2) << "\n";
    } else {
        out << "property: " << property_name(*prop) << "\n";
        if (property_uses_s(*prop)) out << "s = " << fmt(opt.s) << "\n";
        out << "status: " << (cert.pass ? "pass (no violation found at sampled resolution)"
                                        : "fail")
            << "\n";
        out << "samples_checked = " << cert.samples_checked << "\n";
        if (cert.witness) {
            const Witness& w = *cert.witness;
            out << "witness points:";
            for (const auto& p : w.points) {
                out << " (";
                for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << fmt(p[i]);
                out << ")";
            }
            out << "\n";
            out << "witness lambdas:";
            for (double l : w.lambdas) out << " " << fmt(l);
            out << "\n";
            out << "witness lhs = " << fmt(w.lhs) << ", rhs = " << fmt(w.rhs)
                << ", violation = " << fmt(w.violation) << "\n";
        }
    }
    return cert.pass ? 0 : 1;
}

int run_list(std::ostream& out) {
    out << "inequalities:\n";
    for (Ineq id : {Ineq::Eq11, Ineq::Eq12, Ineq::Eq13, Ineq::Eq14, Ineq::Eq15, Ineq::Eq16,
                    Ineq::Eq17, Ineq::Thm7, Ineq::Thm8, Ineq::Thm9, Ineq::Thm10})
        out << "  " << ineq_name(id) << (ineq_is_2d(id) ? "  (rect" : "  (interval")
            << (ineq_takes_g(id) ? ", f and g)" : ", f only)") << "\n";
    out << "families:\n";
    for (const FamilySpec& fam : catalog()) {
        out << "  " << fam.name << "  " << fam.description;
        if (!fam.params.empty()) {
            out << "  params:";
            for (const auto& p : fam.params)
                out << " " << p.name << " in [" << fmt(p.lo) << "," << fmt(p.hi) << "]";
        }
        out << "\n    declares:";
        for (const Claim& c : fam.claims)
            out << " " << (c.holds ? "" : "!") << property_name(c.prop);
        out << "\n";
    }
    out << "properties:\n";
    for (Property p : {Property::Convex1D, Property::SConvex1D, Property::ConvexOnDelta,
                       Property::CoordConvex, Property::SConvexOnDelta, Property::CoordSConvex})
        out << "  " << property_name(p) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification of Hadamard-type inequalities for products of "
                 "convex and s-convex functions on rectangles"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string ineq_str, prop_str;
    int grid_n = 17, lambda_n = 9;
    double cert_tol = 1e-9;

    auto add_common = [&](CLI::App* sub, bool with_params) {
        sub->add_option("--f", a.f_expr, "expression in x,y or family name[:p1:p2...]")
            ->required();
        sub->add_option("--g", a.g_expr, "second function (product inequalities)");
        sub->add_option("--rect", a.rect_str, "rectangle a,b,c,d");
        sub->add_option("--interval", a.interval_str, "interval lo,hi");
        sub->add_option("--s", a.s_str, "s parameter (sweep accepts lo:hi:step)");
        if (with_params) {
            sub->add_option("--s1", a.s1_str, "s1 parameter");
            sub->add_option("--s2", a.s2_str, "s2 parameter");
            sub->add_option("--variant", a.variant, "thm9 variant: proof|statement");
            sub->add_option("--tol", a.tol, "report tolerance (default 1e-7)");
            sub->add_option("--quad-tol", a.quad_tol, "quadrature tolerance (default 1e-9)");
        }
        sub->add_flag("--json", a.as_json, "JSON output");
        sub->add_option("--out", a.out_path, "write output to a file");
    };

    CLI::App* verify = app.add_subcommand("verify", "evaluate one inequality");
    verify->add_option("--ineq", ineq_str, "inequality id (see list)")->required();
    add_common(verify, true);
    verify->add_flag("--csv", a.as_csv, "CSV output");

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate over a parameter range (CSV)");
    sweep->add_option("--ineq", ineq_str, "inequality id (see list)")->required();
    add_common(sweep, true);

    CLI::App* certify = app.add_subcommand("certify", "sampled convexity check");
    certify->add_option("--property", prop_str, "property id (see list)")->required();
    add_common(certify, false);
    certify->add_option("--grid-n", grid_n, "grid points per axis (default 17)");
    certify->add_option("--lambda-n", lambda_n, "interior lambda values (default 9)");
    certify->add_option("--tol", cert_tol, "violation tolerance (default 1e-9)");

    CLI::App* list = app.add_subcommand("list", "list inequalities, families, properties");
    (void)list;

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, e.get_exit_code() == 0 ? out : dummy, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        std::ostream& dest = resolve_out(a, file, out);
        if (app.got_subcommand("list")) return run_list(dest);
        if (app.got_subcommand("certify"))
            return run_certify(a, prop_str, grid_n, lambda_n, cert_tol, dest);
        return run_verify_or_sweep(a, ineq_str, app.got_subcommand("sweep"), dest);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace hh
