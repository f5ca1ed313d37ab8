#include "hh/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "hh/special.hpp"

namespace hh {

namespace {

// margin >= -(tol * scale + quadrature error) counts as satisfied, so exact
// equality cases sitting on the boundary do not flip on rounding.
void finish(InequalityReport& rep) {
    rep.margin = rep.rhs - rep.lhs;
    double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.satisfied = rep.margin >= -(rep.tol * scale + rep.quad_error);
}

double mean_1d(const ScalarFn& f, Interval iv, double tol, double* err) {
    QuadResult q = integrate_1d(f, iv, tol);
    double len = iv.hi - iv.lo;
    if (err) *err = q.err_estimate / len;
    return q.value / len;
}

double mean_2d(const ScalarFn& f, const Rect& r, double tol, double* err) {
    QuadResult q = integrate_2d(f, r, tol);
    if (err) *err = q.err_estimate / r.area();
    return q.value / r.area();
}

struct CornerVals {
    double fac, fbc, fad, fbd;
    double gac, gbc, gad, gbd;
};

CornerVals corners(const ScalarFn& f, const ScalarFn& g, const Rect& r) {
    return {f(r.a, r.c), f(r.b, r.c), f(r.a, r.d), f(r.b, r.d),
            g(r.a, r.c), g(r.b, r.c), g(r.a, r.d), g(r.b, r.d)};
}

}  // namespace

const char* ineq_name(Ineq id) {
    switch (id) {
        case Ineq::Eq11: return "eq11";
        case Ineq::Eq12: return "eq12";
        case Ineq::Eq13: return "eq13";
        case Ineq::Eq14: return "eq14";
        case Ineq::Eq15: return "eq15";
        case Ineq::Eq16: return "eq16";
        case Ineq::Eq17: return "eq17";
        case Ineq::Thm7: return "thm7";
        case Ineq::Thm8: return "thm8";
        case Ineq::Thm9: return "thm9";
        case Ineq::Thm10: return "thm10";
    }
    return "?";
}

std::optional<Ineq> parse_ineq(std::string_view name) {
    for (Ineq id : {Ineq::Eq11, Ineq::Eq12, Ineq::Eq13, Ineq::Eq14, Ineq::Eq15, Ineq::Eq16,
                    Ineq::Eq17, Ineq::Thm7, Ineq::Thm8, Ineq::Thm9, Ineq::Thm10})
        if (name == ineq_name(id)) return id;
    return std::nullopt;
}

bool ineq_is_2d(Ineq id) {
    switch (id) {
        case Ineq::Eq11:
        case Ineq::Eq12:
        case Ineq::Eq13:
        case Ineq::Eq14:
            return false;
        default:
            return true;
    }
}

bool ineq_takes_g(Ineq id) { return id != Ineq::Eq11 && id != Ineq::Eq15; }

CornerSums corner_sums(const ScalarFn& f, const ScalarFn& g, const Rect& r) {
    CornerVals v = corners(f, g, r);
    // each inner pair is symmetric under f <-> g, so swapping the functions
    // reproduces L, M, N bit for bit
    double L = (v.fac * v.gac + v.fbc * v.gbc) + (v.fad * v.gad + v.fbd * v.gbd);
    double M = (v.fac * v.gad + v.fad * v.gac) + (v.fbc * v.gbd + v.fbd * v.gbc) +
               (v.fbc * v.gac + v.fac * v.gbc) + (v.fbd * v.gad + v.fad * v.gbd);
    double N = (v.fbc * v.gad + v.fad * v.gbc) + (v.fbd * v.gac + v.fac * v.gbd);
    return {L, M, N};
}

double product_mean_2d(const ScalarFn& f, const ScalarFn& g, const Rect& r, double tol,
                       double* err) {
    QuadResult q = integrate_2d([&](double x, double y) { return f(x, y) * g(x, y); }, r, tol);
    if (err) *err = q.err_estimate / r.area();
    return q.value / r.area();
}

double mean_product_1d(const ScalarFn& F, const ScalarFn& G, Interval iv, double tol,
                       double* err) {
    QuadResult q = integrate_1d([&](double t) { return F.along(t) * G.along(t); }, iv, tol);
    double len = iv.hi - iv.lo;
    if (err) *err = q.err_estimate / len;
    return q.value / len;
}

double rhs_thm7(const CornerSums& cs, double s) {
    double p1 = s + 1.0, p2 = s + 2.0;
    return cs.L / (p2 * p2) + cs.M / (p1 * p2 * p2) + cs.N / (p1 * p1 * p2 * p2);
}

double rhs_thm8(const CornerSums& cs, double s1, double s2) {
    double sig = s1 + s2 + 1.0;
    double b = beta(s1 + 1.0, s2 + 1.0);
    return cs.L / (sig * sig) + b / sig * cs.M + b * b * cs.N;
}

double rhs_thm8_gamma(const CornerSums& cs, double s1, double s2) {
    double sig = s1 + s2 + 1.0;
    double k = s1 * s2 * std::exp(log_gamma(s1) + log_gamma(s2) - log_gamma(sig));
    return (cs.L + k * cs.M + k * k * cs.N) / (sig * sig);
}

double rhs_eq12(double Fa, double Fb, double Ga, double Gb, double s) {
    double M = Fa * Ga + Fb * Gb;
    double N = Fa * Gb + Fb * Ga;
    return M / (s + 2.0) + N / ((s + 1.0) * (s + 2.0));
}

double rhs_eq13(double Fa, double Fb, double Ga, double Gb, double s1, double s2) {
    double M = Fa * Ga + Fb * Gb;
    double N = Fa * Gb + Fb * Ga;
    return M / (s1 + s2 + 1.0) + beta(s1 + 1.0, s2 + 1.0) * N;
}

InequalityReport thm9_check(const ScalarFn& f, const ScalarFn& g, const Rect& r, double s,
                            Thm9Variant variant, double tol, double quad_tol) {
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("thm9: s must lie in (0,1]");
    InequalityReport rep;
    rep.inequality = "thm9";
    rep.tol = tol;
    rep.variant = variant == Thm9Variant::Proof ? "proof" : "statement";

    double mx = r.mid_x(), my = r.mid_y();
    rep.lhs = std::pow(2.0, 2.0 * s + 1.0) * f(mx, my) * g(mx, my);

    double mean_err = 0.0;
    double mean = product_mean_2d(f, g, r, quad_tol, &mean_err);
    CornerSums cs = corner_sums(f, g, r);

    double p1 = s + 1.0, p2 = s + 2.0;
    double D = p1 * p1 * p2 * p2;
    double cM = (2.0 * s * s + 6.0 * s + 6.0) / D;
    double cN = (2.0 * s * s + 8.0 * s + 6.0) / D;  // equals (2s+6)/((s+1)(s+2)^2)
    double cL_proof = (4.0 * s + 6.0) / D;
    double cL_statement = 5.0 / (p1 * p2 * p2);

    double rhs_proof = 2.0 * mean + cL_proof * cs.L + cM * cs.M + cN * cs.N;
    double rhs_statement = 2.0 * mean + cL_statement * cs.L + cM * cs.M + cN * cs.N;
    rep.rhs = variant == Thm9Variant::Proof ? rhs_proof : rhs_statement;
    rep.quad_error = 2.0 * mean_err;
    rep.params["s"] = s;
    rep.params["rhs_proof"] = rhs_proof;
    rep.params["rhs_statement"] = rhs_statement;
    rep.params["mean"] = mean;
    finish(rep);
    return rep;
}

InequalityReport thm10_check(const ScalarFn& f, const ScalarFn& g, const Rect& r, double tol,
                             double quad_tol) {
    InequalityReport rep;
    rep.inequality = "thm10";
    rep.tol = tol;

    CornerVals v = corners(f, g, r);
    // kernels paired with the corners (a,c), (b,c), (a,d), (b,d)
    Fn2 kernel[4] = {
        [&r](double x, double y) { return (x - r.b) * (y - r.d); },
        [&r](double x, double y) { return (r.a - x) * (y - r.d); },
        [&r](double x, double y) { return (x - r.b) * (r.c - y); },
        [&r](double x, double y) { return (r.a - x) * (r.c - y); },
    };
    double fcorner[4] = {v.fac, v.fbc, v.fad, v.fbd};
    double gcorner[4] = {v.gac, v.gbc, v.gad, v.gbd};

    double denom = r.area() * r.area();
    double sum = 0.0, lhs_err = 0.0;
    for (int i = 0; i < 4; ++i) {
        QuadResult qg =
            integrate_2d([&](double x, double y) { return kernel[i](x, y) * g(x, y); }, r, quad_tol);
        QuadResult qf =
            integrate_2d([&](double x, double y) { return kernel[i](x, y) * f(x, y); }, r, quad_tol);
        sum += fcorner[i] * qg.value + gcorner[i] * qf.value;
        lhs_err += std::abs(fcorner[i]) * qg.err_estimate + std::abs(gcorner[i]) * qf.err_estimate;
    }
    rep.lhs = sum / denom;

    double mean_err = 0.0;
    double mean = product_mean_2d(f, g, r, quad_tol, &mean_err);
    CornerSums cs = corner_sums(f, g, r);
    rep.rhs = mean + cs.L / 9.0 + cs.M / 18.0 + cs.N / 36.0;
    rep.quad_error = lhs_err / denom + mean_err;
    rep.params["mean"] = mean;
    finish(rep);
    return rep;
}

InequalityReport eq14_check(const ScalarFn& F, const ScalarFn& G, Interval iv, double s,
                            double tol, double quad_tol) {
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("eq14: s must lie in (0,1]");
    InequalityReport rep;
    rep.inequality = "eq14";
    rep.tol = tol;
    double mid = 0.5 * (iv.lo + iv.hi);
    double mean_err = 0.0;
    double mean = mean_product_1d(F, G, iv, quad_tol, &mean_err);
    rep.lhs = std::pow(2.0, s) * F.along(mid) * G.along(mid) - mean;
    double Fa = F.along(iv.lo), Fb = F.along(iv.hi);
    double Ga = G.along(iv.lo), Gb = G.along(iv.hi);
    double M = Fa * Ga + Fb * Gb;
    double N = Fa * Gb + Fb * Ga;
    rep.rhs = M / ((s + 1.0) * (s + 2.0)) + N / (s + 2.0);
    rep.quad_error = mean_err;
    rep.params["s"] = s;
    rep.params["mean"] = mean;
    finish(rep);
    return rep;
}

namespace {

InequalityReport eq11_check(const ScalarFn& f, Interval iv, double tol, double quad_tol) {
    InequalityReport rep;
    rep.inequality = "eq11";
    rep.tol = tol;
    double mid = 0.5 * (iv.lo + iv.hi);
    double mean_err = 0.0;
    double mean = mean_1d(f, iv, quad_tol, &mean_err);
    rep.lhs = f.along(mid);
    rep.rhs = 0.5 * (f.along(iv.lo) + f.along(iv.hi));
    rep.quad_error = mean_err;
    rep.params["mean"] = mean;
    // two chain links; the report margin is the weaker one
    rep.margin = std::min(mean - rep.lhs, rep.rhs - mean);
    double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.satisfied = rep.margin >= -(tol * scale + mean_err);
    return rep;
}

InequalityReport eq15_check(const ScalarFn& f, const Rect& r, double tol, double quad_tol) {
    InequalityReport rep;
    rep.inequality = "eq15";
    rep.tol = tol;
    double mean_err = 0.0;
    double mean = mean_2d(f, r, quad_tol, &mean_err);
    rep.lhs = f(r.mid_x(), r.mid_y());
    rep.rhs = 0.25 * (f(r.a, r.c) + f(r.a, r.d) + f(r.b, r.c) + f(r.b, r.d));
    rep.quad_error = mean_err;
    rep.params["mean"] = mean;
    rep.margin = std::min(mean - rep.lhs, rep.rhs - mean);
    double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.satisfied = rep.margin >= -(tol * scale + mean_err);
    return rep;
}

}  // namespace

InequalityReport evaluate(Ineq id, const EvalInput& in) {
    if (!in.f) throw std::invalid_argument("evaluate: f is required");
    if (ineq_takes_g(id) && !in.g)
        throw std::invalid_argument(std::string("evaluate: ") + ineq_name(id) + " requires g");
    if (ineq_is_2d(id)) {
        if (!in.rect) throw std::invalid_argument("evaluate: 2-D inequality requires a rect");
        validate(*in.rect);
    } else {
        if (!in.interval)
            throw std::invalid_argument("evaluate: 1-D inequality requires an interval");
        validate(*in.interval);
    }

    const ScalarFn& f = *in.f;
    const BoundParams& p = in.params;
    InequalityReport rep;
    rep.tol = in.tol;
    rep.inequality = ineq_name(id);

    switch (id) {
        case Ineq::Eq11:
            return eq11_check(f, *in.interval, in.tol, in.quad_tol);
        case Ineq::Eq15:
            return eq15_check(f, *in.rect, in.tol, in.quad_tol);
        case Ineq::Eq12: {
            if (!(p.s > 0.0 && p.s <= 1.0))
                throw std::invalid_argument("eq12: s must lie in (0,1]");
            Interval iv = *in.interval;
            double mean_err = 0.0;
            rep.lhs = mean_product_1d(f, *in.g, iv, in.quad_tol, &mean_err);
            rep.rhs = rhs_eq12(f.along(iv.lo), f.along(iv.hi), in.g->along(iv.lo),
                               in.g->along(iv.hi), p.s);
            rep.quad_error = mean_err;
            rep.params["s"] = p.s;
            finish(rep);
            return rep;
        }
        case Ineq::Eq13: {
            if (!(p.s1 > 0.0 && p.s1 <= 1.0) || !(p.s2 > 0.0 && p.s2 <= 1.0))
                throw std::invalid_argument("eq13: s1, s2 must lie in (0,1]");
            Interval iv = *in.interval;
            double mean_err = 0.0;
            rep.lhs = mean_product_1d(f, *in.g, iv, in.quad_tol, &mean_err);
            rep.rhs = rhs_eq13(f.along(iv.lo), f.along(iv.hi), in.g->along(iv.lo),
                               in.g->along(iv.hi), p.s1, p.s2);
            rep.quad_error = mean_err;
            rep.params["s1"] = p.s1;
            rep.params["s2"] = p.s2;
            finish(rep);
            return rep;
        }
        case Ineq::Eq14:
            return eq14_check(f, *in.g, *in.interval, p.s, in.tol, in.quad_tol);
        case Ineq::Eq16: {
            double mean_err = 0.0;
            rep.lhs = product_mean_2d(f, *in.g, *in.rect, in.quad_tol, &mean_err);
            CornerSums cs = corner_sums(f, *in.g, *in.rect);
            rep.rhs = cs.L / 9.0 + cs.M / 18.0 + cs.N / 36.0;
            rep.quad_error = mean_err;
            finish(rep);
            return rep;
        }
        case Ineq::Eq17: {
            const Rect& r = *in.rect;
            double mean_err = 0.0;
            double mean = product_mean_2d(f, *in.g, r, in.quad_tol, &mean_err);
            rep.lhs = 4.0 * f(r.mid_x(), r.mid_y()) * (*in.g)(r.mid_x(), r.mid_y()) - mean;
            CornerSums cs = corner_sums(f, *in.g, r);
            rep.rhs = 5.0 * cs.L / 36.0 + 7.0 * cs.M / 36.0 + 2.0 * cs.N / 9.0;
            rep.quad_error = mean_err;
            rep.params["mean"] = mean;
            finish(rep);
            return rep;
        }
        case Ineq::Thm7: {
            if (!(p.s > 0.0 && p.s <= 1.0))
                throw std::invalid_argument("thm7: s must lie in (0,1]");
            double mean_err = 0.0;
            rep.lhs = product_mean_2d(f, *in.g, *in.rect, in.quad_tol, &mean_err);
            rep.rhs = rhs_thm7(corner_sums(f, *in.g, *in.rect), p.s);
            rep.quad_error = mean_err;
            rep.params["s"] = p.s;
            finish(rep);
            return rep;
        }
        case Ineq::Thm8: {
            if (!(p.s1 > 0.0 && p.s1 <= 1.0) || !(p.s2 > 0.0 && p.s2 <= 1.0))
                throw std::invalid_argument("thm8: s1, s2 must lie in (0,1]");
            double mean_err = 0.0;
            rep.lhs = product_mean_2d(f, *in.g, *in.rect, in.quad_tol, &mean_err);
            CornerSums cs = corner_sums(f, *in.g, *in.rect);
            rep.rhs = rhs_thm8(cs, p.s1, p.s2);
            rep.quad_error = mean_err;
            rep.params["s1"] = p.s1;
            rep.params["s2"] = p.s2;
            rep.params["rhs_gamma_form"] = rhs_thm8_gamma(cs, p.s1, p.s2);
            finish(rep);
            return rep;
        }
        case Ineq::Thm9:
            return thm9_check(f, *in.g, *in.rect, p.s, p.variant, in.tol, in.quad_tol);
        case Ineq::Thm10:
            return thm10_check(f, *in.g, *in.rect, in.tol, in.quad_tol);
    }
    throw std::invalid_argument("evaluate: unknown inequality");
}

}  // namespace hh
