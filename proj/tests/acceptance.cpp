// Acceptance suite: one printed pass/fail line per criterion, nonzero exit on
// any failure. Runs against the public library API only.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hh/bounds.hpp"
#include "hh/convexity.hpp"
#include "hh/families.hpp"
#include "hh/quad.hpp"
#include "hh/special.hpp"

using namespace hh;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what,
                detail.empty() ? "" : " | ", detail.c_str());
    if (!ok) ++failures;
}

double rnd(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Rect random_rect(std::mt19937& rng, double hi) {
    double a = rnd(rng, 0.0, 0.45 * hi);
    double b = rnd(rng, a + 0.1 * hi, hi);
    double c = rnd(rng, 0.0, 0.45 * hi);
    double d = rnd(rng, c + 0.1 * hi, hi);
    return {a, b, c, d};
}

Interval random_interval(std::mt19937& rng, double hi) {
    double lo = rnd(rng, 0.0, 0.45 * hi);
    return {lo, rnd(rng, lo + 0.1 * hi, hi)};
}

// Builds a family instance; families whose s-properties track their own
// parameter get `s` as that parameter, the rest draw uniformly.
ScalarFn make_instance(const FamilySpec& fam, double s, std::mt19937& rng) {
    bool param_s = false;
    for (const Claim& c : fam.claims)
        if (c.s_policy == SPolicy::ParamS) param_s = true;
    std::vector<double> p;
    for (std::size_t i = 0; i < fam.params.size(); ++i)
        p.push_back(param_s && i == 0 ? s : rnd(rng, fam.params[i].lo, fam.params[i].hi));
    return fam.make(p);
}

ScalarFn pick(const std::vector<const char*>& names, double s, std::mt19937& rng) {
    const FamilySpec* fam = find_family(names[rng() % names.size()]);
    return make_instance(*fam, s, rng);
}

InequalityReport run2(Ineq id, const ScalarFn& f, const ScalarFn& g, const Rect& r,
                      BoundParams bp = {}) {
    EvalInput in;
    in.f = &f;
    in.g = &g;
    in.rect = r;
    in.params = bp;
    return evaluate(id, in);
}

InequalityReport run1(Ineq id, const ScalarFn& f, const ScalarFn& g, Interval iv,
                      BoundParams bp = {}) {
    EvalInput in;
    in.f = &f;
    in.g = ineq_takes_g(id) ? &g : nullptr;
    in.interval = iv;
    in.params = bp;
    return evaluate(id, in);
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// Criterion 1: the s-parameterized two-function upper bound degenerates to the
// plain convex product bound at s = 1, coefficient-exactly and margin-exactly.
void criterion1(std::mt19937& rng) {
    std::string detail;
    bool ok = true;
    double cL = rhs_thm7({1, 0, 0}, 1.0);
    double cM = rhs_thm7({0, 1, 0}, 1.0);
    double cN = rhs_thm7({0, 0, 1}, 1.0);
    if (std::abs(cL - 1.0 / 9.0) > 1e-15 / 9.0 || std::abs(cM - 1.0 / 18.0) > 1e-15 / 18.0 ||
        std::abs(cN - 1.0 / 36.0) > 1e-15 / 36.0) {
        ok = false;
        detail = "coefficients at s=1 are not (1/9, 1/18, 1/36)";
    }
    const std::vector<const char*> fams = {"const",  "affine",   "square",
                                           "sumexp", "bilinear", "mixed"};
    for (int i = 0; ok && i < 20; ++i) {
        ScalarFn f = pick(fams, 1.0, rng);
        ScalarFn g = pick(fams, 1.0, rng);
        Rect r = random_rect(rng, 2.0);
        BoundParams bp;
        bp.s = 1.0;
        double m7 = run2(Ineq::Thm7, f, g, r, bp).margin;
        double m16 = run2(Ineq::Eq16, f, g, r).margin;
        if (!close_rel(m7, m16, 1e-12)) {
            ok = false;
            std::ostringstream os;
            os << "margins diverge on pair " << i << ": " << m7 << " vs " << m16;
            detail = os.str();
        }
    }
    report(1, "s=1 reduction of the one-parameter corner bound", ok, detail);
}

// Criterion 2: the (s1,s2) Beta-weighted bound reduces to the plain bound at
// s1=s2=1, and its Beta and Gamma formulations coincide across the parameter
// square.
void criterion2(std::mt19937& rng) {
    std::string detail;
    bool ok = true;
    CornerSums unitL{1, 0, 0}, unitM{0, 1, 0}, unitN{0, 0, 1};
    if (!close_rel(rhs_thm8(unitL, 1, 1), 1.0 / 9.0, 1e-12) ||
        !close_rel(rhs_thm8(unitM, 1, 1), 1.0 / 18.0, 1e-12) ||
        !close_rel(rhs_thm8(unitN, 1, 1), 1.0 / 36.0, 1e-12)) {
        ok = false;
        detail = "s1=s2=1 coefficients disagree with (1/9, 1/18, 1/36)";
    }
    const std::vector<const char*> fams = {"affine", "square", "sumexp", "bilinear"};
    for (int i = 0; ok && i < 5; ++i) {
        ScalarFn f = pick(fams, 1.0, rng);
        ScalarFn g = pick(fams, 1.0, rng);
        Rect r = random_rect(rng, 2.0);
        BoundParams bp;
        bp.s1 = bp.s2 = 1.0;
        if (!close_rel(run2(Ineq::Thm8, f, g, r, bp).margin, run2(Ineq::Eq16, f, g, r).margin,
                       1e-12)) {
            ok = false;
            detail = "s1=s2=1 margin differs from the plain bound";
        }
    }
    CornerSums cs{1.3, 0.7, 0.4};
    for (int i = 1; ok && i <= 10; ++i)
        for (int j = 1; ok && j <= 10; ++j) {
            double v1 = rhs_thm8(cs, i / 10.0, j / 10.0);
            double v2 = rhs_thm8_gamma(cs, i / 10.0, j / 10.0);
            if (!close_rel(v1, v2, 1e-12)) {
                ok = false;
                std::ostringstream os;
                os << "Beta and Gamma forms split at (" << i / 10.0 << ", " << j / 10.0 << ")";
                detail = os.str();
            }
        }
    report(2, "two-parameter bound reduction and Beta/Gamma agreement", ok, detail);
}

// Criterion 3: known equality cases hit their closed-form values.
void criterion3() {
    std::string detail;
    bool ok = true;

    {
        ScalarFn f = ScalarFn::parse("x+y");
        ScalarFn g = ScalarFn::parse("sqrt(x*y)");
        BoundParams bp;
        bp.s = 0.5;
        InequalityReport rep = run2(Ineq::Thm7, f, g, {0, 1, 0, 1}, bp);
        if (std::abs(rep.lhs - 8.0 / 15.0) > 1e-9 || std::abs(rep.margin) > 1e-8) {
            ok = false;
            detail = "(x+y, sqrt(xy)) at s=0.5 misses 8/15";
        }
    }
    if (ok) {
        ScalarFn f = ScalarFn::parse("(x*y)^0.5");
        ScalarFn g = ScalarFn::parse("(x*y)^(1/3)");
        BoundParams bp;
        bp.s1 = 0.5;
        bp.s2 = 1.0 / 3.0;
        InequalityReport rep = run2(Ineq::Thm8, f, g, {0, 1, 0, 1}, bp);
        double want = (6.0 / 11.0) * (6.0 / 11.0);
        if (std::abs(rep.lhs - want) > 1e-9 || std::abs(rep.rhs - want) > 1e-9 ||
            std::abs(rep.margin) > 1e-8) {
            ok = false;
            detail = "fractional-power pair misses (6/11)^2";
        }
    }
    if (ok) {
        ScalarFn c1 = ScalarFn::parse("1");
        InequalityReport rep = thm9_check(c1, c1, {0, 1, 0, 1}, 1.0, Thm9Variant::Proof, 1e-7,
                                          1e-9);
        if (std::abs(rep.margin) > 1e-12) {
            ok = false;
            detail = "midpoint bound is not tight for the unit pair";
        }
        rep = thm10_check(c1, c1, {0, 1, 0, 1}, 1e-7, 1e-9);
        if (std::abs(rep.margin) > 1e-9) {
            ok = false;
            detail = "kernel-weighted bound is not tight for the unit pair";
        }
    }
    report(3, "equality cases", ok, detail);
}

// Criterion 4: randomized instances with certified hypotheses satisfy every
// applicable inequality.
void criterion4(std::mt19937& rng) {
    const std::vector<const char*> conv = {"const",  "affine",   "square",
                                           "sumexp", "bilinear", "mixed"};
    const std::vector<const char*> joint = {"const", "affine", "square", "sumexp", "mixed"};
    const std::vector<const char*> sfam2 = {"const",    "affine",  "square",    "sumexp",
                                            "bilinear", "power-s", "sum-power", "mixed"};
    const std::vector<const char*> sfam1 = {"const",    "affine",    "square", "sumexp",
                                            "bilinear", "sum-power", "mixed"};

    CertifyOptions co;
    co.grid_n = 7;
    co.lambda_n = 5;

    auto cert2 = [&](const ScalarFn& f, const Rect& r, Property p, double s) {
        CertifyOptions o = co;
        o.s = s;
        return certify_2d(f, r, p, o).pass;
    };
    auto cert1 = [&](const ScalarFn& f, Interval iv, Property p, double s) {
        CertifyOptions o = co;
        o.s = s;
        return certify_1d(f, iv, p, o).pass;
    };
    auto nonneg2 = [](const ScalarFn& f, const Rect& r) {
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 6; ++j)
                if (f(r.a + (r.b - r.a) * i / 6.0, r.c + (r.d - r.c) * j / 6.0) < -1e-12)
                    return false;
        return true;
    };
    auto nonneg1 = [](const ScalarFn& f, Interval iv) {
        for (int i = 0; i <= 12; ++i)
            if (f.along(iv.lo + (iv.hi - iv.lo) * i / 12.0) < -1e-12) return false;
        return true;
    };

    const Ineq all[] = {Ineq::Eq11, Ineq::Eq12, Ineq::Eq13, Ineq::Eq14,  Ineq::Eq15, Ineq::Eq16,
                        Ineq::Eq17, Ineq::Thm7, Ineq::Thm8, Ineq::Thm9,  Ineq::Thm10};
    int checked = 0;
    int attempts = 0;
    bool ok = true;
    std::string detail;
    while (checked < 210 && attempts < 2000 && ok) {
        Ineq id = all[attempts % 11];
        ++attempts;
        BoundParams bp;
        bp.s = rnd(rng, 0.05, 0.95);
        bp.s1 = rnd(rng, 0.05, 0.95);
        bp.s2 = rnd(rng, 0.05, 0.95);
        InequalityReport rep;
        if (!ineq_is_2d(id)) {
            Interval iv = random_interval(rng, id == Ineq::Eq11 ? 2.0 : 1.0);
            if (id == Ineq::Eq11) {
                ScalarFn f = pick(conv, 1.0, rng);
                if (!cert1(f, iv, Property::Convex1D, 1.0)) continue;
                rep = run1(id, f, f, iv, bp);
            } else if (id == Ineq::Eq13) {
                ScalarFn f = pick(sfam1, bp.s1, rng);
                ScalarFn g = pick(sfam1, bp.s2, rng);
                if (!cert1(f, iv, Property::SConvex1D, bp.s1)) continue;
                if (!cert1(g, iv, Property::SConvex1D, bp.s2)) continue;
                rep = run1(id, f, g, iv, bp);
            } else {  // eq12, eq14: one convex factor, one s-convex factor
                ScalarFn f = pick(conv, 1.0, rng);
                ScalarFn g = pick(sfam1, bp.s, rng);
                if (!cert1(f, iv, Property::Convex1D, 1.0) || !nonneg1(f, iv)) continue;
                if (!cert1(g, iv, Property::SConvex1D, bp.s)) continue;
                rep = run1(id, f, g, iv, bp);
            }
        } else {
            bool s_case = id == Ineq::Thm7 || id == Ineq::Thm8 || id == Ineq::Thm9;
            Rect r = random_rect(rng, s_case ? 1.0 : 2.0);
            if (id == Ineq::Eq15) {
                ScalarFn f = pick(joint, 1.0, rng);
                if (!cert2(f, r, Property::ConvexOnDelta, 1.0)) continue;
                rep = run2(id, f, f, r, bp);
            } else if (s_case) {
                double sf = id == Ineq::Thm8 ? bp.s1 : bp.s;
                double sg = id == Ineq::Thm8 ? bp.s2 : bp.s;
                ScalarFn f = pick(sfam2, sf, rng);
                ScalarFn g = pick(sfam2, sg, rng);
                if (!cert2(f, r, Property::CoordSConvex, sf)) continue;
                if (!cert2(g, r, Property::CoordSConvex, sg)) continue;
                rep = run2(id, f, g, r, bp);
            } else {  // eq16, eq17, thm10
                ScalarFn f = pick(conv, 1.0, rng);
                ScalarFn g = pick(conv, 1.0, rng);
                if (!cert2(f, r, Property::CoordConvex, 1.0) || !nonneg2(f, r)) continue;
                if (!cert2(g, r, Property::CoordConvex, 1.0) || !nonneg2(g, r)) continue;
                rep = run2(id, f, g, r, bp);
            }
        }
        ++checked;
        if (!rep.satisfied) {
            ok = false;
            std::ostringstream os;
            os << rep.inequality << " violated, margin " << rep.margin << " (instance "
               << checked << ")";
            detail = os.str();
        }
    }
    if (ok && checked < 200) {
        ok = false;
        detail = "only " + std::to_string(checked) + " certified instances";
    }
    if (ok) detail = std::to_string(checked) + " certified instances, all satisfied";
    report(4, "randomized certified-hypothesis suite", ok, detail);
}

// Criterion 5: the separating examples behave as claimed, with a verifiable
// counterexample for the failing property.
void criterion5() {
    std::string detail;
    bool ok = true;
    CertifyOptions opt;
    ScalarFn xy = ScalarFn::parse("x*y");
    if (!certify_2d(xy, {0, 1, 0, 1}, Property::CoordConvex, opt).pass) {
        ok = false;
        detail = "x*y failed the coordinate-wise check";
    }
    if (ok) {
        Certificate c = certify_2d(xy, {0, 1, 0, 1}, Property::ConvexOnDelta, opt);
        if (c.pass || !c.witness) {
            ok = false;
            detail = "x*y did not produce a joint-convexity counterexample";
        } else {
            const Witness& w = *c.witness;
            double lam = w.lambdas[0];
            auto& p = w.points[0];
            auto& q = w.points[1];
            double lhs = xy(lam * p[0] + (1 - lam) * q[0], lam * p[1] + (1 - lam) * q[1]);
            double rhs = lam * xy(p[0], p[1]) + (1 - lam) * xy(q[0], q[1]);
            if (lhs != w.lhs || !(lhs > rhs + opt.tol)) {
                ok = false;
                detail = "witness does not reproduce the violation";
            }
        }
    }
    if (ok) {
        CertifyOptions so;
        so.s = 0.5;
        if (!certify_2d(ScalarFn::parse("(x*y)^0.5"), {0, 1, 0, 1}, Property::CoordSConvex, so)
                 .pass) {
            ok = false;
            detail = "(x*y)^0.5 failed the coordinate-wise s=0.5 check";
        }
    }
    report(5, "coordinate-wise vs joint convexity separation", ok, detail);
}

// Criterion 6: the two published coefficient variants of the midpoint bound
// coincide at s=1, diverge by the predicted amount at s=0.5, and both values
// are exposed in the report.
void criterion6() {
    std::string detail;
    bool ok = true;
    ScalarFn f = ScalarFn::parse("x+y+1");
    ScalarFn g = ScalarFn::parse("x+1");
    Rect r{0, 1, 0, 1};

    InequalityReport rep = thm9_check(f, g, r, 1.0, Thm9Variant::Proof, 1e-7, 1e-9);
    if (!rep.params.count("rhs_proof") || !rep.params.count("rhs_statement")) {
        ok = false;
        detail = "report does not expose both variant values";
    } else if (!close_rel(rep.params["rhs_proof"], rep.params["rhs_statement"], 1e-12)) {
        ok = false;
        detail = "variants disagree at s=1";
    }
    if (ok) {
        rep = thm9_check(f, g, r, 0.5, Thm9Variant::Proof, 1e-7, 1e-9);
        double L = corner_sums(f, g, r).L;
        double want = std::abs(5.0 / (1.5 * 6.25) - 8.0 / (2.25 * 6.25)) * L;
        double got = std::abs(rep.params["rhs_proof"] - rep.params["rhs_statement"]);
        if (L == 0.0 || !close_rel(got, want, 1e-12)) {
            ok = false;
            std::ostringstream os;
            os << "variant gap at s=0.5 is " << got << ", expected " << want;
            detail = os.str();
        }
    }
    report(6, "midpoint-bound coefficient variants", ok, detail);
}

// Criterion 7: quadrature agrees with the midpoint-rule oracle on every
// catalog integrand, and the special functions satisfy their identities.
void criterion7() {
    std::string detail;
    bool ok = true;
    Rect unit{0, 1, 0, 1};
    for (const FamilySpec& fam : catalog()) {
        std::vector<double> p;
        for (const auto& d : fam.params) p.push_back(0.5 * (d.lo + d.hi));
        ScalarFn f = fam.make(p);
        double q = integrate_2d(f, unit, 1e-9).value;
        double m = riemann_2d([&](double x, double y) { return f(x, y); }, unit, 1024);
        if (std::abs(q - m) > 1e-5 * std::max(1.0, std::abs(q))) {
            ok = false;
            detail = "quadrature vs midpoint mismatch on family " + fam.name;
        }
    }
    for (double x : {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.5, 7.0, 30.0}) {
        double lhs = log_gamma(x + 1.0);
        double rhs = log_gamma(x) + std::log(x);
        if (ok && std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) {
            ok = false;
            detail = "log-Gamma recurrence fails at x = " + std::to_string(x);
        }
    }
    for (double p : {0.3, 0.7, 1.5, 3.2})
        for (double q : {0.4, 1.0, 2.6}) {
            if (ok && !close_rel(beta(p, q), beta(q, p), 1e-12)) {
                ok = false;
                detail = "Beta symmetry fails";
            }
        }
    report(7, "quadrature oracle and special-function identities", ok, detail);
}

// Criterion 8: with one factor identically 1 and s = 1, the midpoint bound
// collapses to 4g(mid) - mean <= (3/4) * (corner sum of g), with equality for
// the constant function.
void criterion8() {
    std::string detail;
    bool ok = true;
    ScalarFn unit_fn = ScalarFn::parse("1");
    const char* exprs[] = {"x^2+y^2", "exp(x)+exp(y)", "x+2*y+0.5", "x*y+1"};
    Rect rects[] = {{0, 1, 0, 1}, {0.2, 1.7, 0.1, 1.4}};
    CertifyOptions co;
    co.grid_n = 9;
    co.lambda_n = 5;
    for (const char* e : exprs)
        for (const Rect& r : rects) {
            ScalarFn g = ScalarFn::parse(e);
            if (!certify_2d(g, r, Property::CoordConvex, co).pass) {
                ok = false;
                detail = std::string("hypothesis certification failed for ") + e;
                continue;
            }
            double mean = product_mean_2d(g, unit_fn, r, 1e-9);
            double csum = g(r.a, r.c) + g(r.a, r.d) + g(r.b, r.c) + g(r.b, r.d);
            double lhs = 4.0 * g(r.mid_x(), r.mid_y()) - mean;
            if (ok && lhs > 0.75 * csum + 1e-9 * std::max(1.0, std::abs(csum))) {
                ok = false;
                detail = std::string("bound violated for ") + e;
            }
        }
    if (ok) {
        // g identically 1: lhs = 3, rhs = 3
        Rect r{0, 1, 0, 1};
        double mean = product_mean_2d(unit_fn, unit_fn, r, 1e-9);
        double lhs = 4.0 - mean;
        if (std::abs(lhs - 3.0) > 1e-12) {
            ok = false;
            detail = "equality case for the constant function missed";
        }
    }
    report(8, "degenerate one-factor midpoint bound", ok, detail);
}

}  // namespace

int main() {
    std::mt19937 rng(20260823u);
    criterion1(rng);
    criterion2(rng);
    criterion3();
    criterion4(rng);
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    return failures == 0 ? 0 : 1;
}
