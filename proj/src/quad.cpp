#include "hh/quad.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace hh {

namespace {

constexpr int kOrder = 16;
constexpr long kMaxPanels = 40000;

struct Rule {
    std::array<double, kOrder> node;    // on [-1, 1]
    std::array<double, kOrder> weight;
};

// Nodes are roots of the Legendre polynomial P16, found by Newton iteration
// from the Chebyshev initial guess (the usual gauleg construction).
Rule make_rule() {
    Rule r;
    const double pi = 3.14159265358979323846;
    const int n = kOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) {
                // one polishing step after convergence
                p0 = 1.0;
                p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                break;
            }
        }
        r.node[i] = -z;
        r.node[n - 1 - i] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        r.weight[i] = w;
        r.weight[n - 1 - i] = w;
    }
    return r;
}

const Rule& rule() {
    static const Rule r = make_rule();
    return r;
}

// A panel carries the bisected value and |fine - coarse| as its error
// estimate; refinement always splits the worst panel (global adaptivity),
// which handles integrable endpoint singularities like x^s.
struct Panel {
    double lo, hi, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const Fn1& f, double lo, double hi) {
    double coarse = gauss16(f, lo, hi);
    double mid = 0.5 * (lo + hi);
    double fine = gauss16(f, lo, mid) + gauss16(f, mid, hi);
    if (!std::isfinite(fine) || !std::isfinite(coarse))
        throw NumericalError("integrate_1d: integrand produced a non-finite value");
    return {lo, hi, fine, std::abs(fine - coarse)};
}

}  // namespace

void validate(Interval iv) {
    if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
        throw std::invalid_argument("interval requires finite lo < hi");
}

void validate(Rect r) {
    if (!(r.a < r.b) || !(r.c < r.d) || !std::isfinite(r.a) || !std::isfinite(r.b) ||
        !std::isfinite(r.c) || !std::isfinite(r.d))
        throw std::invalid_argument("rect requires finite a < b and c < d");
}

double gauss16(const Fn1& f, double lo, double hi) {
    const Rule& r = rule();
    double half = 0.5 * (hi - lo);
    double mid = 0.5 * (lo + hi);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) sum += r.weight[i] * f(mid + half * r.node[i]);
    return half * sum;
}

double gauss16x16(const Fn2& f, const Rect& rc) {
    const Rule& r = rule();
    double hx = 0.5 * (rc.b - rc.a), mx = rc.mid_x();
    double hy = 0.5 * (rc.d - rc.c), my = rc.mid_y();
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) {
        double x = mx + hx * r.node[i];
        double row = 0.0;
        for (int j = 0; j < kOrder; ++j) row += r.weight[j] * f(x, my + hy * r.node[j]);
        sum += r.weight[i] * row;
    }
    return hx * hy * sum;
}

QuadResult integrate_1d(const Fn1& f, Interval iv, double tol) {
    validate(iv);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    std::priority_queue<Panel> queue;
    Panel whole = eval_panel(f, iv.lo, iv.hi);
    double total = whole.value;
    double toterr = whole.err;
    long panels = 1;
    queue.push(whole);
    while (toterr > tol * std::max(1.0, std::abs(total))) {
        if (panels >= kMaxPanels)
            throw NumericalError("integrate_1d: no convergence within the panel budget");
        Panel p = queue.top();
        queue.pop();
        double mid = 0.5 * (p.lo + p.hi);
        if (!(p.lo < mid && mid < p.hi))
            throw NumericalError("integrate_1d: subinterval too small to subdivide");
        Panel a = eval_panel(f, p.lo, mid);
        Panel b = eval_panel(f, mid, p.hi);
        total += a.value + b.value - p.value;
        toterr += a.err + b.err - p.err;
        queue.push(a);
        queue.push(b);
        ++panels;
    }
    return {total, std::max(toterr, 0.0), panels};
}

// Iterated 1-D integration. Line singularities along the rectangle edges
// (the x^s / y^s integrand class) stay one-dimensional in each pass, which
// isotropic panel subdivision cannot afford.
QuadResult integrate_2d(const Fn2& f, const Rect& r, double tol) {
    validate(r);
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    double inner_tol = 0.25 * tol;
    double max_inner_err = 0.0;
    long inner_panels = 0;
    Fn1 g = [&](double x) {
        QuadResult q =
            integrate_1d([&](double y) { return f(x, y); }, {r.c, r.d}, inner_tol);
        max_inner_err = std::max(max_inner_err, q.err_estimate);
        inner_panels += q.panels;
        return q.value;
    };
    QuadResult outer = integrate_1d(g, {r.a, r.b}, tol);
    outer.err_estimate += (r.b - r.a) * max_inner_err;
    outer.panels += inner_panels;
    return outer;
}

QuadResult integrate_1d(const ScalarFn& f, Interval iv, double tol) {
    return integrate_1d([&f](double t) { return f.along(t); }, iv, tol);
}

QuadResult integrate_2d(const ScalarFn& f, const Rect& r, double tol) {
    return integrate_2d([&f](double x, double y) { return f(x, y); }, r, tol);
}

double riemann_2d(const Fn2& f, const Rect& r, int n) {
    validate(r);
    if (n < 1) throw std::invalid_argument("riemann_2d requires n >= 1");
    double hx = (r.b - r.a) / n;
    double hy = (r.d - r.c) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = r.a + (i + 0.5) * hx;
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += f(x, r.c + (j + 0.5) * hy);
        sum += row;
    }
    return sum * hx * hy;
}

double riemann_2d(const ScalarFn& f, const Rect& r, int n) {
    return riemann_2d([&f](double x, double y) { return f(x, y); }, r, n);
}

}  // namespace hh
