#pragma once

#include <functional>

#include "hh/errors.hpp"
#include "hh/expr.hpp"

namespace hh {

struct Interval {
    double lo;
    double hi;
};

/// The bidimensional interval [a,b] x [c,d].
struct Rect {
    double a;
    double b;
    double c;
    double d;

    double mid_x() const { return 0.5 * (a + b); }
    double mid_y() const { return 0.5 * (c + d); }
    double area() const { return (b - a) * (d - c); }
};

void validate(Interval iv);
void validate(Rect r);

struct QuadResult {
    double value;
    double err_estimate;  // accumulated coarse-vs-fine deviation of accepted panels
    long panels;
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

/// Single-panel Gauss-Legendre rule of order 16 (exact for degree <= 31).
double gauss16(const Fn1& f, double lo, double hi);
double gauss16x16(const Fn2& f, const Rect& r);

/// Composite Gauss-Legendre with adaptive panel bisection. `tol` is relative
/// to max(1, |value|). Panels that fail to settle within 20 bisection levels
/// raise NumericalError.
QuadResult integrate_1d(const Fn1& f, Interval iv, double tol);
QuadResult integrate_2d(const Fn2& f, const Rect& r, double tol);

QuadResult integrate_1d(const ScalarFn& f, Interval iv, double tol);
QuadResult integrate_2d(const ScalarFn& f, const Rect& r, double tol);

/// Midpoint-rule sum on an n x n uniform grid. Cross-validation oracle only.
double riemann_2d(const Fn2& f, const Rect& r, int n);
double riemann_2d(const ScalarFn& f, const Rect& r, int n);

}  // namespace hh
