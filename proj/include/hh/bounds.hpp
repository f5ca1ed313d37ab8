#pragma once

#include <map>
#include <optional>
#include <string>

#include "hh/expr.hpp"
#include "hh/quad.hpp"

namespace hh {

/// Bare corner-product sums over the four corners of a rectangle:
/// L has the 4 same-corner products, M the 8 same-row/same-column mixed
/// products, N the 4 fully crossed products. Symmetric in f and g.
struct CornerSums {
    double L;
    double M;
    double N;
};

enum class Thm9Variant { Proof, Statement };

struct BoundParams {
    double s = 1.0;
    double s1 = 1.0;
    double s2 = 1.0;
    Thm9Variant variant = Thm9Variant::Proof;
};

struct InequalityReport {
    std::string inequality;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs (smallest link margin for chain inequalities)
    bool satisfied = false;
    double quad_error = 0.0;
    double tol = 1e-7;
    std::map<std::string, double> params;  // echoed parameters and auxiliary values
    std::optional<std::string> variant;
};

enum class Ineq { Eq11, Eq12, Eq13, Eq14, Eq15, Eq16, Eq17, Thm7, Thm8, Thm9, Thm10 };

const char* ineq_name(Ineq id);
std::optional<Ineq> parse_ineq(std::string_view name);
bool ineq_is_2d(Ineq id);
bool ineq_takes_g(Ineq id);

CornerSums corner_sums(const ScalarFn& f, const ScalarFn& g, const Rect& r);

/// Mean of f*g over the rectangle; quadrature error written to *err if given.
double product_mean_2d(const ScalarFn& f, const ScalarFn& g, const Rect& r, double tol,
                       double* err = nullptr);
double mean_product_1d(const ScalarFn& F, const ScalarFn& G, Interval iv, double tol,
                       double* err = nullptr);

double rhs_thm7(const CornerSums& cs, double s);
double rhs_thm8(const CornerSums& cs, double s1, double s2);        // Beta form
double rhs_thm8_gamma(const CornerSums& cs, double s1, double s2);  // Gamma form

double rhs_eq12(double Fa, double Fb, double Ga, double Gb, double s);
double rhs_eq13(double Fa, double Fb, double Ga, double Gb, double s1, double s2);

struct EvalInput {
    const ScalarFn* f = nullptr;
    const ScalarFn* g = nullptr;
    std::optional<Rect> rect;
    std::optional<Interval> interval;
    BoundParams params;
    double tol = 1e-7;       // report tolerance
    double quad_tol = 1e-9;  // quadrature tolerance
};

InequalityReport thm9_check(const ScalarFn& f, const ScalarFn& g, const Rect& r, double s,
                            Thm9Variant variant, double tol, double quad_tol);
InequalityReport thm10_check(const ScalarFn& f, const ScalarFn& g, const Rect& r, double tol,
                             double quad_tol);
InequalityReport eq14_check(const ScalarFn& F, const ScalarFn& G, Interval iv, double s,
                            double tol, double quad_tol);

/// Evaluate both sides of the selected inequality and report the margin.
/// Never certifies the convexity hypotheses; that is a separate step.
InequalityReport evaluate(Ineq id, const EvalInput& in);

}  // namespace hh
