#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/expr.hpp"
#include "hh/quad.hpp"

namespace hh {

/// The five convexity hypotheses checked by sampling. Falsification only: a
/// pass means "no violation found at the sampled resolution", never a proof.
enum class Property {
    Convex1D,
    SConvex1D,
    ConvexOnDelta,
    CoordConvex,
    SConvexOnDelta,
    CoordSConvex,
};

const char* property_name(Property p);
std::optional<Property> parse_property(std::string_view name);
bool property_uses_s(Property p);

struct Witness {
    std::vector<std::vector<double>> points;  // 1-D or 2-D sample points
    std::vector<double> lambdas;              // lambda, or (t, s) for the four-term check
    double lhs;
    double rhs;
    double violation;  // lhs - rhs
};

struct Certificate {
    bool pass;
    std::optional<Witness> witness;
    long samples_checked;
};

struct CertifyOptions {
    int grid_n = 17;
    int lambda_n = 9;  // interior lambda values k/(lambda_n+1)
    double tol = 1e-9;
    double s = 1.0;  // parameter of the s-properties
};

/// Check the defining 1-D inequality over all grid pairs and interior lambda
/// values. `f` is evaluated along its free variable (see ScalarFn::along).
Certificate certify_1d(const ScalarFn& f, Interval iv, Property prop, const CertifyOptions& opt);

Certificate certify_2d(const ScalarFn& f, const Rect& r, Property prop, const CertifyOptions& opt);

}  // namespace hh
