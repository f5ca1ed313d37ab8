#include "hh/families.hpp"

#include <stdexcept>

namespace hh {

namespace {

NodePtr const_node(double v) { return v < 0.0 ? neg(num(-v)) : num(v); }

std::vector<FamilySpec> build_catalog() {
    using BO = BinOp;
    std::vector<FamilySpec> cat;

    // Claims shared by the nonnegative convex families: ordinary convexity
    // everywhere, and s-convexity for every s in (0,1] on [0,inf)^2 (the
    // s-weights only enlarge the right-hand side for nonnegative values).
    std::vector<Claim> all_props = {
        {Property::CoordConvex, true},
        {Property::ConvexOnDelta, true},
        {Property::CoordSConvex, true, SPolicy::AnyS},
        {Property::SConvexOnDelta, true, SPolicy::AnyS},
    };

    cat.push_back({"const",
                   "c",
                   {{"c", 0.0, 5.0}},
                   [](std::span<const double> p) { return ScalarFn(const_node(p[0])); },
                   all_props});

    cat.push_back({"affine",
                   "alpha*x + beta*y + gamma",
                   {{"alpha", 0.0, 2.0}, {"beta", 0.0, 2.0}, {"gamma", 0.0, 2.0}},
                   [](std::span<const double> p) {
                       return ScalarFn(bin(
                           BO::Add,
                           bin(BO::Add, bin(BO::Mul, const_node(p[0]), var('x')),
                               bin(BO::Mul, const_node(p[1]), var('y'))),
                           const_node(p[2])));
                   },
                   all_props});

    cat.push_back({"square",
                   "x^2 + y^2",
                   {},
                   [](std::span<const double>) {
                       return ScalarFn(bin(BO::Add, bin(BO::Pow, var('x'), num(2)),
                                           bin(BO::Pow, var('y'), num(2))));
                   },
                   all_props});

    cat.push_back({"sumexp",
                   "exp(x) + exp(y)",
                   {},
                   [](std::span<const double>) {
                       return ScalarFn(bin(BO::Add, call(FnId::Exp, {var('x')}),
                                           call(FnId::Exp, {var('y')})));
                   },
                   all_props});

    cat.push_back({"mixed",
                   "x + y",
                   {},
                   [](std::span<const double>) {
                       return ScalarFn(bin(BO::Add, var('x'), var('y')));
                   },
                   all_props});

    // Coordinate-wise convex but not jointly convex (its slices are
    // nonnegative linear maps, the joint inequality fails across the
    // diagonal).
    cat.push_back({"bilinear",
                   "x*y",
                   {},
                   [](std::span<const double>) {
                       return ScalarFn(bin(BO::Mul, var('x'), var('y')));
                   },
                   {
                       {Property::CoordConvex, true},
                       {Property::CoordSConvex, true, SPolicy::AnyS},
                       {Property::ConvexOnDelta, false},
                       {Property::SConvexOnDelta, false, SPolicy::AnyS},
                   }});

    // (x*y)^s: slices are nonnegative multiples of t^s, which is s-convex in
    // the second sense but concave, so ordinary coordinate convexity fails.
    cat.push_back({"power-s",
                   "(x*y)^s",
                   {{"s", 0.05, 0.95}},
                   [](std::span<const double> p) {
                       return ScalarFn(
                           bin(BO::Pow, bin(BO::Mul, var('x'), var('y')), num(p[0])));
                   },
                   {
                       {Property::CoordSConvex, true, SPolicy::ParamS},
                       {Property::CoordConvex, false},
                       {Property::ConvexOnDelta, false},
                       {Property::SConvexOnDelta, false, SPolicy::ParamS},
                   }});

    cat.push_back({"sum-power",
                   "x^s + y^s",
                   {{"s", 0.05, 0.95}},
                   [](std::span<const double> p) {
                       return ScalarFn(bin(BO::Add, bin(BO::Pow, var('x'), num(p[0])),
                                           bin(BO::Pow, var('y'), num(p[0]))));
                   },
                   {
                       {Property::CoordSConvex, true, SPolicy::ParamS},
                       {Property::SConvexOnDelta, true, SPolicy::ParamS},
                       {Property::CoordConvex, false},
                   }});

    return cat;
}

}  // namespace

const Claim* FamilySpec::claim_for(Property p) const {
    for (const Claim& c : claims)
        if (c.prop == p) return &c;
    return nullptr;
}

const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> cat = build_catalog();
    return cat;
}

const FamilySpec* find_family(std::string_view name) {
    for (const FamilySpec& f : catalog())
        if (f.name == name) return &f;
    return nullptr;
}

ScalarFn instantiate(std::string_view name, std::span<const double> params) {
    const FamilySpec* spec = find_family(name);
    if (!spec) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
    if (params.size() != spec->params.size())
        throw std::invalid_argument("family '" + spec->name + "' takes " +
                                    std::to_string(spec->params.size()) + " parameter(s)");
    for (std::size_t i = 0; i < params.size(); ++i) {
        const ParamDesc& d = spec->params[i];
        if (!(params[i] >= d.lo && params[i] <= d.hi))
            throw std::invalid_argument("parameter '" + d.name + "' of family '" + spec->name +
                                        "' out of range");
    }
    return spec->make(params);
}

}  // namespace hh
