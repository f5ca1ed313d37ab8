#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hh/convexity.hpp"
#include "hh/expr.hpp"

namespace hh {

/// How a declared s-property relates to the family parameters.
enum class SPolicy {
    NotApplicable,  // plain convexity property
    AnyS,           // holds for every s in (0,1]
    ParamS,         // holds exactly for the family's own s parameter
};

struct Claim {
    Property prop;
    bool holds;  // declared non-properties (holds=false) must fail the certifier
    SPolicy s_policy = SPolicy::NotApplicable;
};

struct ParamDesc {
    std::string name;
    double lo;
    double hi;
};

/// A closed-form builtin function family with its declared convexity
/// properties on [0,1]^2 (convexity-only claims extend to [0,2]^2).
struct FamilySpec {
    std::string name;
    std::string description;
    std::vector<ParamDesc> params;
    std::function<ScalarFn(std::span<const double>)> make;
    std::vector<Claim> claims;

    const Claim* claim_for(Property p) const;
};

const std::vector<FamilySpec>& catalog();
const FamilySpec* find_family(std::string_view name);

/// Throws std::invalid_argument on unknown name or out-of-range parameters.
ScalarFn instantiate(std::string_view name, std::span<const double> params);

}  // namespace hh
