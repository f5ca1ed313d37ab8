#include "hh/special.hpp"

#include <cmath>

namespace hh {

namespace {

// Godfrey's coefficients for g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("log_gamma requires a positive finite argument");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double g = 7.0;
    double t = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (t + i);
    double base = t + g + 0.5;
    return kHalfLogTwoPi + (t + 0.5) * std::log(base) - base + std::log(a);
}

double beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
        throw DomainError("beta requires positive finite arguments");
    // symmetric in (p, q): the sum below commutes
    return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

}  // namespace hh
