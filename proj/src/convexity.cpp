#include "hh/convexity.hpp"

#include <cmath>
#include <stdexcept>

namespace hh {

namespace {

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

std::vector<double> lambda_grid(int lambda_n) {
    std::vector<double> l(lambda_n);
    for (int k = 1; k <= lambda_n; ++k) l[k - 1] = static_cast<double>(k) / (lambda_n + 1);
    return l;
}

void check_options(const CertifyOptions& opt, bool uses_s) {
    if (opt.grid_n < 2 || opt.lambda_n < 1 || !(opt.tol > 0.0))
        throw std::invalid_argument("certify: bad grid/tolerance options");
    if (uses_s && !(opt.s > 0.0 && opt.s <= 1.0))
        throw std::invalid_argument("certify: s must lie in (0,1]");
}

bool violates(double lhs, double rhs, double tol) {
    return lhs > rhs + tol * std::max(1.0, std::abs(rhs));
}

// Remaps a 1-D slice witness back onto the plane.
Witness lift_witness(const Witness& w, Axis axis, double fixed) {
    Witness out = w;
    out.points.clear();
    for (const auto& p : w.points) {
        if (axis == Axis::FixY)
            out.points.push_back({p[0], fixed});
        else
            out.points.push_back({fixed, p[0]});
    }
    return out;
}

}  // namespace

const char* property_name(Property p) {
    switch (p) {
        case Property::Convex1D: return "convex-1d";
        case Property::SConvex1D: return "sconvex-1d";
        case Property::ConvexOnDelta: return "convex-on-delta";
        case Property::CoordConvex: return "coord-convex";
        case Property::SConvexOnDelta: return "sconvex-on-delta";
        case Property::CoordSConvex: return "coord-sconvex";
    }
    return "?";
}

std::optional<Property> parse_property(std::string_view name) {
    for (Property p : {Property::Convex1D, Property::SConvex1D, Property::ConvexOnDelta,
                       Property::CoordConvex, Property::SConvexOnDelta, Property::CoordSConvex})
        if (name == property_name(p)) return p;
    return std::nullopt;
}

bool property_uses_s(Property p) {
    return p == Property::SConvex1D || p == Property::SConvexOnDelta ||
           p == Property::CoordSConvex;
}

Certificate certify_1d(const ScalarFn& f, Interval iv, Property prop, const CertifyOptions& opt) {
    if (prop != Property::Convex1D && prop != Property::SConvex1D)
        throw std::invalid_argument("certify_1d handles convex-1d and sconvex-1d only");
    validate(iv);
    bool s_prop = prop == Property::SConvex1D;
    check_options(opt, s_prop);
    if (s_prop && iv.lo < 0.0)
        throw DomainError("sconvex-1d requires a domain inside [0, inf)");

    std::vector<double> grid = uniform_grid(iv.lo, iv.hi, opt.grid_n);
    std::vector<double> lams = lambda_grid(opt.lambda_n);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f.along(grid[i]);

    long checked = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            for (double lam : lams) {
                double w1 = s_prop ? std::pow(lam, opt.s) : lam;
                double w2 = s_prop ? std::pow(1.0 - lam, opt.s) : 1.0 - lam;
                double z = lam * grid[i] + (1.0 - lam) * grid[j];
                double lhs = f.along(z);
                double rhs = w1 * vals[i] + w2 * vals[j];
                ++checked;
                if (violates(lhs, rhs, opt.tol)) {
                    Witness w{{{grid[i]}, {grid[j]}}, {lam}, lhs, rhs, lhs - rhs};
                    return {false, w, checked};
                }
            }
        }
    }
    return {true, std::nullopt, checked};
}

namespace {

Certificate certify_joint(const ScalarFn& f, const Rect& r, bool s_prop,
                          const CertifyOptions& opt) {
    std::vector<double> gx = uniform_grid(r.a, r.b, opt.grid_n);
    std::vector<double> gy = uniform_grid(r.c, r.d, opt.grid_n);
    std::vector<double> lams = lambda_grid(opt.lambda_n);
    const int n = opt.grid_n;
    std::vector<double> vals(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vals[i * n + j] = f(gx[i], gy[j]);

    long checked = 0;
    const int total = n * n;
    for (int p = 0; p < total; ++p) {
        double px = gx[p / n], py = gy[p % n];
        for (int q = p + 1; q < total; ++q) {
            double qx = gx[q / n], qy = gy[q % n];
            for (double lam : lams) {
                double w1 = s_prop ? std::pow(lam, opt.s) : lam;
                double w2 = s_prop ? std::pow(1.0 - lam, opt.s) : 1.0 - lam;
                double zx = lam * px + (1.0 - lam) * qx;
                double zy = lam * py + (1.0 - lam) * qy;
                double lhs = f(zx, zy);
                double rhs = w1 * vals[p] + w2 * vals[q];
                ++checked;
                if (violates(lhs, rhs, opt.tol)) {
                    Witness w{{{px, py}, {qx, qy}}, {lam}, lhs, rhs, lhs - rhs};
                    return {false, w, checked};
                }
            }
        }
    }
    return {true, std::nullopt, checked};
}

// Four-term co-ordinated convexity inequality over sampled abscissae
// x, y on the first axis, u, w on the second, and a (t, s) weight grid.
Certificate certify_coord_convex(const ScalarFn& f, const Rect& r, const CertifyOptions& opt) {
    std::vector<double> gx = uniform_grid(r.a, r.b, opt.grid_n);
    std::vector<double> gy = uniform_grid(r.c, r.d, opt.grid_n);
    std::vector<double> lams = lambda_grid(opt.lambda_n);
    const int n = opt.grid_n;
    std::vector<double> vals(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vals[i * n + j] = f(gx[i], gy[j]);

    long checked = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = k; l < n; ++l) {
                    for (double t : lams) {
                        double zx = t * gx[i] + (1.0 - t) * gx[j];
                        for (double sg : lams) {
                            double zy = sg * gy[k] + (1.0 - sg) * gy[l];
                            double lhs = f(zx, zy);
                            double rhs = t * sg * vals[i * n + k] +
                                         t * (1.0 - sg) * vals[i * n + l] +
                                         sg * (1.0 - t) * vals[j * n + k] +
                                         (1.0 - t) * (1.0 - sg) * vals[j * n + l];
                            ++checked;
                            if (violates(lhs, rhs, opt.tol)) {
                                Witness w{{{gx[i], gy[k]},
                                           {gx[i], gy[l]},
                                           {gx[j], gy[k]},
                                           {gx[j], gy[l]}},
                                          {t, sg},
                                          lhs,
                                          rhs,
                                          lhs - rhs};
                                return {false, w, checked};
                            }
                        }
                    }
                }
            }
        }
    }
    return {true, std::nullopt, checked};
}

// Co-ordinated s-convexity: every partial mapping must be s-convex, checked
// through certify_1d on the grid lines.
Certificate certify_coord_sconvex(const ScalarFn& f, const Rect& r, const CertifyOptions& opt) {
    std::vector<double> gx = uniform_grid(r.a, r.b, opt.grid_n);
    std::vector<double> gy = uniform_grid(r.c, r.d, opt.grid_n);
    long checked = 0;
    for (double y0 : gy) {
        Certificate c = certify_1d(f.slice(Axis::FixY, y0), {r.a, r.b}, Property::SConvex1D, opt);
        checked += c.samples_checked;
        if (!c.pass) return {false, lift_witness(*c.witness, Axis::FixY, y0), checked};
    }
    for (double x0 : gx) {
        Certificate c = certify_1d(f.slice(Axis::FixX, x0), {r.c, r.d}, Property::SConvex1D, opt);
        checked += c.samples_checked;
        if (!c.pass) return {false, lift_witness(*c.witness, Axis::FixX, x0), checked};
    }
    return {true, std::nullopt, checked};
}

}  // namespace

Certificate certify_2d(const ScalarFn& f, const Rect& r, Property prop,
                       const CertifyOptions& opt) {
    validate(r);
    bool s_prop = property_uses_s(prop);
    check_options(opt, s_prop);
    if (s_prop && (r.a < 0.0 || r.c < 0.0))
        throw DomainError("s-convexity properties require a domain inside [0, inf)^2");
    switch (prop) {
        case Property::ConvexOnDelta: return certify_joint(f, r, false, opt);
        case Property::SConvexOnDelta: return certify_joint(f, r, true, opt);
        case Property::CoordConvex: return certify_coord_convex(f, r, opt);
        case Property::CoordSConvex: return certify_coord_sconvex(f, r, opt);
        default:
            throw std::invalid_argument("certify_2d handles the 2-D properties only");
    }
}

}  // namespace hh
