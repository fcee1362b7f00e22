#include "catkit/model.hpp"

#include "catkit/error.hpp"
#include "catkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace catkit {

Curvature::Curvature(double kappa) : kappa_(kappa) {
    if (!(kappa <= 0.0) || !std::isfinite(kappa)) {
        throw Error(ErrorKind::Domain,
                    "curvature must be a finite value <= 0, got " + std::to_string(kappa));
    }
}

double Curvature::scale() const { return std::sqrt(-kappa_); }

ModelPoint ModelPoint::euclidean(double x, double y) {
    return ModelPoint{Curvature::flat(), {x, y, 0.0}};
}

ModelPoint ModelPoint::hyperboloid(Curvature kappa, double x1, double x2) {
    if (kappa.is_flat()) {
        throw Error(ErrorKind::Domain, "hyperboloid point requires kappa < 0");
    }
    return ModelPoint{kappa, {std::sqrt(1.0 + x1 * x1 + x2 * x2), x1, x2}};
}

ModelPoint ModelPoint::polar(Curvature kappa, double radius, double theta) {
    if (kappa.is_flat()) {
        return euclidean(radius * std::cos(theta), radius * std::sin(theta));
    }
    const double sh = std::sinh(radius);
    return hyperboloid(kappa, sh * std::cos(theta), sh * std::sin(theta));
}

ModelPoint ModelPoint::origin(Curvature kappa) {
    return kappa.is_flat() ? euclidean(0.0, 0.0) : ModelPoint{kappa, {1.0, 0.0, 0.0}};
}

ModelPoint ModelPoint::normalized() const {
    if (kappa.is_flat()) {
        return ModelPoint{kappa, {coords[0], coords[1], 0.0}};
    }
    return hyperboloid(kappa, coords[1], coords[2]);
}

double minkowski(const std::array<double, 3>& u, const std::array<double, 3>& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

double model_distance(const ModelPoint& p, const ModelPoint& q) {
    if (!(p.kappa == q.kappa)) {
        throw Error(ErrorKind::CurvatureMismatch, "points live in distinct model planes");
    }
    const double d0 = p.coords[0] - q.coords[0];
    const double d1 = p.coords[1] - q.coords[1];
    const double d2 = p.coords[2] - q.coords[2];
    if (p.kappa.is_flat()) {
        return std::hypot(d0, d1);
    }
    // <p-q, p-q> = 4 sinh^2(d/2) on the unit hyperboloid.
    const double chord2 = std::max(0.0, -d0 * d0 + d1 * d1 + d2 * d2);
    return 2.0 * std::asinh(0.5 * std::sqrt(chord2)) / p.kappa.scale();
}

namespace {

double shape(double x, bool flat) { return flat ? x : std::sinh(x); }

}  // namespace

TriangleAngles comparison_angles(const TriangleSides& sides, Curvature kappa, double tol) {
    const bool flat = kappa.is_flat();
    const double k = flat ? 1.0 : kappa.scale();
    const double a = sides.a * k;
    const double b = sides.b * k;
    const double c = sides.c * k;
    if (!(a >= 0.0 && b >= 0.0 && c >= 0.0) || !std::isfinite(a + b + c)) {
        throw Error(ErrorKind::InvalidSides, "side lengths must be finite and nonnegative");
    }
    const double s = 0.5 * (a + b + c);
    double sa = s - a;
    double sb = s - b;
    double sc = s - c;
    const double slack = tol * std::max(s, 1e-300);
    if (sa < -slack || sb < -slack || sc < -slack) {
        throw Error(ErrorKind::InvalidSides, "sides violate the triangle inequality");
    }
    TriangleAngles out;
    if (s <= 0.0) {
        out.degenerate = true;
        return out;
    }
    const bool za = sa <= slack;
    const bool zb = sb <= slack;
    const bool zc = sc <= slack;
    if (za || zb || zc) {
        out.degenerate = true;
        const int zeros = int(za) + int(zb) + int(zc);
        if (zeros >= 2) {
            // One side vanishes: the angle opposite it is 0, the other two
            // take the isosceles limit.
            if (!za) { out.alpha = 0.0; out.beta = out.gamma = kPi / 2; }
            else if (!zb) { out.beta = 0.0; out.alpha = out.gamma = kPi / 2; }
            else { out.gamma = 0.0; out.alpha = out.beta = kPi / 2; }
        } else if (za) {
            out.alpha = kPi;
        } else if (zb) {
            out.beta = kPi;
        } else {
            out.gamma = kPi;
        }
        return out;
    }
    sa = std::max(sa, 0.0);
    sb = std::max(sb, 0.0);
    sc = std::max(sc, 0.0);
    const double fs = shape(s, flat);
    const double fa = shape(sa, flat);
    const double fb = shape(sb, flat);
    const double fc = shape(sc, flat);
    // Half-angle form: tan(alpha/2) = sqrt(f(s-b) f(s-c) / (f(s) f(s-a))).
    out.alpha = 2.0 * std::atan2(std::sqrt(fb * fc), std::sqrt(fs * fa));
    out.beta = 2.0 * std::atan2(std::sqrt(fc * fa), std::sqrt(fs * fb));
    out.gamma = 2.0 * std::atan2(std::sqrt(fa * fb), std::sqrt(fs * fc));
    return out;
}

double angle_from_angles_and_side(double alpha, double beta, double c, Curvature kappa,
                                  double tol) {
    if (kappa.is_flat()) {
        throw Error(ErrorKind::Domain, "angle_from_angles_and_side requires kappa < 0");
    }
    if (!(alpha > 0.0 && alpha < kPi && beta > 0.0 && beta < kPi) || !(c >= 0.0)) {
        throw Error(ErrorKind::Domain, "angles must lie in (0, pi) and c must be >= 0");
    }
    const double ch = std::cosh(c * kappa.scale());
    const double cos_gamma =
        std::sin(alpha) * std::sin(beta) * ch - std::cos(alpha) * std::cos(beta);
    if (cos_gamma > 1.0 + tol || cos_gamma < -1.0 - tol) {
        throw Error(ErrorKind::NoSuchTriangle,
                    "no hyperbolic triangle: cos(gamma) = " + std::to_string(cos_gamma));
    }
    return std::acos(std::clamp(cos_gamma, -1.0, 1.0));
}

EmbeddedTriangle embed_comparison_triangle(const TriangleSides& sides, Curvature kappa,
                                           double tol) {
    const TriangleAngles angles = comparison_angles(sides, kappa, tol);
    const double k = kappa.is_flat() ? 1.0 : kappa.scale();
    EmbeddedTriangle out;
    out.p = ModelPoint::origin(kappa);
    out.q = ModelPoint::polar(kappa, sides.c * k, 0.0);
    out.r = ModelPoint::polar(kappa, sides.b * k, angles.alpha);
    out.degenerate = angles.degenerate;
    return out;
}

ModelPoint point_along(const ModelPoint& p, const ModelPoint& q, double s) {
    const double d = model_distance(p, q);
    if (d <= 0.0) {
        return p;
    }
    if (p.kappa.is_flat()) {
        const double t = s / d;
        return ModelPoint::euclidean(p.coords[0] + t * (q.coords[0] - p.coords[0]),
                                     p.coords[1] + t * (q.coords[1] - p.coords[1]));
    }
    const double k = p.kappa.scale();
    const double dd = d * k;
    const double ss = s * k;
    const double wp = std::sinh(dd - ss) / std::sinh(dd);
    const double wq = std::sinh(ss) / std::sinh(dd);
    ModelPoint out{p.kappa, {}};
    for (int i = 0; i < 3; ++i) {
        out.coords[i] = wp * p.coords[i] + wq * q.coords[i];
    }
    return out.normalized();
}

double model_angle(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r) {
    std::array<double, 3> u{};
    std::array<double, 3> v{};
    double nu = 0.0;
    double nv = 0.0;
    if (p.kappa.is_flat()) {
        for (int i = 0; i < 2; ++i) {
            u[i] = q.coords[i] - p.coords[i];
            v[i] = r.coords[i] - p.coords[i];
        }
        nu = std::hypot(u[0], u[1]);
        nv = std::hypot(v[0], v[1]);
    } else {
        // Tangent directions: components orthogonal to p in the Minkowski pairing.
        const double pq = minkowski(p.coords, q.coords);
        const double pr = minkowski(p.coords, r.coords);
        for (int i = 0; i < 3; ++i) {
            u[i] = q.coords[i] + pq * p.coords[i];
            v[i] = r.coords[i] + pr * p.coords[i];
        }
        nu = std::sqrt(std::max(0.0, minkowski(u, u)));
        nv = std::sqrt(std::max(0.0, minkowski(v, v)));
    }
    if (nu == 0.0 || nv == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "angle undefined at a coincident point");
    }
    std::array<double, 3> diff{};
    std::array<double, 3> sum{};
    for (int i = 0; i < 3; ++i) {
        diff[i] = u[i] / nu - v[i] / nv;
        sum[i] = u[i] / nu + v[i] / nv;
    }
    auto norm = [&](const std::array<double, 3>& w) {
        return p.kappa.is_flat() ? std::hypot(w[0], w[1])
                                 : std::sqrt(std::max(0.0, minkowski(w, w)));
    };
    return 2.0 * std::atan2(norm(diff), norm(sum));
}

AngleEstimate alexandrov_angle(std::span<const double> from_base_a,
                               std::span<const double> from_base_b,
                               std::span<const double> between, AlexandrovOptions options) {
    const std::size_t n = std::min({from_base_a.size(), from_base_b.size(), between.size()});
    if (n < 2) {
        throw Error(ErrorKind::NoLimit, "need at least two samples to extrapolate an angle");
    }
    // Richardson table over halving parameters, eliminating t, t^2, t^3, ...
    std::vector<std::vector<double>> table;
    table.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const TriangleSides sides{between[k], from_base_b[k], from_base_a[k]};
        std::vector<double> row{comparison_angles(sides, Curvature::flat()).alpha};
        for (std::size_t j = 1; j <= k; ++j) {
            const double factor = std::ldexp(1.0, static_cast<int>(j)) - 1.0;
            row.push_back(row[j - 1] + (row[j - 1] - table[k - 1][j - 1]) / factor);
        }
        table.push_back(std::move(row));
        if (k >= 1) {
            const double current = table[k][k];
            const double previous = table[k - 1][k - 1];
            const double diff = std::abs(current - previous);
            if (diff < options.tolerance) {
                return AngleEstimate{std::clamp(current, 0.0, kPi), diff, static_cast<int>(k + 1)};
            }
        }
    }
    throw Error(ErrorKind::NoLimit, "comparison angles did not converge over the samples");
}

namespace {

double side_length(const TriangleSides& s, int side) {
    switch (side) {
    case 0: return s.c;
    case 1: return s.a;
    default: return s.b;
    }
}

ModelPoint comparison_point(const EmbeddedTriangle& t, const SidePoint& x) {
    switch (x.side) {
    case 0: return point_along(t.p, t.q, x.s);
    case 1: return point_along(t.q, t.r, x.s);
    default: return point_along(t.r, t.p, x.s);
    }
}

SidePoint sample_side_point(const TriangleSides& sides, std::mt19937_64& rng) {
    const double perimeter = sides.a + sides.b + sides.c;
    double u = uniform(rng, 0.0, perimeter);
    for (int side = 0; side < 3; ++side) {
        const double len = side_length(sides, side);
        if (u <= len || side == 2) {
            return SidePoint{side, std::clamp(u, 0.0, len)};
        }
        u -= len;
    }
    return SidePoint{};
}

}  // namespace

CatCheckResult cat_inequality_check(const TriangleSides& sides, const SideDistanceOracle& oracle,
                                    Curvature kappa, int samples, std::uint64_t seed, double tol) {
    const EmbeddedTriangle model = embed_comparison_triangle(sides, kappa);
    CatCheckResult result;
    std::mt19937_64 rng = trial_rng(seed, 0);
    for (int i = 0; i < samples; ++i) {
        const SidePoint x = sample_side_point(sides, rng);
        const SidePoint y = sample_side_point(sides, rng);
        const double d = oracle(x, y);
        const double dbar = model_distance(comparison_point(model, x), comparison_point(model, y));
        ++result.pairs_checked;
        if (d > dbar + tol) {
            result.pass = false;
            result.witness = CatWitness{x, y, d, dbar};
            return result;
        }
    }
    return result;
}

}  // namespace catkit
