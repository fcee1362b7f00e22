#include "catkit/contraction.hpp"

#include "catkit/error.hpp"
#include "catkit/model.hpp"
#include "catkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace catkit {

void ContractionParams::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::Domain, "epsilon must be positive");
    }
    if (!(R_min > 2.0 * epsilon)) {
        throw Error(ErrorKind::Domain, "R_min must exceed 2 epsilon");
    }
    if (!(L >= R_min) || !std::isfinite(L)) {
        throw Error(ErrorKind::Domain, "L must be at least R_min");
    }
}

double max_base_angle(double d) {
    if (!(d >= 0.0)) {
        throw Error(ErrorKind::Domain, "max_base_angle needs d >= 0");
    }
    // tan^2 of the angle is 1 / cosh d.
    return std::atan2(1.0, std::sqrt(std::cosh(d)));
}

double eta(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::Domain, "eta needs epsilon > 0");
    }
    // pi - 4 atan(1/s) = 4 atan((s - 1)/(s + 1)) with s = sqrt(cosh epsilon).
    const double s = std::sqrt(std::cosh(epsilon));
    const double sh = std::sinh(0.5 * epsilon);
    const double s_minus_1 = 2.0 * sh * sh / (s + 1.0);
    const double gap = 4.0 * std::atan(s_minus_1 / (s + 1.0));
    return 2.0 * kPi / gap;
}

double contraction_bound(const ContractionParams& params) {
    params.validate();
    return contraction_bound(params.epsilon, params.L);
}

double contraction_bound(double epsilon, double L) {
    if (!(L > 0.0) || !std::isfinite(L)) {
        throw Error(ErrorKind::Domain, "contraction_bound needs L > 0");
    }
    return 2.0 * (eta(epsilon) + 2.0) * L + 3.0 * epsilon;
}

double shadow_scale(double delta, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw Error(ErrorKind::Domain, "shadow_scale needs epsilon > 0");
    }
    if (!(delta >= 0.0)) {
        throw Error(ErrorKind::Domain, "shadow_scale needs delta >= 0");
    }
    return delta / epsilon + 1.0;
}

Prop1Radii prop1_radii(double epsilon, double diam_quotient) {
    if (!(epsilon > 0.0) || !(diam_quotient >= 0.0)) {
        throw Error(ErrorKind::Domain, "prop1_radii needs epsilon > 0 and diam >= 0");
    }
    const double R = 2.0 * epsilon + diam_quotient;
    return {R, R + 2.0 * epsilon};
}

namespace {

double point_segment_distance(double px, double py, double bx, double by) {
    const double len2 = bx * bx + by * by;
    const double s = len2 > 0.0 ? std::clamp((px * bx + py * by) / len2, 0.0, 1.0) : 0.0;
    return std::hypot(px - s * bx, py - s * by);
}

}  // namespace

ShadowCheckReport shadow_scale_euclidean_check(double delta, double epsilon, double R, int trials,
                                               std::uint64_t seed) {
    if (!(R > 0.0) || trials < 0) {
        throw Error(ErrorKind::Domain, "shadow check needs R > 0 and trials >= 0");
    }
    const double k = shadow_scale(delta, epsilon);
    ShadowCheckReport report;
    for (int i = 0; i < trials; ++i) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
        const double t = uniform(rng, 0.0, delta);
        const double rho = R * std::sqrt(uniform(rng, 0.0, 1.0));
        const double theta = uniform(rng, 0.0, 2.0 * kPi);
        const double x = t + k * R + rho * std::cos(theta);
        const double y = rho * std::sin(theta);
        const double dist = point_segment_distance(t, 0.0, x, y);
        ++report.trials;
        report.worst_ratio = std::max(report.worst_ratio, dist / epsilon);
        if (dist > epsilon) {
            ++report.counterexamples;
        }
    }
    return report;
}

}  // namespace catkit
