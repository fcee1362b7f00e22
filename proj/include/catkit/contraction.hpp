#pragma once

#include <cstdint>

namespace catkit {

struct ContractionParams {
    double epsilon = 0.0;
    double L = 0.0;
    double R_min = 0.0;

    /// Throws Domain unless epsilon > 0 and L >= R_min > 2 epsilon.
    void validate() const;
};

/// arccos(sqrt(cosh d / (1 + cosh d))): base angle of the isosceles
/// hyperbolic triangle with apex angle pi/2 and base d.
double max_base_angle(double d);

/// 2 pi / (pi - 4 max_base_angle(epsilon)).
double eta(double epsilon);

/// 2 (eta(epsilon) + 2) L + 3 epsilon; params are validated first.
double contraction_bound(const ContractionParams& params);
/// Same closed form, requiring only epsilon > 0 and L > 0.
double contraction_bound(double epsilon, double L);

/// k = delta / epsilon + 1.
double shadow_scale(double delta, double epsilon);

struct Prop1Radii {
    double R = 0.0;
    /// Effective part of the lower bound on K; the compactness constant is not included.
    double K_lower = 0.0;
};

Prop1Radii prop1_radii(double epsilon, double diam_quotient);

struct ShadowCheckReport {
    int trials = 0;
    int counterexamples = 0;
    /// Largest distance from r(t) to the segment [r(0), x], relative to epsilon.
    double worst_ratio = 0.0;
};

/// Samples t in [0, delta] and x in B(r(t + kR), R) in the Euclidean plane with r
/// the positive first axis, and checks that [r(0), x] meets B(r(t), epsilon).
ShadowCheckReport shadow_scale_euclidean_check(double delta, double epsilon, double R, int trials,
                                               std::uint64_t seed);

}  // namespace catkit
