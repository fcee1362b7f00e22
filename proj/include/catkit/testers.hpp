#pragma once

#include "catkit/oracle.hpp"

#include <cstdint>
#include <vector>

namespace catkit {

struct ShadowTrial {
    int trial = 0;
    int mark = 0;
    double o_t = 0.0;
    double y_t = 0.0;
    /// d(x, y) and the distance from the mark to [o, x].
    double xy = 0.0;
    double distance = 0.0;
    bool counterexample = false;
};

struct ShadowLemmaReport {
    int trials = 0;
    int counterexamples = 0;
    /// Largest distance from a mark to [o, x] over all trials.
    double worst_distance = 0.0;
    double threshold = 0.0;
    std::vector<ShadowTrial> records;
};

/// Empirical falsifier for a candidate shadow constant k. Each trial picks a
/// mark z, o and y on the marked geodesic on either side of z with
/// d(z, y) >= k, and x with d(x, y) <= R. A counterexample is a trial where
/// [o, x] misses B(z, epsilon + 2 error_bound).
ShadowLemmaReport shadow_lemma_test(const MetricOracle& oracle, const MarkedGeodesic& gamma,
                                    double k_candidate, double R, double epsilon, int trials,
                                    std::uint64_t seed);

struct ContractionTrial {
    int trial = 0;
    double dx = 0.0;   // d(x, gamma)
    double dxy = 0.0;  // d(x, y)
    double tz = 0.0;
    double tw = 0.0;
    double diameter = 0.0;
    /// y came from the geodesic fallback instead of rejection sampling.
    bool fallback = false;
};

struct ContractionReport {
    int trials = 0;
    double max_diameter = 0.0;
    double bound = 0.0;
    bool within_bound = true;
    std::vector<ContractionTrial> records;
};

/// Projection diameters of balls disjoint from gamma. x is a random location
/// off gamma, y is uniform in B(x, d(x, gamma) (1 - 1e-3)) by rejection.
ContractionReport contraction_diameter_test(const MetricOracle& oracle, const MarkedGeodesic& gamma,
                                            int trials, std::uint64_t seed);

}  // namespace catkit
