#include "catkit/testers.hpp"

#include "catkit/contraction.hpp"
#include "catkit/error.hpp"
#include "catkit/random.hpp"

#include <algorithm>
#include <cmath>

namespace catkit {

namespace {

constexpr double kBallShrink = 1e-3;
constexpr double kMinOffset = 1e-3;
constexpr int kMaxAttempts = 4096;

// Point at distance s from `from` towards a random location.
Location step_towards_random(const MetricOracle& oracle, const Location& from, double max_s,
                             std::mt19937_64& rng) {
    const Location p = random_location(oracle.complex(), rng);
    const double d = oracle.distance(from, p);
    const double s = uniform(rng, 0.0, std::min(max_s, d));
    if (d <= 0.0) {
        return from;
    }
    return oracle.geodesic(from, p).point_at(oracle.complex(), s);
}

}  // namespace

ShadowLemmaReport shadow_lemma_test(const MetricOracle& oracle, const MarkedGeodesic& gamma,
                                    double k_candidate, double R, double epsilon, int trials,
                                    std::uint64_t seed) {
    if (gamma.marks.empty()) {
        throw Error(ErrorKind::UnusableComplex, "no marked CAT(-1) points");
    }
    if (k_candidate < 0.0 || R < 0.0 || epsilon <= 0.0 || trials < 0) {
        throw Error(ErrorKind::Domain, "shadow test needs k, R >= 0, epsilon > 0");
    }
    std::vector<int> usable;
    for (int j = 0; j < static_cast<int>(gamma.marks.size()); ++j) {
        if (gamma.path.length - gamma.marks[j] >= k_candidate) {
            usable.push_back(j);
        }
    }
    if (usable.empty()) {
        throw Error(ErrorKind::UnusableComplex, "no mark leaves room for k along the geodesic");
    }
    const MetricComplex& m = oracle.complex();
    ShadowLemmaReport report;
    report.trials = trials;
    report.threshold = epsilon + 2.0 * oracle.error_bound();
    for (int i = 0; i < trials; ++i) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
        const int j = usable[uniform_index(rng, static_cast<int>(usable.size()))];
        const double tz = gamma.marks[j];
        ShadowTrial rec;
        rec.trial = i;
        rec.mark = j;
        rec.o_t = tz - uniform(rng, 0.0, tz);
        rec.y_t = tz + uniform(rng, k_candidate, gamma.path.length - tz);
        const Location z = gamma.path.point_at(m, tz);
        const Location o = gamma.path.point_at(m, rec.o_t);
        const Location y = gamma.path.point_at(m, rec.y_t);
        const Location x = step_towards_random(oracle, y, R, rng);
        rec.xy = oracle.distance(y, x);
        rec.distance = oracle.project(z, oracle.geodesic(o, x)).distance;
        rec.counterexample = rec.distance > report.threshold;
        report.counterexamples += rec.counterexample ? 1 : 0;
        report.worst_distance = std::max(report.worst_distance, rec.distance);
        report.records.push_back(rec);
    }
    return report;
}

ContractionReport contraction_diameter_test(const MetricOracle& oracle, const MarkedGeodesic& gamma,
                                            int trials, std::uint64_t seed) {
    if (gamma.path.legs.empty() || gamma.path.length <= 0.0) {
        throw Error(ErrorKind::DegenerateInput, "degenerate geodesic");
    }
    const MetricComplex& m = oracle.complex();
    ContractionReport report;
    report.trials = trials;
    report.bound = contraction_bound(gamma.params.epsilon, gamma.params.L);
    for (int i = 0; i < trials; ++i) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
        ContractionTrial rec;
        rec.trial = i;
        Location x;
        Projection px;
        int attempts = 0;
        do {
            if (++attempts > kMaxAttempts) {
                throw Error(ErrorKind::UnusableComplex, "no sample point off the geodesic");
            }
            x = random_location(m, rng);
            px = oracle.project(x, gamma.path);
        } while (px.distance <= kMinOffset);
        rec.dx = px.distance;
        rec.tz = px.t;
        const double r = px.distance * (1.0 - kBallShrink);
        std::optional<Location> y;
        for (int k = 0; k < kMaxAttempts && !y; ++k) {
            const Location p = random_location(m, rng);
            if (oracle.distance(x, p) < r) {
                y = p;
            }
        }
        if (!y) {
            rec.fallback = true;
            y = step_towards_random(oracle, x, r, rng);
        }
        rec.dxy = oracle.distance(x, *y);
        rec.tw = oracle.project(*y, gamma.path).t;
        rec.diameter = std::abs(rec.tz - rec.tw);
        report.max_diameter = std::max(report.max_diameter, rec.diameter);
        report.records.push_back(rec);
    }
    report.within_bound = report.max_diameter <= report.bound;
    return report;
}

}  // namespace catkit
