#pragma once

#include "catkit/metric.hpp"

#include <memory>
#include <optional>

namespace catkit {

/// Distance, geodesic and projection queries on a realized complex, with an
/// additive bound on the distance error.
class MetricOracle {
public:
    virtual ~MetricOracle() = default;

    virtual const MetricComplex& complex() const = 0;
    virtual double distance(const Location& p, const Location& q) const = 0;
    virtual GeodesicPath geodesic(const Location& p, const Location& q) const = 0;
    virtual Projection project(const Location& x, const GeodesicPath& path) const = 0;
    virtual double error_bound() const = 0;
};

/// Subdivision-graph oracle. Keeps the field of the most recent source, so it
/// is not safe to share between threads.
class MeshOracle final : public MetricOracle {
public:
    MeshOracle(const MetricComplex& m, double h);

    const MetricComplex& complex() const override { return mesh_.complex(); }
    double distance(const Location& p, const Location& q) const override;
    GeodesicPath geodesic(const Location& p, const Location& q) const override;
    Projection project(const Location& x, const GeodesicPath& path) const override;
    double error_bound() const override { return mesh_.h(); }

    const DistanceMesh& mesh() const { return mesh_; }

private:
    const DistanceField& field(const Location& source) const;

    DistanceMesh mesh_;
    mutable std::optional<DistanceField> field_;
};

/// Exact oracle for complexes with a global chart whose image is convex.
class ChartOracle final : public MetricOracle {
public:
    explicit ChartOracle(const MetricComplex& m);

    const MetricComplex& complex() const override { return *complex_; }
    double distance(const Location& p, const Location& q) const override;
    GeodesicPath geodesic(const Location& p, const Location& q) const override;
    Projection project(const Location& x, const GeodesicPath& path) const override;
    double error_bound() const override { return 0.0; }

private:
    std::shared_ptr<const MetricComplex> complex_;
};

/// Closest point of the geodesic segment [p, q] to x, all in one model plane:
/// returns the arc-length parameter from p and the distance.
std::pair<double, double> project_to_segment(const ModelPoint& x, const ModelPoint& p,
                                             const ModelPoint& q);

}  // namespace catkit
