#include "catkit/oracle.hpp"

#include "catkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catkit {

namespace {

ModelPoint leg_point(const MetricComplex& m, FaceId face, const ModelPoint& p) {
    return face == kGlobalChart ? p : m.chart_point(m.locate(face, p));
}

}  // namespace

std::pair<double, double> project_to_segment(const ModelPoint& x, const ModelPoint& p,
                                             const ModelPoint& q) {
    const double len = model_distance(p, q);
    if (len <= 0.0) {
        return {0.0, model_distance(x, p)};
    }
    if (p.kappa.is_flat()) {
        const double dx = q.coords[0] - p.coords[0];
        const double dy = q.coords[1] - p.coords[1];
        const double ex = x.coords[0] - p.coords[0];
        const double ey = x.coords[1] - p.coords[1];
        const double s = std::clamp((ex * dx + ey * dy) / len, 0.0, len);
        const double fx = ex - s * dx / len;
        const double fy = ey - s * dy / len;
        return {s, std::hypot(fx, fy)};
    }
    const double k = p.kappa.scale();
    const double L = len * k;
    std::array<double, 3> u{};
    for (int i = 0; i < 3; ++i) {
        u[i] = (q.coords[i] - std::cosh(L) * p.coords[i]) / std::sinh(L);
    }
    const double A = -minkowski(x.coords, p.coords);
    const double B = minkowski(x.coords, u);
    double s = std::abs(B) < A ? std::atanh(B / A) : (B > 0.0 ? L : 0.0);
    s = std::clamp(s, 0.0, L);
    const double c = std::max(1.0, A * std::cosh(s) - B * std::sinh(s));
    return {s / k, std::acosh(c) / k};
}

MeshOracle::MeshOracle(const MetricComplex& m, double h) : mesh_(m, h) {}

const DistanceField& MeshOracle::field(const Location& source) const {
    if (!field_ || !(field_->source() == source)) {
        field_.emplace(mesh_, source);
    }
    return *field_;
}

double MeshOracle::distance(const Location& p, const Location& q) const {
    return field(p).distance_to(q);
}

GeodesicPath MeshOracle::geodesic(const Location& p, const Location& q) const {
    return field(p).path_to(q);
}

Projection MeshOracle::project(const Location& x, const GeodesicPath& path) const {
    return project_to_path(field(x), path, mesh_.h());
}

ChartOracle::ChartOracle(const MetricComplex& m)
    : complex_(std::make_shared<const MetricComplex>(m)) {
    if (!m.global_chart()) {
        throw Error(ErrorKind::InvalidInput, "chart oracle needs a global chart");
    }
}

double ChartOracle::distance(const Location& p, const Location& q) const {
    return model_distance(complex_->chart_point(p), complex_->chart_point(q));
}

GeodesicPath ChartOracle::geodesic(const Location& p, const Location& q) const {
    PathLeg leg{kGlobalChart, complex_->chart_point(p), complex_->chart_point(q), 0.0};
    leg.length = model_distance(leg.from, leg.to);
    return {{leg}, leg.length, 0.0};
}

Projection ChartOracle::project(const Location& x, const GeodesicPath& path) const {
    if (path.legs.empty()) {
        throw Error(ErrorKind::DegenerateInput, "cannot project onto an empty path");
    }
    const ModelPoint px = complex_->chart_point(x);
    double best_t = 0.0;
    double best_d = std::numeric_limits<double>::infinity();
    double start = 0.0;
    for (const PathLeg& leg : path.legs) {
        const ModelPoint a = leg_point(*complex_, leg.face, leg.from);
        const ModelPoint b = leg_point(*complex_, leg.face, leg.to);
        const auto [s, d] = project_to_segment(px, a, b);
        if (d < best_d) {
            best_d = d;
            best_t = start + std::min(s, leg.length);
        }
        start += leg.length;
    }
    return {best_t, path.point_at(*complex_, best_t), best_d};
}

}  // namespace catkit
