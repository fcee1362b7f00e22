#pragma once

#include "catkit/angled_complex.hpp"
#include "catkit/contraction.hpp"
#include "catkit/model.hpp"

#include <array>
#include <memory>
#include <optional>
#include <random>
#include <vector>

namespace catkit {

/// A point of a realized complex: a face and normalized Klein-barycentric
/// weights over its three corners. Weights are affine in the face's
/// projective lift, so straight lines in the face stay straight.
struct Location {
    FaceId face = 0;
    std::array<double, 3> weights{1.0, 0.0, 0.0};

    friend bool operator==(const Location&, const Location&) = default;
};

class MetricComplex;

/// Uniform face, then uniform barycentric weights in that face.
Location random_location(const MetricComplex& m, std::mt19937_64& rng);

/// A triangulated complex with every face realized as a model triangle.
class MetricComplex {
public:
    MetricComplex() = default;

    /// Face curvature comes from `face_kappa`, then from the complex, then flat.
    /// Corner angles are recomputed from the model triangles and stored.
    static MetricComplex realize(const AngledComplex& x, std::vector<double> edge_lengths,
                                 std::vector<std::optional<Curvature>> face_kappa = {});

    const AngledComplex& base() const { return base_; }
    const std::vector<double>& edge_lengths() const { return lengths_; }
    double edge_length(EdgeId e) const { return lengths_.at(e); }
    Curvature kappa(FaceId f) const { return kappa_.at(f); }
    int face_count() const { return base_.face_count(); }

    /// Model-plane position of corner i of face f.
    const ModelPoint& corner_point(FaceId f, int i) const { return corners_.at(f)[i]; }

    /// Faces traversing an edge, and the corners at a vertex.
    const std::vector<Corner>& edge_uses(EdgeId e) const { return edge_uses_.at(e); }
    const std::vector<Corner>& vertex_corners(VertexId v) const { return vertex_corners_.at(v); }

    ModelPoint model_point(const Location& loc) const;
    /// Location of a point given in face f's own chart.
    Location locate(FaceId f, const ModelPoint& p) const;
    /// Distance between two locations in the same face.
    double face_distance(const Location& a, const Location& b) const;

    Location vertex_location(VertexId v) const;
    /// Point of edge e at arc length s from its tail, expressed in face f.
    Location edge_point(EdgeId e, double s, FaceId f, int position) const;
    Location edge_point(EdgeId e, double s) const;

    /// Every face representation of the same point (several when it lies on an edge
    /// or at a vertex).
    std::vector<Location> charts_of(const Location& loc) const;

    /// Optional isometric development of the whole complex into one model plane
    /// (vertex positions). Set by generators for simply connected patches.
    const std::optional<std::vector<ModelPoint>>& global_chart() const { return chart_; }
    MetricComplex with_global_chart(std::vector<ModelPoint> chart) const;
    /// Global-chart position of a location.
    ModelPoint chart_point(const Location& loc) const;
    /// Inverse of chart_point; throws when no face contains the point.
    Location chart_locate(const ModelPoint& p) const;

    friend bool operator==(const MetricComplex& a, const MetricComplex& b) {
        return a.base_ == b.base_ && a.lengths_ == b.lengths_;
    }

private:
    struct FaceFrame {
        std::array<double, 9> inverse{};  // row-major inverse of the lifted corner matrix
    };

    AngledComplex base_;
    std::vector<double> lengths_;
    std::vector<Curvature> kappa_;
    std::vector<std::array<ModelPoint, 3>> corners_;
    std::vector<FaceFrame> frames_;
    std::vector<std::vector<Corner>> edge_uses_;      // (face, position) traversing each edge
    std::vector<std::vector<Corner>> vertex_corners_;
    std::optional<std::vector<ModelPoint>> chart_;
    std::vector<FaceFrame> chart_frames_;
};

/// One straight piece of a path inside a face chart, or inside the global
/// chart when `face` is kGlobalChart.
struct PathLeg {
    FaceId face = 0;
    ModelPoint from;
    ModelPoint to;
    double length = 0.0;
};

inline constexpr FaceId kGlobalChart = -1;

struct GeodesicPath {
    std::vector<PathLeg> legs;
    double length = 0.0;
    /// Mesh parameter used; zero for exact paths.
    double mesh = 0.0;

    Location point_at(const MetricComplex& m, double t) const;
    Location start(const MetricComplex& m) const { return point_at(m, 0.0); }
    Location end(const MetricComplex& m) const { return point_at(m, length); }
};

/// A geodesic with arc-length parameters of CAT(-1) points.
struct MarkedGeodesic {
    GeodesicPath path;
    std::vector<double> marks;
    ContractionParams params;

    /// Marks increase inside [0, length] with gaps in [epsilon, L + R_min + epsilon].
    void validate() const;
};

/// Path along consecutive edge traversals; exact when those edges form a geodesic.
GeodesicPath edge_path(const MetricComplex& m, const std::vector<EdgeUse>& uses);

/// Shortest-path graph on vertices and edge-interior nodes. Each face stores the
/// exact model distances between all of its boundary nodes.
class DistanceMesh {
public:
    DistanceMesh(const MetricComplex& m, double h);

    const MetricComplex& complex() const { return *complex_; }
    double h() const { return h_; }
    int node_count() const { return static_cast<int>(node_location_.size()); }
    /// Interior nodes per edge is the subdivision count minus one.
    int subdivisions(EdgeId e) const { return subdivisions_.at(e); }

private:
    friend class DistanceField;

    struct FaceNodes {
        std::vector<int> nodes;
        std::vector<ModelPoint> points;
        std::vector<double> distances;  // row-major, nodes.size() squared
    };
    struct Incidence {
        FaceId face;
        int slot;
    };

    std::shared_ptr<const MetricComplex> complex_;
    double h_ = 0.0;
    std::vector<int> subdivisions_;
    std::vector<Location> node_location_;
    std::vector<FaceNodes> faces_;
    std::vector<std::vector<Incidence>> incidences_;
};

/// Single-source graph distances from a location; values are upper bounds on
/// the true distance.
class DistanceField {
public:
    DistanceField(const DistanceMesh& mesh, const Location& source);

    double distance_to(const Location& q) const;
    GeodesicPath path_to(const Location& q) const;

    const Location& source() const { return source_; }
    const DistanceMesh& mesh() const { return *mesh_; }

private:
    struct Best {
        double distance;
        FaceId face;        // face of the last leg
        int slot = -1;      // occurrence used, -1 for a direct leg from the source
        ModelPoint target;  // q in that face's chart
    };
    Best best(const Location& q) const;

    const DistanceMesh* mesh_;
    Location source_;
    std::vector<Location> source_charts_;
    std::vector<double> dist_;
    std::vector<int> pred_node_;
    std::vector<FaceId> pred_face_;
};

double approx_distance(const DistanceMesh& mesh, const Location& p, const Location& q);
GeodesicPath approx_geodesic(const DistanceMesh& mesh, const Location& p, const Location& q);

struct Projection {
    double t = 0.0;
    Location point;
    double distance = 0.0;
};

/// Minimizes the field distance along the path: samples at spacing at most
/// `h`, then golden-section refinement around the best sample.
Projection project_to_path(const DistanceField& field, const GeodesicPath& path, double h);

struct ShadowResult {
    bool member = false;
    /// Distance from z to the computed segment [o, y].
    double distance = 0.0;
    double slack = 0.0;
};

/// y lies in the shadow of B(z, R) seen from o when [o, y] meets the ball; the
/// test uses radius R + 2h.
ShadowResult shadow_member(const DistanceMesh& mesh, const Location& o, const Location& y,
                           const Location& z, double R);

}  // namespace catkit
