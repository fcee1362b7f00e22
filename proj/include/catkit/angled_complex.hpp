#pragma once

#include "catkit/model.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace catkit {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One traversal of an edge by a face boundary.
struct EdgeUse {
    EdgeId edge = 0;
    bool reversed = false;

    friend bool operator==(const EdgeUse&, const EdgeUse&) = default;
};

struct Face {
    std::vector<EdgeUse> boundary;

    std::size_t size() const { return boundary.size(); }
    friend bool operator==(const Face&, const Face&) = default;
};

/// Corner = (face, boundary position). Position i sits at the start vertex of
/// boundary[i], between boundary[i-1] and boundary[i]. Quotient complexes may
/// put several corners of one face at the same vertex.
struct Corner {
    FaceId face = 0;
    int position = 0;

    friend bool operator==(const Corner&, const Corner&) = default;
};

using FaceAngles = std::vector<std::optional<double>>;

/// Polygonal complex with corner angles and optional per-face curvature.
/// Immutable; the with_* methods return modified copies.
class AngledComplex {
public:
    AngledComplex() = default;
    AngledComplex(int vertex_count, std::vector<Edge> edges, std::vector<Face> faces,
                  std::vector<FaceAngles> angles = {},
                  std::vector<std::optional<Curvature>> face_kappa = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const Face& face(FaceId f) const { return faces_.at(f); }

    const std::vector<FaceAngles>& angles() const { return angles_; }
    std::optional<double> angle(const Corner& c) const;
    std::optional<Curvature> face_kappa(FaceId f) const { return kappa_.at(f); }
    const std::vector<std::optional<Curvature>>& face_kappas() const { return kappa_; }

    VertexId start_vertex(const EdgeUse& use) const;
    VertexId end_vertex(const EdgeUse& use) const;
    VertexId corner_vertex(const Corner& c) const;
    std::vector<Corner> corners_at(VertexId v) const;
    std::vector<FaceId> faces_at(VertexId v) const;

    bool angles_complete() const;
    int euler_characteristic() const;

    AngledComplex with_angles(std::vector<FaceAngles> angles) const;
    AngledComplex with_corner_angle(const Corner& c, double angle) const;
    AngledComplex with_face_kappa(std::vector<std::optional<Curvature>> kappa) const;

    friend bool operator==(const AngledComplex&, const AngledComplex&) = default;

private:
    void validate() const;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<FaceAngles> angles_;
    std::vector<std::optional<Curvature>> kappa_;
};

double vertex_curvature(const AngledComplex& x, VertexId v);
double face_curvature(const AngledComplex& x, FaceId f);
double triangle_deficiency(const AngledComplex& x, FaceId f);

struct CurvatureReport {
    std::vector<double> vertex_curvature;
    std::vector<double> face_curvature;
    double total = 0.0;
    int euler_characteristic = 0;
    double expected_total = 0.0;
    double residual = 0.0;
};

/// Sum of vertex and face curvatures against 2 pi chi(X).
CurvatureReport gauss_bonnet(const AngledComplex& x);

/// Endpoint of an edge as seen from a vertex; loops contribute both ends.
struct EdgeEnd {
    EdgeId edge = 0;
    bool head = false;

    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct LinkArc {
    int from = 0;
    int to = 0;
    /// Corner angle; NaN when the corner has no angle.
    double weight = std::numeric_limits<double>::quiet_NaN();
    Corner corner;
};

struct LinkGraph {
    VertexId vertex = 0;
    std::vector<EdgeEnd> nodes;
    std::vector<LinkArc> arcs;

    int euler_characteristic() const {
        return static_cast<int>(nodes.size()) - static_cast<int>(arcs.size());
    }
};

LinkGraph link_graph(const AngledComplex& x, VertexId v);

/// Length of the shortest injective cycle, or +infinity when the link is a forest.
double link_shortest_cycle(const LinkGraph& link);

struct VertexLinkVerdict {
    VertexId vertex = 0;
    double girth = 0.0;
    bool locally_cat0 = false;
    /// Girth >= 2 pi and every incident face has kappa < 0.
    bool cat_minus1 = false;
};

VertexLinkVerdict classify_vertex(const AngledComplex& x, VertexId v, double tol = kDefaultTol);
std::vector<VertexLinkVerdict> classify_vertices(const AngledComplex& x, double tol = kDefaultTol);

/// Inserts a vertex in the middle of edge e; the new corners get angle pi.
AngledComplex subdivide_edge(const AngledComplex& x, EdgeId e);

}  // namespace catkit
