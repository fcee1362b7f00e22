#pragma once

#include "catkit/metric.hpp"

#include <string>
#include <vector>

namespace catkit {

enum class StandardKind { DiscTriangle, SphereTetrahedron, FlatTorus };

MetricComplex gen_standard(StandardKind kind);

/// Side of the regular n-gon in unit H2 with the given vertex angle:
/// cosh(s/2) = cos(pi/n) / sin(angle/2).
double regular_polygon_side(int n, double vertex_angle);

/// A closed surface piece of a gluing. Genus 1 is a flat square, genus g >= 2
/// the regular right-angled hyperbolic 4g-gon. Both are fanned from the centre
/// through the side midpoints. `loops` names the 2g canonical loops in the
/// order of the boundary word [l1, l2][l3, l4]...
struct SurfacePiece {
    std::string name;
    int genus = 1;
    std::vector<std::string> loops;
};

struct LoopGluing {
    int piece_a = 0;
    std::string loop_a;
    int piece_b = 0;
    std::string loop_b;
};

struct SurfaceGluingSpec {
    std::vector<SurfacePiece> pieces;
    std::vector<LoopGluing> gluings;
    /// Common canonical-loop length; hyperbolic pieces force their side length.
    double loop_length = 0.0;
};

/// No three pieces are pairwise glued.
bool gluing_graph_triangle_free(const SurfaceGluingSpec& spec);

struct GluedComplex {
    MetricComplex complex;
    /// Piece index of every face.
    std::vector<int> face_piece;
    /// The vertex every piece's polygon corners map to.
    std::vector<VertexId> piece_base_vertex;
};

GluedComplex gen_gluing(const SurfaceGluingSpec& spec);

/// Genus g >= 2 surface from the right-angled 4g-gon, fanned into 8g triangles.
MetricComplex gen_surface(int genus);

struct Figure3Complex {
    GluedComplex glued;
    std::string presentation;
};

/// Genus-two surface with seven flat tori glued along canonical loops.
Figure3Complex gen_figure3();

struct StripComplex {
    MetricComplex complex;
    MarkedGeodesic geodesic;
    double half_width = 0.0;
    double length = 0.0;
};

/// Strip of width 2 (2 epsilon + 0.5) and length (n + 1) L whose central line is
/// an edge-path geodesic. Around each mark t = jL a band of Fermi-coordinate
/// hyperbolic triangles spans the full width; the rest is flat.
StripComplex gen_beaded_strip(int n_beads, double L, double epsilon);

/// Fully hyperbolic Fermi-coordinate band around a geodesic of the given
/// length, with a global H2 chart. Marks are left empty.
StripComplex gen_hyperbolic_patch(double length, double half_width, double cell = 0.25);

/// Flat rectangle [0, length] x [-half_width, half_width] with a global chart;
/// the central line is set when the row count is even.
StripComplex gen_flat_strip(double length, double half_width, double cell);

}  // namespace catkit
