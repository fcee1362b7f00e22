#pragma once

#include "catkit/angled_complex.hpp"
#include "catkit/generators.hpp"
#include "catkit/oracle.hpp"

#include <array>
#include <string>
#include <vector>

namespace catkit {

/// Triangle of the comparison disc. Corner i sits at vertices[i]; sides[i] is
/// the recorded distance opposite it.
struct CertificateTriangle {
    std::array<int, 3> vertices{};
    std::array<double, 3> sides{};
    std::array<double, 3> angles{};
    bool cat_minus1 = false;
    /// For CAT(-1) triangles: d(x_i, a_i), d(x_i, b_i), d(x_i, c_i).
    std::array<double, 3> mark_sides{};
};

/// The configuration of marks between the projections z, w of x, y and the
/// triangulated comparison disc. Vertex order: x, y, z, w, then a_i, b_i, c_i,
/// y_i for each mark.
struct Prop2Certificate {
    double epsilon = 0.0;
    double error_bound = 0.0;
    /// x and y were exchanged so that t_z <= t_w.
    bool swapped = false;
    double d_x_gamma = 0.0;
    double d_xy = 0.0;
    /// d(x, y) < d(x, gamma).
    bool ball_disjoint = false;
    /// z = w and x, z, y are collinear: the disc is degenerate and has no triangles.
    bool collapsed = false;
    double t_z = 0.0;
    double t_w = 0.0;
    std::vector<double> marks;
    /// Distance from each mark to [x, y].
    std::vector<double> mark_clearance;
    /// Projection parameter of each y_i minus its mark.
    std::vector<double> y_residual;

    std::vector<Location> points;
    std::vector<std::string> names;
    std::vector<CertificateTriangle> triangles;

    int N() const { return static_cast<int>(marks.size()); }
    int a(int i) const { return 4 + 4 * i; }
    int b(int i) const { return 5 + 4 * i; }
    int c(int i) const { return 6 + 4 * i; }
    int y(int i) const { return 7 + 4 * i; }

    /// The planar angled complex with the mixed angle assignment.
    AngledComplex disc() const;
};

/// Marks x_i strictly between z and w qualify when B(x_i, epsilon) misses
/// [x, y] and consecutive marks (with z and w) leave room for a_i and c_i.
/// The disjoint-ball condition is recorded, not enforced.
Prop2Certificate build_prop2_certificate(const MetricOracle& oracle, const MarkedGeodesic& gamma,
                                         const Location& x, const Location& y);

struct Prop2Instance {
    StripComplex patch;
    Location x;
    Location y;
};

/// Fully hyperbolic patch with n marks spaced 2 epsilon + 0.04 apart around the
/// centre of its geodesic, and x, y on the geodesic tanh v = C cosh u in Fermi
/// coordinates, with C chosen so that the projections of x and y clear the
/// outer marks by epsilon.
Prop2Instance make_prop2_instance(int n_marks, double epsilon);

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    /// Worst observed value against its bound; margin = bound + tol - value.
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;
};

struct Prop2Report {
    Verdict verdict = Verdict::Pass;
    int N = 0;
    /// nonpositive, b_bound, gauss_bonnet, count, then angle consistency. A
    /// certificate with a degenerate comparison triangle gets the single check
    /// "disc" instead, counting corners with angle outside (0, 2 pi).
    std::vector<CheckResult> checks;
};

/// Checks the four claims of the certificate; every stored angle must also
/// match its recomputation from the recorded sides. Passing checks turn
/// inconclusive when the distance error exceeds tol.
Prop2Report verify_prop2_certificate(const Prop2Certificate& cert, double tol);

}  // namespace catkit
