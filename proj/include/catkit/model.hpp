#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace catkit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-9;

/// Curvature of a model plane M2_kappa. Only kappa <= 0 is representable.
class Curvature {
public:
    constexpr Curvature() = default;
    explicit Curvature(double kappa);

    static Curvature flat() { return Curvature(0.0); }
    static Curvature hyperbolic() { return Curvature(-1.0); }

    double value() const { return kappa_; }
    bool is_flat() const { return kappa_ == 0.0; }
    /// sqrt(-kappa): multiply lengths by this to work in unit H2.
    double scale() const;

    friend bool operator==(Curvature a, Curvature b) { return a.kappa_ == b.kappa_; }

private:
    double kappa_ = 0.0;
};

/// A point of M2_kappa. Flat points use (x, y, 0); hyperbolic points live on
/// the unit hyperboloid x0^2 - x1^2 - x2^2 = 1, x0 > 0, and distances are
/// rescaled by 1/sqrt(-kappa).
struct ModelPoint {
    Curvature kappa;
    std::array<double, 3> coords{0.0, 0.0, 0.0};

    static ModelPoint euclidean(double x, double y);
    /// Lifts (x1, x2) onto the hyperboloid.
    static ModelPoint hyperboloid(Curvature kappa, double x1, double x2);
    /// Point at (unit-scale) polar coordinates around the hyperboloid apex.
    static ModelPoint polar(Curvature kappa, double radius, double theta);
    static ModelPoint origin(Curvature kappa);

    /// Re-projects onto the hyperboloid (no-op for flat points).
    ModelPoint normalized() const;
};

/// Side lengths of a triangle pqr: a = d(q,r), b = d(r,p), c = d(p,q).
struct TriangleSides {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Angles at p, q, r, each opposite the matching side.
struct TriangleAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    bool degenerate = false;

    double sum() const { return alpha + beta + gamma; }
};

/// Minkowski pairing -x0 y0 + x1 y1 + x2 y2.
double minkowski(const std::array<double, 3>& u, const std::array<double, 3>& v);

double model_distance(const ModelPoint& p, const ModelPoint& q);

/// Angles of the comparison triangle in M2_kappa. Sides within `tol` of the
/// triangle inequality give the flagged degenerate result {pi, 0, 0}.
TriangleAngles comparison_angles(const TriangleSides& sides, Curvature kappa,
                                 double tol = kDefaultTol);

/// Third angle of the hyperbolic triangle with angles alpha, beta and
/// included side c: cos(gamma) = sin(alpha) sin(beta) cosh(c) - cos(alpha) cos(beta).
double angle_from_angles_and_side(double alpha, double beta, double c, Curvature kappa,
                                  double tol = kDefaultTol);

struct EmbeddedTriangle {
    ModelPoint p;
    ModelPoint q;
    ModelPoint r;
    bool degenerate = false;
};

/// p at the origin, q on the positive first axis, r in the upper half.
EmbeddedTriangle embed_comparison_triangle(const TriangleSides& sides, Curvature kappa,
                                           double tol = kDefaultTol);

/// Point on the geodesic [p, q] at distance s from p.
ModelPoint point_along(const ModelPoint& p, const ModelPoint& q, double s);

/// Riemannian angle at p between the geodesics towards q and r.
double model_angle(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r);

struct AngleEstimate {
    double angle = 0.0;
    double error = 0.0;
    int samples_used = 0;
};

struct AlexandrovOptions {
    double tolerance = 1e-8;
};

/// Alexandrov angle at a common start point from distance samples taken at
/// t0, t0/2, t0/4, ...: `from_base_a[k] = d(p, c_a(t_k))`,
/// `from_base_b[k] = d(p, c_b(t_k))`, `between[k] = d(c_a(t_k), c_b(t_k))`.
/// Richardson extrapolation of the Euclidean comparison angles.
AngleEstimate alexandrov_angle(std::span<const double> from_base_a,
                               std::span<const double> from_base_b,
                               std::span<const double> between,
                               AlexandrovOptions options = {});

/// Convenience overload sampling two paths through a distance oracle.
template <class Point, class Path, class Distance>
    requires std::invocable<Distance&, const Point&, const Point&>
AngleEstimate alexandrov_angle(const Point& base, const Path& path_a, const Path& path_b,
                               Distance&& distance, AlexandrovOptions options = {}) {
    std::vector<double> da, db, dab;
    for (std::size_t k = 0; k < path_a.size() && k < path_b.size(); ++k) {
        da.push_back(distance(base, path_a[k]));
        db.push_back(distance(base, path_b[k]));
        dab.push_back(distance(path_a[k], path_b[k]));
    }
    return alexandrov_angle(da, db, dab, options);
}

/// A point on the boundary of a triangle pqr: side 0 = [p,q], 1 = [q,r],
/// 2 = [r,p]; `s` is arc length from the side's first vertex.
struct SidePoint {
    int side = 0;
    double s = 0.0;
};

struct CatWitness {
    SidePoint x;
    SidePoint y;
    double distance = 0.0;
    double comparison_distance = 0.0;
};

struct CatCheckResult {
    bool pass = true;
    int pairs_checked = 0;
    std::optional<CatWitness> witness;
};

using SideDistanceOracle = std::function<double(const SidePoint&, const SidePoint&)>;

/// Samples pairs on the triangle's sides and checks d(x,y) <= d_kappa(x', y') + tol
/// against comparison points.
CatCheckResult cat_inequality_check(const TriangleSides& sides, const SideDistanceOracle& oracle,
                                    Curvature kappa, int samples, std::uint64_t seed,
                                    double tol = kDefaultTol);

}  // namespace catkit
