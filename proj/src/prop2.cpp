#include "catkit/prop2.hpp"

#include "catkit/contraction.hpp"
#include "catkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace catkit {

namespace {

constexpr int kMinSamples = 64;
constexpr int kBisections = 60;
constexpr double kDegenerate = 1e-9;

TriangleSides sides_of(const std::array<double, 3>& s) { return {s[0], s[1], s[2]}; }

// Angle at p of the H2 comparison triangle with |pq| = pq, |pr| = pr, |qr| = qr.
double h2_angle_at(double pq, double pr, double qr) {
    return comparison_angles({qr, pr, pq}, Curvature::hyperbolic()).alpha;
}

std::array<double, 3> recomputed_angles(const CertificateTriangle& t) {
    if (t.cat_minus1) {
        // Vertices (a, c, b); sides[0] = |cb|, sides[1] = |ba|, sides[2] = |ac|.
        const double ab = t.sides[1];
        const double cb = t.sides[0];
        const double ac = t.sides[2];
        const auto& [xa, xb, xc] = t.mark_sides;
        return {h2_angle_at(ab, xa, xb), h2_angle_at(cb, xc, xb), h2_angle_at(ab, cb, ac)};
    }
    const auto ang = comparison_angles(sides_of(t.sides), Curvature::flat());
    return {ang.alpha, ang.beta, ang.gamma};
}

class Builder {
public:
    Builder(const MetricOracle& oracle, Prop2Certificate& cert) : oracle_(oracle), cert_(cert) {}

    void triangle(int p, int q, int r) {
        CertificateTriangle t;
        t.vertices = {p, q, r};
        t.sides = {dist(q, r), dist(r, p), dist(p, q)};
        const auto ang = recomputed_angles(t);
        t.angles = ang;
        cert_.triangles.push_back(t);
    }

    void cat_triangle(int i, const Location& xi) {
        CertificateTriangle t;
        const int a = cert_.a(i);
        const int b = cert_.b(i);
        const int c = cert_.c(i);
        t.vertices = {a, c, b};
        t.sides = {dist(c, b), dist(b, a), dist(a, c)};
        t.cat_minus1 = true;
        const auto& pts = cert_.points;
        t.mark_sides = {oracle_.distance(xi, pts[a]), oracle_.distance(xi, pts[b]),
                        oracle_.distance(xi, pts[c])};
        t.angles = recomputed_angles(t);
        cert_.triangles.push_back(t);
    }

private:
    double dist(int p, int q) const { return oracle_.distance(cert_.points[p], cert_.points[q]); }

    const MetricOracle& oracle_;
    Prop2Certificate& cert_;
};

// Parameter s of [x, y] whose projection onto gamma is closest to t; ties go
// to the smaller s.
double preimage_on_segment(const MetricOracle& oracle, const GeodesicPath& seg,
                           const GeodesicPath& gamma, double t) {
    const MetricComplex& m = oracle.complex();
    auto proj_t = [&](double s) { return oracle.project(seg.point_at(m, s), gamma).t; };
    const double h = std::max(oracle.error_bound(), 1e-2);
    const int n = std::max(kMinSamples, static_cast<int>(std::ceil(seg.length / h)));
    double prev_s = 0.0;
    double prev_t = proj_t(0.0);
    double best_s = 0.0;
    double best_gap = std::abs(prev_t - t);
    for (int k = 1; k <= n; ++k) {
        const double s = seg.length * k / n;
        const double ts = proj_t(s);
        if (std::abs(ts - t) < best_gap) {
            best_gap = std::abs(ts - t);
            best_s = s;
        }
        if (prev_t < t && ts >= t) {
            double lo = prev_s;
            double hi = s;
            for (int it = 0; it < kBisections; ++it) {
                const double mid = 0.5 * (lo + hi);
                (proj_t(mid) < t ? lo : hi) = mid;
            }
            return hi;
        }
        prev_s = s;
        prev_t = ts;
    }
    return best_s;
}

}  // namespace

AngledComplex Prop2Certificate::disc() const {
    std::map<std::pair<int, int>, EdgeId> index;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<FaceAngles> angles;
    std::vector<std::optional<Curvature>> kappa;
    for (const CertificateTriangle& t : triangles) {
        Face face;
        for (int i = 0; i < 3; ++i) {
            const int p = t.vertices[i];
            const int q = t.vertices[(i + 1) % 3];
            const auto key = std::minmax(p, q);
            auto it = index.find(key);
            if (it == index.end()) {
                it = index.emplace(key, static_cast<EdgeId>(edges.size())).first;
                edges.push_back({key.first, key.second});
            }
            face.boundary.push_back({it->second, p != key.first});
        }
        faces.push_back(face);
        angles.push_back({t.angles[0], t.angles[1], t.angles[2]});
        kappa.push_back(t.cat_minus1 ? Curvature::hyperbolic() : Curvature::flat());
    }
    return AngledComplex(static_cast<int>(points.size()), std::move(edges), std::move(faces),
                         std::move(angles), std::move(kappa));
}

Prop2Certificate build_prop2_certificate(const MetricOracle& oracle, const MarkedGeodesic& gamma,
                                         const Location& x_in, const Location& y_in) {
    if (gamma.path.legs.empty()) {
        throw Error(ErrorKind::DegenerateInput, "degenerate geodesic");
    }
    const double eps = gamma.params.epsilon;
    if (!(eps > 0.0)) {
        throw Error(ErrorKind::Domain, "certificate needs epsilon > 0");
    }
    const MetricComplex& m = oracle.complex();
    Prop2Certificate cert;
    cert.epsilon = eps;
    cert.error_bound = oracle.error_bound();

    Location x = x_in;
    Location y = y_in;
    Projection pz = oracle.project(x, gamma.path);
    Projection pw = oracle.project(y, gamma.path);
    if (pz.t > pw.t) {
        std::swap(x, y);
        std::swap(pz, pw);
        cert.swapped = true;
    }
    cert.t_z = pz.t;
    cert.t_w = pw.t;
    cert.d_x_gamma = pz.distance;
    cert.d_xy = oracle.distance(x, y);
    cert.ball_disjoint = cert.d_xy < cert.d_x_gamma;

    const GeodesicPath seg = oracle.geodesic(x, y);
    double last = cert.t_z - eps;
    for (double t : gamma.marks) {
        if (t - last < 2.0 * eps || t > cert.t_w - eps) {
            continue;
        }
        const double clearance = oracle.project(gamma.path.point_at(m, t), seg).distance;
        if (clearance <= eps) {
            continue;
        }
        cert.marks.push_back(t);
        cert.mark_clearance.push_back(clearance);
        last = t;
    }

    cert.points = {x, y, pz.point, pw.point};
    cert.names = {"x", "y", "z", "w"};
    std::vector<Location> mark_points;
    for (int i = 0; i < cert.N(); ++i) {
        const double t = cert.marks[i];
        const Location xi = gamma.path.point_at(m, t);
        const Location yi = seg.point_at(m, preimage_on_segment(oracle, seg, gamma.path, t));
        cert.y_residual.push_back(oracle.project(yi, gamma.path).t - t);
        const Location bi = oracle.geodesic(xi, yi).point_at(m, eps);
        const std::string k = std::to_string(i + 1);
        cert.points.insert(cert.points.end(), {gamma.path.point_at(m, t - eps), bi,
                                               gamma.path.point_at(m, t + eps), yi});
        cert.names.insert(cert.names.end(), {"a" + k, "b" + k, "c" + k, "y" + k});
        mark_points.push_back(xi);
    }

    Builder build(oracle, cert);
    const int N = cert.N();
    if (N == 0 && oracle.distance(pz.point, pw.point) <= kDegenerate) {
        build.triangle(0, 2, 1);
        cert.points.pop_back();
        cert.names.pop_back();
        const auto& ang = cert.triangles.back().angles;
        if (std::min({ang[0], ang[1], ang[2]}) <= kDegenerate) {
            cert.triangles.clear();
            cert.collapsed = true;
        }
        return cert;
    }
    if (N == 0) {
        build.triangle(0, 2, 3);
        build.triangle(0, 3, 1);
        return cert;
    }
    build.triangle(0, 2, cert.a(0));
    build.triangle(0, cert.a(0), cert.b(0));
    build.triangle(0, cert.b(0), cert.y(0));
    for (int i = 0; i < N; ++i) {
        build.cat_triangle(i, mark_points[i]);
        build.triangle(cert.y(i), cert.b(i), cert.c(i));
        if (i + 1 < N) {
            build.triangle(cert.y(i), cert.c(i), cert.a(i + 1));
            build.triangle(cert.y(i), cert.a(i + 1), cert.b(i + 1));
            build.triangle(cert.y(i), cert.b(i + 1), cert.y(i + 1));
        }
    }
    build.triangle(cert.y(N - 1), cert.c(N - 1), 3);
    build.triangle(cert.y(N - 1), 3, 1);
    return cert;
}

Prop2Instance make_prop2_instance(int n_marks, double epsilon) {
    if (n_marks < 1 || !(epsilon > 0.0)) {
        throw Error(ErrorKind::Domain, "instance needs n >= 1 and epsilon > 0");
    }
    const double spacing = 2.0 * epsilon + 0.04;
    const double reach = 0.5 * (n_marks - 1) * spacing + epsilon + 0.01;
    const double C = 1.0 / std::cosh(reach + 0.01);
    const double v_end = std::atanh(C * std::cosh(reach));
    const double length = 2.0 * (reach + 0.5);
    // Boundary chords of the equidistant at height H sag to chord_mid(H).
    constexpr double cell = 0.1;
    auto chord_mid = [&](double H) {
        const double s = std::cosh(H) * std::sinh(cell / 2.0);
        return std::asinh(std::sinh(H) / std::sqrt(1.0 + s * s));
    };
    double H = v_end + 0.05;
    while (chord_mid(H) < v_end + 0.05) {
        H += 0.05;
    }
    Prop2Instance inst{gen_hyperbolic_patch(length, H, cell), {}, {}};
    auto& gamma = inst.patch.geodesic;
    gamma.params = {epsilon, spacing, spacing};
    for (int i = 0; i < n_marks; ++i) {
        gamma.marks.push_back(0.5 * length + (i - 0.5 * (n_marks - 1)) * spacing);
    }
    const MetricComplex& m = inst.patch.complex;
    auto fermi = [&](double u, double v) {
        return m.chart_locate(ModelPoint{Curvature::hyperbolic(),
                                         {std::cosh(v) * std::cosh(u), std::cosh(v) * std::sinh(u),
                                          std::sinh(v)}});
    };
    inst.x = fermi(-reach, v_end);
    inst.y = fermi(reach, v_end);
    return inst;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

Prop2Report verify_prop2_certificate(const Prop2Certificate& cert, double tol) {
    const bool coarse = cert.error_bound > tol;
    int degenerate = 0;
    for (const CertificateTriangle& t : cert.triangles) {
        for (double a : t.angles) {
            degenerate += (std::isfinite(a) && a > 0.0 && a < 2.0 * kPi) ? 0 : 1;
        }
    }
    if (degenerate > 0) {
        Prop2Report report;
        report.N = cert.N();
        report.verdict = coarse ? Verdict::Inconclusive : Verdict::Fail;
        report.checks.push_back({"disc", report.verdict, static_cast<double>(degenerate), 0.0,
                                 -static_cast<double>(degenerate)});
        return report;
    }
    const AngledComplex disc = cert.disc();
    const int N = cert.N();
    std::vector<FaceId> cat_face(N, -1);
    for (FaceId f = 0; f < disc.face_count(); ++f) {
        if (cert.triangles[f].cat_minus1) {
            const int a = cert.triangles[f].vertices[0];
            cat_face[(a - 4) / 4] = f;
        }
    }
    auto make = [&](std::string name, double value, double bound) {
        CheckResult r{std::move(name), Verdict::Pass, value, bound, bound + tol - value};
        r.verdict = r.margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
        return r;
    };

    double worst_a = -std::numeric_limits<double>::infinity();
    double worst_b = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i) {
        for (int v : {cert.a(i), cert.c(i), cert.y(i)}) {
            worst_a = std::max(worst_a, vertex_curvature(disc, v));
        }
        const double lhs = vertex_curvature(disc, cert.b(i)) - triangle_deficiency(disc, cat_face[i]);
        worst_b = std::max(worst_b, lhs);
    }
    const double b_bound = 4.0 * max_base_angle(cert.epsilon) - kPi;

    double total = 0.0;
    for (VertexId v = 0; v < disc.vertex_count(); ++v) {
        total += vertex_curvature(disc, v);
    }
    for (FaceId f : cat_face) {
        total += face_curvature(disc, f);
    }
    if (cert.collapsed) {
        total = 2.0 * kPi;
    }

    double worst_angle = 0.0;
    for (const CertificateTriangle& t : cert.triangles) {
        const auto expect = recomputed_angles(t);
        for (int i = 0; i < 3; ++i) {
            worst_angle = std::max(worst_angle, std::abs(t.angles[i] - expect[i]));
        }
    }

    Prop2Report report;
    report.N = N;
    report.checks.push_back(make("nonpositive", N > 0 ? worst_a : 0.0, 0.0));
    report.checks.push_back(make("b_bound", N > 0 ? worst_b : b_bound, b_bound));
    report.checks.push_back(make("gauss_bonnet", std::abs(total - 2.0 * kPi), 0.0));
    report.checks.push_back(make("count", static_cast<double>(N), eta(cert.epsilon)));
    report.checks.push_back(make("angles", worst_angle, 0.0));

    bool any_fail = false;
    bool any_open = false;
    for (CheckResult& r : report.checks) {
        if (r.verdict == Verdict::Pass && coarse) {
            r.verdict = Verdict::Inconclusive;
        }
        any_fail = any_fail || r.verdict == Verdict::Fail;
        any_open = any_open || r.verdict == Verdict::Inconclusive;
    }
    report.verdict = any_fail ? Verdict::Fail : any_open ? Verdict::Inconclusive : Verdict::Pass;
    return report;
}

}  // namespace catkit
