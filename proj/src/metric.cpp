#include "catkit/metric.hpp"

#include "catkit/error.hpp"
#include "catkit/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace catkit {

namespace {

constexpr double kZeroWeight = 1e-12;
constexpr double kAngleMismatch = 1e-6;
constexpr double kChartLengthTol = 1e-9;

std::array<double, 3> lift_point(const ModelPoint& p) {
    if (p.kappa.is_flat()) {
        return {p.coords[0], p.coords[1], 1.0};
    }
    return p.coords;
}

ModelPoint unlift(Curvature kappa, const std::array<double, 3>& v) {
    if (kappa.is_flat()) {
        return ModelPoint::euclidean(v[0] / v[2], v[1] / v[2]);
    }
    const double norm = std::sqrt(-minkowski(v, v));
    return ModelPoint{kappa, {v[0] / norm, v[1] / norm, v[2] / norm}};
}

std::array<double, 9> inverse_of_columns(const std::array<std::array<double, 3>, 3>& cols) {
    Eigen::Matrix3d a;
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r) {
            a(r, c) = cols[c][r];
        }
    }
    const Eigen::Matrix3d inv = a.inverse();
    std::array<double, 9> out{};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out[3 * r + c] = inv(r, c);
        }
    }
    return out;
}

std::array<double, 3> solve_weights(const std::array<double, 9>& inv, const std::array<double, 3>& v) {
    std::array<double, 3> w{};
    for (int r = 0; r < 3; ++r) {
        w[r] = inv[3 * r] * v[0] + inv[3 * r + 1] * v[1] + inv[3 * r + 2] * v[2];
    }
    const double sum = w[0] + w[1] + w[2];
    for (double& x : w) {
        x /= sum;
    }
    return w;
}

std::array<double, 3> combine(const std::array<double, 3>& w,
                              const std::array<std::array<double, 3>, 3>& cols) {
    std::array<double, 3> v{0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        for (int r = 0; r < 3; ++r) {
            v[r] += w[i] * cols[i][r];
        }
    }
    return v;
}

/// Weights of the point at arc length s along a side of length len.
std::pair<double, double> side_weights(Curvature kappa, double len, double s) {
    if (kappa.is_flat()) {
        return {(len - s) / len, s / len};
    }
    const double k = kappa.scale();
    const double a = std::sinh(k * (len - s));
    const double b = std::sinh(k * s);
    return {a / (a + b), b / (a + b)};
}

}  // namespace

MetricComplex MetricComplex::realize(const AngledComplex& x, std::vector<double> edge_lengths,
                                     std::vector<std::optional<Curvature>> face_kappa) {
    if (static_cast<int>(edge_lengths.size()) != x.edge_count()) {
        throw Error(ErrorKind::InvalidInput, "edge length count does not match the edge count");
    }
    for (std::size_t e = 0; e < edge_lengths.size(); ++e) {
        if (!(edge_lengths[e] > 0.0) || !std::isfinite(edge_lengths[e])) {
            throw Error(ErrorKind::InvalidInput,
                        "edge " + std::to_string(e) + " needs a positive finite length");
        }
    }
    if (!face_kappa.empty() && static_cast<int>(face_kappa.size()) != x.face_count()) {
        throw Error(ErrorKind::InvalidInput, "face curvature count does not match the face count");
    }
    MetricComplex m;
    m.lengths_ = std::move(edge_lengths);
    std::vector<FaceAngles> angles(x.face_count());
    std::vector<std::optional<Curvature>> kappas(x.face_count());
    for (FaceId f = 0; f < x.face_count(); ++f) {
        const Face& face = x.face(f);
        if (face.size() != 3) {
            throw Error(ErrorKind::NeedsTriangulation,
                        "face " + std::to_string(f) + " is not a triangle");
        }
        Curvature k = Curvature::flat();
        if (!face_kappa.empty() && face_kappa[f]) {
            k = *face_kappa[f];
        } else if (x.face_kappa(f)) {
            k = *x.face_kappa(f);
        }
        kappas[f] = k;
        const TriangleSides sides{m.lengths_[face.boundary[1].edge], m.lengths_[face.boundary[2].edge],
                                  m.lengths_[face.boundary[0].edge]};
        const EmbeddedTriangle tri = embed_comparison_triangle(sides, k);
        const TriangleAngles ang = comparison_angles(sides, k);
        if (tri.degenerate || ang.degenerate) {
            throw Error(ErrorKind::InvalidSides,
                        "face " + std::to_string(f) + " has degenerate side lengths");
        }
        const std::array<double, 3> computed{ang.alpha, ang.beta, ang.gamma};
        angles[f] = FaceAngles(computed.begin(), computed.end());
        for (int i = 0; i < 3; ++i) {
            const auto stored = x.angle({f, i});
            if (stored && std::abs(*stored - computed[i]) > kAngleMismatch) {
                throw Error(ErrorKind::InconsistentRealization,
                            "corner (face " + std::to_string(f) + ", position " + std::to_string(i) +
                                ") stores " + std::to_string(*stored) + " but the model gives " +
                                std::to_string(computed[i]));
            }
        }
        m.kappa_.push_back(k);
        m.corners_.push_back({tri.p, tri.q, tri.r});
        m.frames_.push_back(
            {inverse_of_columns({lift_point(tri.p), lift_point(tri.q), lift_point(tri.r)})});
    }
    m.base_ = x.with_face_kappa(std::move(kappas)).with_angles(std::move(angles));
    m.edge_uses_.resize(x.edge_count());
    m.vertex_corners_.resize(x.vertex_count());
    for (FaceId f = 0; f < x.face_count(); ++f) {
        for (int i = 0; i < 3; ++i) {
            m.edge_uses_[x.face(f).boundary[i].edge].push_back({f, i});
            m.vertex_corners_[x.corner_vertex({f, i})].push_back({f, i});
        }
    }
    return m;
}

ModelPoint MetricComplex::model_point(const Location& loc) const {
    const auto& c = corners_.at(loc.face);
    const auto v = combine(loc.weights, {lift_point(c[0]), lift_point(c[1]), lift_point(c[2])});
    return unlift(kappa_[loc.face], v);
}

Location MetricComplex::locate(FaceId f, const ModelPoint& p) const {
    return {f, solve_weights(frames_.at(f).inverse, lift_point(p))};
}

double MetricComplex::face_distance(const Location& a, const Location& b) const {
    if (a.face != b.face) {
        throw Error(ErrorKind::InvalidInput, "face_distance needs locations in one face");
    }
    return model_distance(model_point(a), model_point(b));
}

Location MetricComplex::vertex_location(VertexId v) const {
    const auto& corners = vertex_corners_.at(v);
    if (corners.empty()) {
        throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " lies in no face");
    }
    Location loc{corners.front().face, {0.0, 0.0, 0.0}};
    loc.weights[corners.front().position] = 1.0;
    return loc;
}

Location MetricComplex::edge_point(EdgeId e, double s, FaceId f, int position) const {
    const EdgeUse& use = base_.face(f).boundary.at(position);
    if (use.edge != e) {
        throw Error(ErrorKind::InvalidInput, "face position does not traverse the edge");
    }
    const double len = lengths_.at(e);
    s = std::clamp(s, 0.0, len);
    const auto [w_tail, w_head] = side_weights(kappa_[f], len, s);
    Location loc{f, {0.0, 0.0, 0.0}};
    const int start = position;
    const int end = (position + 1) % 3;
    loc.weights[start] = use.reversed ? w_head : w_tail;
    loc.weights[end] = use.reversed ? w_tail : w_head;
    return loc;
}

Location MetricComplex::edge_point(EdgeId e, double s) const {
    const auto& uses = edge_uses_.at(e);
    if (uses.empty()) {
        throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e) + " lies in no face");
    }
    return edge_point(e, s, uses.front().face, uses.front().position);
}

std::vector<Location> MetricComplex::charts_of(const Location& loc) const {
    int zeros = 0;
    int nonzero = -1;
    int zero = -1;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(loc.weights[i]) <= kZeroWeight) {
            ++zeros;
            zero = i;
        } else {
            nonzero = i;
        }
    }
    if (zeros == 0) {
        return {loc};
    }
    if (zeros >= 2) {
        const VertexId v = base_.corner_vertex({loc.face, nonzero});
        std::vector<Location> out;
        for (const Corner& c : vertex_corners_.at(v)) {
            Location l{c.face, {0.0, 0.0, 0.0}};
            l.weights[c.position] = 1.0;
            out.push_back(l);
        }
        return out;
    }
    const int position = (zero + 1) % 3;
    const EdgeUse& use = base_.face(loc.face).boundary[position];
    Location start{loc.face, {0.0, 0.0, 0.0}};
    start.weights[position] = 1.0;
    const double from_start = face_distance(start, loc);
    const double len = lengths_[use.edge];
    const double s = use.reversed ? len - from_start : from_start;
    std::vector<Location> out;
    for (const Corner& c : edge_uses_[use.edge]) {
        out.push_back(edge_point(use.edge, s, c.face, c.position));
    }
    return out;
}

MetricComplex MetricComplex::with_global_chart(std::vector<ModelPoint> chart) const {
    if (static_cast<int>(chart.size()) != base_.vertex_count()) {
        throw Error(ErrorKind::InvalidInput, "chart size does not match the vertex count");
    }
    MetricComplex out = *this;
    out.chart_frames_.clear();
    for (FaceId f = 0; f < face_count(); ++f) {
        const Face& face = base_.face(f);
        std::array<std::array<double, 3>, 3> cols{};
        for (int i = 0; i < 3; ++i) {
            const ModelPoint& a = chart[base_.start_vertex(face.boundary[i])];
            const ModelPoint& b = chart[base_.end_vertex(face.boundary[i])];
            if (!(a.kappa == kappa_[f])) {
                throw Error(ErrorKind::InconsistentRealization,
                            "chart curvature differs from face " + std::to_string(f));
            }
            const double d = model_distance(a, b);
            if (std::abs(d - lengths_[face.boundary[i].edge]) > kChartLengthTol) {
                throw Error(ErrorKind::InconsistentRealization,
                            "chart does not reproduce the sides of face " + std::to_string(f));
            }
            cols[i] = lift_point(a);
        }
        out.chart_frames_.push_back({inverse_of_columns(cols)});
    }
    out.chart_ = std::move(chart);
    return out;
}

ModelPoint MetricComplex::chart_point(const Location& loc) const {
    if (!chart_) {
        throw Error(ErrorKind::InvalidInput, "complex has no global chart");
    }
    const Face& face = base_.face(loc.face);
    std::array<std::array<double, 3>, 3> cols{};
    for (int i = 0; i < 3; ++i) {
        cols[i] = lift_point((*chart_)[base_.start_vertex(face.boundary[i])]);
    }
    return unlift(kappa_[loc.face], combine(loc.weights, cols));
}

Location MetricComplex::chart_locate(const ModelPoint& p) const {
    if (!chart_) {
        throw Error(ErrorKind::InvalidInput, "complex has no global chart");
    }
    const auto v = lift_point(p);
    FaceId best_face = -1;
    std::array<double, 3> best_w{};
    double best_min = -std::numeric_limits<double>::infinity();
    for (FaceId f = 0; f < face_count(); ++f) {
        const auto w = solve_weights(chart_frames_[f].inverse, v);
        const double lo = std::min({w[0], w[1], w[2]});
        if (lo > best_min) {
            best_min = lo;
            best_face = f;
            best_w = w;
        }
    }
    if (best_face < 0 || best_min < -1e-9) {
        throw Error(ErrorKind::InvalidInput, "point lies outside the charted complex");
    }
    for (double& w : best_w) {
        w = std::max(w, 0.0);
    }
    const double sum = best_w[0] + best_w[1] + best_w[2];
    for (double& w : best_w) {
        w /= sum;
    }
    return {best_face, best_w};
}

Location GeodesicPath::point_at(const MetricComplex& m, double t) const {
    if (legs.empty()) {
        throw Error(ErrorKind::DegenerateInput, "path has no legs");
    }
    t = std::clamp(t, 0.0, length);
    double start = 0.0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const PathLeg& leg = legs[i];
        if (t <= start + leg.length || i + 1 == legs.size()) {
            const double s = std::clamp(t - start, 0.0, leg.length);
            const ModelPoint p = leg.length > 0.0 ? point_along(leg.from, leg.to, s) : leg.from;
            return leg.face == kGlobalChart ? m.chart_locate(p) : m.locate(leg.face, p);
        }
        start += leg.length;
    }
    throw Error(ErrorKind::DegenerateInput, "unreachable path parameter");
}

Location random_location(const MetricComplex& m, std::mt19937_64& rng) {
    const FaceId f = uniform_index(rng, m.face_count());
    double a = uniform(rng, 0.0, 1.0);
    double b = uniform(rng, 0.0, 1.0);
    if (a > b) {
        std::swap(a, b);
    }
    return {f, {a, b - a, 1.0 - b}};
}

void MarkedGeodesic::validate() const {
    params.validate();
    if (path.legs.empty() || !(path.length > 0.0)) {
        throw Error(ErrorKind::DegenerateInput, "marked geodesic has an empty path");
    }
    const double hi = params.L + params.R_min + params.epsilon;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i] < 0.0 || marks[i] > path.length) {
            throw Error(ErrorKind::InvalidInput, "mark lies outside the path");
        }
        if (i > 0) {
            const double gap = marks[i] - marks[i - 1];
            if (gap < params.epsilon || gap > hi) {
                throw Error(ErrorKind::InvalidInput,
                            "mark gap " + std::to_string(gap) + " outside [epsilon, L + R + epsilon]");
            }
        }
    }
}

GeodesicPath edge_path(const MetricComplex& m, const std::vector<EdgeUse>& uses) {
    GeodesicPath path;
    const AngledComplex& x = m.base();
    for (std::size_t k = 0; k < uses.size(); ++k) {
        const EdgeUse& use = uses[k];
        if (k > 0 && x.end_vertex(uses[k - 1]) != x.start_vertex(use)) {
            throw Error(ErrorKind::InvalidInput, "edge path is not connected");
        }
        const auto& uses_of_edge = m.edge_uses(use.edge);
        if (uses_of_edge.empty()) {
            throw Error(ErrorKind::InvalidInput, "edge path uses an edge in no face");
        }
        const auto [f, i] = uses_of_edge.front();
        const bool same = x.face(f).boundary[i].reversed == use.reversed;
        const int from = same ? i : (i + 1) % 3;
        const int to = same ? (i + 1) % 3 : i;
        path.legs.push_back(
            {f, m.corner_point(f, from), m.corner_point(f, to), m.edge_length(use.edge)});
        path.length += m.edge_length(use.edge);
    }
    return path;
}

namespace {

// Power of two, so halving h refines the node set.
int nested_subdivision(double len, double h) {
    int m = 1;
    while (m < len / h - 1e-12) {
        m *= 2;
    }
    return m;
}

}  // namespace

DistanceMesh::DistanceMesh(const MetricComplex& m, double h)
    : complex_(std::make_shared<const MetricComplex>(m)), h_(h) {
    if (!(h > 0.0)) {
        throw Error(ErrorKind::Domain, "mesh parameter must be positive");
    }
    const AngledComplex& x = complex_->base();
    std::vector<int> first_interior(x.edge_count());
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        node_location_.push_back(complex_->vertex_corners(v).empty() ? Location{}
                                                                    : complex_->vertex_location(v));
    }
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        const double len = complex_->edge_length(e);
        const int count = nested_subdivision(len, h);
        subdivisions_.push_back(count);
        first_interior[e] = static_cast<int>(node_location_.size());
        for (int k = 1; k < count; ++k) {
            node_location_.push_back(complex_->edge_point(e, len * k / count));
        }
    }
    incidences_.resize(node_location_.size());
    faces_.resize(x.face_count());
    for (FaceId f = 0; f < x.face_count(); ++f) {
        FaceNodes& fn = faces_[f];
        for (int p = 0; p < 3; ++p) {
            const EdgeUse& use = x.face(f).boundary[p];
            fn.nodes.push_back(x.start_vertex(use));
            fn.points.push_back(complex_->corner_point(f, p));
            const int count = subdivisions_[use.edge];
            const double len = complex_->edge_length(use.edge);
            for (int k = 1; k < count; ++k) {
                const int along = use.reversed ? count - k : k;
                fn.nodes.push_back(first_interior[use.edge] + along - 1);
                fn.points.push_back(
                    complex_->model_point(complex_->edge_point(use.edge, len * along / count, f, p)));
            }
        }
        const std::size_t n = fn.nodes.size();
        fn.distances.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = model_distance(fn.points[i], fn.points[j]);
                fn.distances[i * n + j] = d;
                fn.distances[j * n + i] = d;
            }
            incidences_[fn.nodes[i]].push_back({f, static_cast<int>(i)});
        }
    }
}

DistanceField::DistanceField(const DistanceMesh& mesh, const Location& source)
    : mesh_(&mesh), source_(source) {
    const MetricComplex& m = mesh.complex();
    source_charts_ = m.charts_of(source);
    const int n = mesh.node_count();
    dist_.assign(n, std::numeric_limits<double>::infinity());
    pred_node_.assign(n, -1);
    pred_face_.assign(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (const Location& chart : source_charts_) {
        const ModelPoint p = m.model_point(chart);
        const auto& fn = mesh.faces_[chart.face];
        for (std::size_t i = 0; i < fn.nodes.size(); ++i) {
            const double d = model_distance(p, fn.points[i]);
            const int node = fn.nodes[i];
            if (d < dist_[node]) {
                dist_[node] = d;
                pred_node_[node] = -1;
                pred_face_[node] = chart.face;
                queue.push({d, node});
            }
        }
    }
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist_[u]) {
            continue;
        }
        for (const auto& inc : mesh.incidences_[u]) {
            const auto& fn = mesh.faces_[inc.face];
            const std::size_t size = fn.nodes.size();
            const double* row = &fn.distances[inc.slot * size];
            for (std::size_t j = 0; j < size; ++j) {
                const int v = fn.nodes[j];
                const double nd = d + row[j];
                if (nd < dist_[v]) {
                    dist_[v] = nd;
                    pred_node_[v] = u;
                    pred_face_[v] = inc.face;
                    queue.push({nd, v});
                }
            }
        }
    }
}

DistanceField::Best DistanceField::best(const Location& q) const {
    const MetricComplex& m = mesh_->complex();
    Best best{std::numeric_limits<double>::infinity(), -1, -1, ModelPoint{}};
    for (const Location& chart : m.charts_of(q)) {
        const ModelPoint target = m.model_point(chart);
        for (const Location& src : source_charts_) {
            if (src.face == chart.face) {
                const double d = model_distance(m.model_point(src), target);
                if (d < best.distance) {
                    best = {d, chart.face, -1, target};
                }
            }
        }
        const auto& fn = mesh_->faces_[chart.face];
        for (std::size_t i = 0; i < fn.nodes.size(); ++i) {
            const double d = dist_[fn.nodes[i]] + model_distance(fn.points[i], target);
            if (d < best.distance) {
                best = {d, chart.face, static_cast<int>(i), target};
            }
        }
    }
    if (!std::isfinite(best.distance)) {
        throw Error(ErrorKind::Unreachable, "target is not reachable from the source");
    }
    return best;
}

double DistanceField::distance_to(const Location& q) const { return best(q).distance; }

GeodesicPath DistanceField::path_to(const Location& q) const {
    const MetricComplex& m = mesh_->complex();
    const Best b = best(q);
    auto source_point = [&](FaceId f) {
        for (const Location& src : source_charts_) {
            if (src.face == f) {
                return m.model_point(src);
            }
        }
        throw Error(ErrorKind::InvalidInput, "source has no chart in the face");
    };
    auto node_point = [&](int node, FaceId f) {
        const auto& fn = mesh_->faces_[f];
        for (std::size_t i = 0; i < fn.nodes.size(); ++i) {
            if (fn.nodes[i] == node) {
                return fn.points[i];
            }
        }
        throw Error(ErrorKind::InvalidInput, "node is not on the face boundary");
    };
    std::vector<PathLeg> reversed;
    if (b.slot < 0) {
        const ModelPoint from = source_point(b.face);
        reversed.push_back({b.face, from, b.target, model_distance(from, b.target)});
    } else {
        const auto& fn = mesh_->faces_[b.face];
        const ModelPoint from = fn.points[b.slot];
        reversed.push_back({b.face, from, b.target, model_distance(from, b.target)});
        int u = fn.nodes[b.slot];
        while (true) {
            const FaceId f = pred_face_[u];
            const ModelPoint to = node_point(u, f);
            const int prev = pred_node_[u];
            const ModelPoint start = prev < 0 ? source_point(f) : node_point(prev, f);
            reversed.push_back({f, start, to, model_distance(start, to)});
            if (prev < 0) {
                break;
            }
            u = prev;
        }
    }
    GeodesicPath path;
    path.mesh = mesh_->h();
    path.legs.assign(reversed.rbegin(), reversed.rend());
    for (const PathLeg& leg : path.legs) {
        path.length += leg.length;
    }
    return path;
}

double approx_distance(const DistanceMesh& mesh, const Location& p, const Location& q) {
    return DistanceField(mesh, p).distance_to(q);
}

GeodesicPath approx_geodesic(const DistanceMesh& mesh, const Location& p, const Location& q) {
    return DistanceField(mesh, p).path_to(q);
}

Projection project_to_path(const DistanceField& field, const GeodesicPath& path, double h) {
    if (path.legs.empty()) {
        throw Error(ErrorKind::DegenerateInput, "cannot project onto an empty path");
    }
    const MetricComplex& m = field.mesh().complex();
    auto eval = [&](double t) { return field.distance_to(path.point_at(m, t)); };
    const int n = std::max(1, static_cast<int>(std::ceil(path.length / h)));
    int best_k = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
        const double value = eval(path.length * k / n);
        if (value < best_value) {
            best_value = value;
            best_k = k;
        }
    }
    double best_t = path.length * best_k / n;
    double lo = path.length * std::max(0, best_k - 1) / n;
    double hi = path.length * std::min(n, best_k + 1) / n;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - ratio * (hi - lo);
    double b = lo + ratio * (hi - lo);
    double fa = eval(a);
    double fb = eval(b);
    for (int iter = 0; iter < 60 && hi - lo > 1e-12; ++iter) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = eval(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = eval(b);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fmid = eval(mid);
    if (fmid < best_value) {
        best_value = fmid;
        best_t = mid;
    }
    return {best_t, path.point_at(m, best_t), best_value};
}

ShadowResult shadow_member(const DistanceMesh& mesh, const Location& o, const Location& y,
                           const Location& z, double R) {
    const GeodesicPath segment = approx_geodesic(mesh, o, y);
    const DistanceField from_z(mesh, z);
    const Projection proj = project_to_path(from_z, segment, mesh.h());
    const double slack = 2.0 * mesh.h();
    return {proj.distance <= R + slack, proj.distance, slack};
}

}  // namespace catkit
