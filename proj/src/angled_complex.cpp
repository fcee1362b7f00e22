#include "catkit/angled_complex.hpp"

#include "catkit/error.hpp"

#include <cmath>
#include <queue>
#include <string>

namespace catkit {

namespace {

std::string corner_name(const Corner& c) {
    return "corner (face " + std::to_string(c.face) + ", position " + std::to_string(c.position) +
           ")";
}

}  // namespace

AngledComplex::AngledComplex(int vertex_count, std::vector<Edge> edges, std::vector<Face> faces,
                             std::vector<FaceAngles> angles,
                             std::vector<std::optional<Curvature>> face_kappa)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      angles_(std::move(angles)),
      kappa_(std::move(face_kappa)) {
    if (angles_.empty()) {
        angles_.resize(faces_.size());
    }
    if (kappa_.empty()) {
        kappa_.resize(faces_.size());
    }
    for (std::size_t f = 0; f < faces_.size() && f < angles_.size(); ++f) {
        if (angles_[f].empty()) {
            angles_[f].resize(faces_[f].size());
        }
    }
    validate();
}

void AngledComplex::validate() const {
    if (vertex_count_ < 0) {
        throw Error(ErrorKind::InvalidComplex, "negative vertex count");
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.tail < 0 || edge.tail >= vertex_count_ || edge.head < 0 ||
            edge.head >= vertex_count_) {
            throw Error(ErrorKind::InvalidComplex,
                        "edge " + std::to_string(e) + " has an endpoint out of range");
        }
    }
    if (angles_.size() != faces_.size() || kappa_.size() != faces_.size()) {
        throw Error(ErrorKind::InvalidComplex, "per-face data does not match the face count");
    }
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const Face& face = faces_[f];
        if (face.boundary.empty()) {
            throw Error(ErrorKind::InvalidComplex, "face " + std::to_string(f) + " is empty");
        }
        if (angles_[f].size() != face.size()) {
            throw Error(ErrorKind::InvalidComplex,
                        "face " + std::to_string(f) + " has the wrong number of corner angles");
        }
        for (std::size_t i = 0; i < face.size(); ++i) {
            const EdgeUse& use = face.boundary[i];
            if (use.edge < 0 || use.edge >= edge_count()) {
                throw Error(ErrorKind::InvalidComplex,
                            "face " + std::to_string(f) + " uses an unknown edge");
            }
        }
        for (std::size_t i = 0; i < face.size(); ++i) {
            const EdgeUse& now = face.boundary[i];
            const EdgeUse& next = face.boundary[(i + 1) % face.size()];
            if (end_vertex(now) != start_vertex(next)) {
                throw Error(ErrorKind::InvalidComplex,
                            "face " + std::to_string(f) + " boundary is not a closed edge path");
            }
        }
        for (std::size_t i = 0; i < face.size(); ++i) {
            const auto& a = angles_[f][i];
            if (a && !(*a > 0.0 && *a < 2.0 * kPi)) {
                throw Error(ErrorKind::InvalidComplex,
                            corner_name({static_cast<int>(f), static_cast<int>(i)}) +
                                " has angle outside (0, 2pi): " + std::to_string(*a));
            }
        }
    }
}

std::optional<double> AngledComplex::angle(const Corner& c) const {
    return angles_.at(c.face).at(c.position);
}

VertexId AngledComplex::start_vertex(const EdgeUse& use) const {
    const Edge& e = edges_.at(use.edge);
    return use.reversed ? e.head : e.tail;
}

VertexId AngledComplex::end_vertex(const EdgeUse& use) const {
    const Edge& e = edges_.at(use.edge);
    return use.reversed ? e.tail : e.head;
}

VertexId AngledComplex::corner_vertex(const Corner& c) const {
    return start_vertex(faces_.at(c.face).boundary.at(c.position));
}

std::vector<Corner> AngledComplex::corners_at(VertexId v) const {
    std::vector<Corner> out;
    for (int f = 0; f < face_count(); ++f) {
        for (int i = 0; i < static_cast<int>(faces_[f].size()); ++i) {
            if (start_vertex(faces_[f].boundary[i]) == v) {
                out.push_back({f, i});
            }
        }
    }
    return out;
}

std::vector<FaceId> AngledComplex::faces_at(VertexId v) const {
    std::vector<FaceId> out;
    for (const Corner& c : corners_at(v)) {
        if (out.empty() || out.back() != c.face) {
            out.push_back(c.face);
        }
    }
    return out;
}

bool AngledComplex::angles_complete() const {
    for (const auto& face : angles_) {
        for (const auto& a : face) {
            if (!a) {
                return false;
            }
        }
    }
    return true;
}

int AngledComplex::euler_characteristic() const {
    return vertex_count_ - edge_count() + face_count();
}

AngledComplex AngledComplex::with_angles(std::vector<FaceAngles> angles) const {
    return AngledComplex(vertex_count_, edges_, faces_, std::move(angles), kappa_);
}

AngledComplex AngledComplex::with_corner_angle(const Corner& c, double angle) const {
    auto angles = angles_;
    angles.at(c.face).at(c.position) = angle;
    return with_angles(std::move(angles));
}

AngledComplex AngledComplex::with_face_kappa(std::vector<std::optional<Curvature>> kappa) const {
    return AngledComplex(vertex_count_, edges_, faces_, angles_, std::move(kappa));
}

namespace {

double required_angle(const AngledComplex& x, const Corner& c) {
    const auto a = x.angle(c);
    if (!a) {
        throw Error(ErrorKind::IncompleteAngles, corner_name(c) + " has no angle");
    }
    return *a;
}

}  // namespace

double vertex_curvature(const AngledComplex& x, VertexId v) {
    if (v < 0 || v >= x.vertex_count()) {
        throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " does not exist");
    }
    const LinkGraph link = link_graph(x, v);
    double sum = 0.0;
    for (const LinkArc& arc : link.arcs) {
        sum += required_angle(x, arc.corner);
    }
    return 2.0 * kPi - kPi * link.euler_characteristic() - sum;
}

double face_curvature(const AngledComplex& x, FaceId f) {
    const Face& face = x.face(f);
    double sum = 0.0;
    for (int i = 0; i < static_cast<int>(face.size()); ++i) {
        sum += required_angle(x, {f, i});
    }
    return sum - kPi * static_cast<double>(static_cast<int>(face.size()) - 2);
}

double triangle_deficiency(const AngledComplex& x, FaceId f) {
    const Face& face = x.face(f);
    if (face.size() != 3) {
        throw Error(ErrorKind::WrongArity,
                    "face " + std::to_string(f) + " is not a triangle");
    }
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        sum += required_angle(x, {f, i});
    }
    return kPi - sum;
}

CurvatureReport gauss_bonnet(const AngledComplex& x) {
    CurvatureReport report;
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        report.vertex_curvature.push_back(vertex_curvature(x, v));
        report.total += report.vertex_curvature.back();
    }
    for (FaceId f = 0; f < x.face_count(); ++f) {
        report.face_curvature.push_back(face_curvature(x, f));
        report.total += report.face_curvature.back();
    }
    report.euler_characteristic = x.euler_characteristic();
    report.expected_total = 2.0 * kPi * report.euler_characteristic;
    report.residual = report.total - report.expected_total;
    return report;
}

LinkGraph link_graph(const AngledComplex& x, VertexId v) {
    LinkGraph link;
    link.vertex = v;
    auto node_of = [&](EdgeEnd end) {
        for (std::size_t i = 0; i < link.nodes.size(); ++i) {
            if (link.nodes[i] == end) {
                return static_cast<int>(i);
            }
        }
        throw Error(ErrorKind::InvalidComplex, "corner refers to an edge end not at its vertex");
    };
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        if (x.edge(e).tail == v) {
            link.nodes.push_back({e, false});
        }
        if (x.edge(e).head == v) {
            link.nodes.push_back({e, true});
        }
    }
    for (const Corner& c : x.corners_at(v)) {
        const Face& face = x.face(c.face);
        const int n = static_cast<int>(face.size());
        const EdgeUse& in = face.boundary[(c.position + n - 1) % n];
        const EdgeUse& out = face.boundary[c.position];
        // The incoming traversal arrives at its end; the outgoing leaves from its start.
        const EdgeEnd in_end{in.edge, !in.reversed};
        const EdgeEnd out_end{out.edge, out.reversed};
        LinkArc arc;
        arc.from = node_of(in_end);
        arc.to = node_of(out_end);
        arc.corner = c;
        if (const auto a = x.angle(c)) {
            arc.weight = *a;
        }
        link.arcs.push_back(arc);
    }
    return link;
}

double link_shortest_cycle(const LinkGraph& link) {
    const double inf = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(link.nodes.size());
    std::vector<std::vector<std::pair<int, int>>> adjacency(n);  // (neighbour, arc)
    for (int a = 0; a < static_cast<int>(link.arcs.size()); ++a) {
        const LinkArc& arc = link.arcs[a];
        if (std::isnan(arc.weight)) {
            throw Error(ErrorKind::IncompleteAngles, corner_name(arc.corner) + " has no angle");
        }
        adjacency[arc.from].push_back({arc.to, a});
        if (arc.to != arc.from) {
            adjacency[arc.to].push_back({arc.from, a});
        }
    }
    double best = inf;
    std::vector<double> dist(n);
    for (int a = 0; a < static_cast<int>(link.arcs.size()); ++a) {
        const LinkArc& arc = link.arcs[a];
        if (arc.from == arc.to) {
            best = std::min(best, arc.weight);
            continue;
        }
        // Shortest path between the arc's ends with the arc itself removed.
        std::fill(dist.begin(), dist.end(), inf);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        dist[arc.from] = 0.0;
        queue.push({0.0, arc.from});
        while (!queue.empty()) {
            const auto [d, u] = queue.top();
            queue.pop();
            if (d > dist[u] || d + arc.weight >= best) {
                continue;
            }
            if (u == arc.to) {
                break;
            }
            for (const auto& [w, via] : adjacency[u]) {
                if (via == a) {
                    continue;
                }
                const double nd = d + link.arcs[via].weight;
                if (nd < dist[w]) {
                    dist[w] = nd;
                    queue.push({nd, w});
                }
            }
        }
        best = std::min(best, arc.weight + dist[arc.to]);
    }
    return best;
}

VertexLinkVerdict classify_vertex(const AngledComplex& x, VertexId v, double tol) {
    VertexLinkVerdict verdict;
    verdict.vertex = v;
    verdict.girth = link_shortest_cycle(link_graph(x, v));
    verdict.locally_cat0 = verdict.girth >= 2.0 * kPi - tol;
    bool hyperbolic = true;
    bool any_face = false;
    for (FaceId f : x.faces_at(v)) {
        any_face = true;
        const auto k = x.face_kappa(f);
        hyperbolic = hyperbolic && k && k->value() < 0.0;
    }
    verdict.cat_minus1 = verdict.locally_cat0 && any_face && hyperbolic;
    return verdict;
}

std::vector<VertexLinkVerdict> classify_vertices(const AngledComplex& x, double tol) {
    std::vector<VertexLinkVerdict> out;
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        out.push_back(classify_vertex(x, v, tol));
    }
    return out;
}

AngledComplex subdivide_edge(const AngledComplex& x, EdgeId e) {
    const VertexId mid = x.vertex_count();
    const EdgeId second = x.edge_count();
    std::vector<Edge> edges = x.edges();
    const Edge old = edges.at(e);
    edges[e] = {old.tail, mid};
    edges.push_back({mid, old.head});

    std::vector<Face> faces;
    std::vector<FaceAngles> angles;
    for (FaceId f = 0; f < x.face_count(); ++f) {
        Face face;
        FaceAngles face_angles;
        for (int i = 0; i < static_cast<int>(x.face(f).size()); ++i) {
            const EdgeUse use = x.face(f).boundary[i];
            face_angles.push_back(x.angles()[f][i]);
            if (use.edge != e) {
                face.boundary.push_back(use);
                continue;
            }
            if (!use.reversed) {
                face.boundary.push_back({e, false});
                face.boundary.push_back({second, false});
            } else {
                face.boundary.push_back({second, true});
                face.boundary.push_back({e, true});
            }
            face_angles.push_back(kPi);
        }
        faces.push_back(std::move(face));
        angles.push_back(std::move(face_angles));
    }
    return AngledComplex(x.vertex_count() + 1, std::move(edges), std::move(faces),
                         std::move(angles), x.face_kappas());
}

}  // namespace catkit
