#include "catkit/generators.hpp"

#include "catkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace catkit {

MetricComplex gen_standard(StandardKind kind) {
    switch (kind) {
        case StandardKind::DiscTriangle: {
            const AngledComplex x(3, {{0, 1}, {1, 2}, {2, 0}}, {{{{0, false}, {1, false}, {2, false}}}});
            return MetricComplex::realize(x, {1.0, 1.0, 1.0});
        }
        case StandardKind::SphereTetrahedron: {
            const AngledComplex x(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}},
                                  {
                                      {{{0, false}, {1, false}, {2, false}}},
                                      {{{0, true}, {3, false}, {4, true}}},
                                      {{{1, true}, {4, false}, {5, true}}},
                                      {{{2, true}, {5, false}, {3, true}}},
                                  });
            return MetricComplex::realize(x, std::vector<double>(6, 1.0));
        }
        case StandardKind::FlatTorus: {
            // Unit square with sides a, b and diagonal d, all at one vertex.
            const AngledComplex x(1, {{0, 0}, {0, 0}, {0, 0}},
                                  {
                                      {{{0, false}, {1, false}, {2, true}}},
                                      {{{2, false}, {0, true}, {1, true}}},
                                  });
            return MetricComplex::realize(x, {1.0, 1.0, std::sqrt(2.0)});
        }
    }
    throw Error(ErrorKind::InvalidInput, "unknown standard complex");
}

double regular_polygon_side(int n, double vertex_angle) {
    if (n < 3 || !(vertex_angle > 0.0) || !(vertex_angle < kPi)) {
        throw Error(ErrorKind::Domain, "regular polygon needs n >= 3 and angle in (0, pi)");
    }
    if (!(n * vertex_angle < (n - 2) * kPi - 1e-12)) {
        throw Error(ErrorKind::Domain, "angle sum is not hyperbolic for this polygon");
    }
    return 2.0 * std::acosh(std::cos(kPi / n) / std::sin(vertex_angle / 2.0));
}

namespace {

struct LocalPiece {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<double> lengths;
    Curvature kappa;
    double side = 0.0;
    struct Loop {
        EdgeId first;   // base -> midpoint
        EdgeId second;  // midpoint -> base
        VertexId midpoint;
    };
    std::vector<Loop> loops;
};

LocalPiece build_piece(int genus, double square_side) {
    LocalPiece piece;
    const int n = genus == 1 ? 4 : 4 * genus;
    const int loop_count = 2 * genus;
    double spoke_corner = 0.0;
    double spoke_mid = 0.0;
    if (genus == 1) {
        piece.kappa = Curvature::flat();
        piece.side = square_side;
        spoke_corner = square_side / std::sqrt(2.0);
        spoke_mid = square_side / 2.0;
    } else {
        piece.kappa = Curvature::hyperbolic();
        piece.side = regular_polygon_side(n, kPi / 2.0);
        // Right triangle with angles pi/n at the centre and pi/4 at the corner.
        spoke_corner = std::acosh(1.0 / std::tan(kPi / n));
        spoke_mid = std::acosh(std::cos(kPi / 4.0) / std::sin(kPi / n));
    }
    const double half = piece.side / 2.0;
    piece.vertex_count = 2 + loop_count;
    for (int l = 0; l < loop_count; ++l) {
        const VertexId mid = 2 + l;
        piece.loops.push_back({static_cast<EdgeId>(piece.edges.size()),
                               static_cast<EdgeId>(piece.edges.size() + 1), mid});
        piece.edges.push_back({0, mid});
        piece.edges.push_back({mid, 0});
        piece.lengths.push_back(half);
        piece.lengths.push_back(half);
    }
    std::vector<EdgeId> to_corner(n);
    std::vector<EdgeId> to_mid(n);
    for (int k = 0; k < n; ++k) {
        to_corner[k] = static_cast<EdgeId>(piece.edges.size());
        piece.edges.push_back({1, 0});
        piece.lengths.push_back(spoke_corner);
    }
    std::vector<int> side_loop(n);
    std::vector<bool> side_inverse(n);
    for (int j = 0; j < genus; ++j) {
        const int a = 2 * j;
        const int b = 2 * j + 1;
        const int base = 4 * j;
        side_loop[base] = a;
        side_loop[base + 1] = b;
        side_loop[base + 2] = a;
        side_loop[base + 3] = b;
        side_inverse[base] = side_inverse[base + 1] = false;
        side_inverse[base + 2] = side_inverse[base + 3] = true;
    }
    for (int k = 0; k < n; ++k) {
        to_mid[k] = static_cast<EdgeId>(piece.edges.size());
        piece.edges.push_back({1, piece.loops[side_loop[k]].midpoint});
        piece.lengths.push_back(spoke_mid);
    }
    for (int k = 0; k < n; ++k) {
        const auto& loop = piece.loops[side_loop[k]];
        const EdgeUse first = side_inverse[k] ? EdgeUse{loop.second, true} : EdgeUse{loop.first, false};
        const EdgeUse second =
            side_inverse[k] ? EdgeUse{loop.first, true} : EdgeUse{loop.second, false};
        piece.faces.push_back({{{to_corner[k], false}, first, {to_mid[k], true}}});
        piece.faces.push_back({{{to_mid[k], false}, second, {to_corner[(k + 1) % n], true}}});
    }
    return piece;
}

int find_root(std::vector<int>& parent, int a) {
    while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    return a;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
    }
}

int loop_index(const SurfacePiece& piece, const std::string& name) {
    const auto it = std::find(piece.loops.begin(), piece.loops.end(), name);
    if (it == piece.loops.end()) {
        throw Error(ErrorKind::Construction,
                    "piece " + piece.name + " has no canonical loop " + name);
    }
    return static_cast<int>(it - piece.loops.begin());
}

}  // namespace

bool gluing_graph_triangle_free(const SurfaceGluingSpec& spec) {
    const int n = static_cast<int>(spec.pieces.size());
    std::vector<std::set<int>> adjacent(n);
    for (const LoopGluing& g : spec.gluings) {
        if (g.piece_a != g.piece_b) {
            adjacent.at(g.piece_a).insert(g.piece_b);
            adjacent.at(g.piece_b).insert(g.piece_a);
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b : adjacent[a]) {
            for (int c : adjacent[b]) {
                if (c != a && adjacent[a].count(c)) {
                    return false;
                }
            }
        }
    }
    return true;
}

GluedComplex gen_gluing(const SurfaceGluingSpec& spec) {
    if (spec.pieces.empty()) {
        throw Error(ErrorKind::Construction, "gluing needs at least one piece");
    }
    double loop_length = spec.loop_length;
    for (const SurfacePiece& p : spec.pieces) {
        if (p.genus < 1) {
            throw Error(ErrorKind::Construction, "piece " + p.name + " needs genus >= 1");
        }
        if (static_cast<int>(p.loops.size()) != 2 * p.genus) {
            throw Error(ErrorKind::Construction, "piece " + p.name + " needs 2g loop names");
        }
        if (std::set<std::string>(p.loops.begin(), p.loops.end()).size() != p.loops.size()) {
            throw Error(ErrorKind::Construction, "piece " + p.name + " repeats a loop name");
        }
        if (p.genus >= 2) {
            const double side = regular_polygon_side(4 * p.genus, kPi / 2.0);
            if (!(loop_length > 0.0)) {
                loop_length = side;
            } else if (std::abs(side - loop_length) > 1e-9) {
                throw Error(ErrorKind::Construction,
                            "canonical loops of " + p.name + " do not have the common length");
            }
        }
    }
    if (!(loop_length > 0.0)) {
        throw Error(ErrorKind::Construction, "flat pieces need a positive loop length");
    }

    std::vector<LocalPiece> locals;
    std::vector<int> vertex_offset;
    std::vector<int> edge_offset;
    int vertex_total = 0;
    int edge_total = 0;
    for (const SurfacePiece& p : spec.pieces) {
        locals.push_back(build_piece(p.genus, loop_length));
        vertex_offset.push_back(vertex_total);
        edge_offset.push_back(edge_total);
        vertex_total += locals.back().vertex_count;
        edge_total += static_cast<int>(locals.back().edges.size());
    }
    std::vector<int> vparent(vertex_total);
    std::vector<int> eparent(edge_total);
    std::iota(vparent.begin(), vparent.end(), 0);
    std::iota(eparent.begin(), eparent.end(), 0);
    for (const LoopGluing& g : spec.gluings) {
        if (g.piece_a < 0 || g.piece_b < 0 || g.piece_a >= static_cast<int>(spec.pieces.size()) ||
            g.piece_b >= static_cast<int>(spec.pieces.size())) {
            throw Error(ErrorKind::Construction, "gluing refers to an unknown piece");
        }
        const auto& la = locals[g.piece_a].loops[loop_index(spec.pieces[g.piece_a], g.loop_a)];
        const auto& lb = locals[g.piece_b].loops[loop_index(spec.pieces[g.piece_b], g.loop_b)];
        unite(eparent, edge_offset[g.piece_a] + la.first, edge_offset[g.piece_b] + lb.first);
        unite(eparent, edge_offset[g.piece_a] + la.second, edge_offset[g.piece_b] + lb.second);
        unite(vparent, vertex_offset[g.piece_a] + la.midpoint, vertex_offset[g.piece_b] + lb.midpoint);
        unite(vparent, vertex_offset[g.piece_a], vertex_offset[g.piece_b]);
    }
    std::vector<int> vertex_id(vertex_total, -1);
    int vertex_count = 0;
    for (int v = 0; v < vertex_total; ++v) {
        const int r = find_root(vparent, v);
        if (vertex_id[r] < 0) {
            vertex_id[r] = vertex_count++;
        }
        vertex_id[v] = vertex_id[r];
    }
    std::vector<int> edge_id(edge_total, -1);
    std::vector<Edge> edges;
    std::vector<double> lengths;
    std::vector<Face> faces;
    std::vector<std::optional<Curvature>> kappas;
    GluedComplex out;
    for (std::size_t p = 0; p < locals.size(); ++p) {
        const LocalPiece& lp = locals[p];
        for (std::size_t e = 0; e < lp.edges.size(); ++e) {
            const int global = edge_offset[p] + static_cast<int>(e);
            const int r = find_root(eparent, global);
            if (edge_id[r] < 0) {
                edge_id[r] = static_cast<int>(edges.size());
                edges.push_back({vertex_id[vertex_offset[p] + lp.edges[e].tail],
                                 vertex_id[vertex_offset[p] + lp.edges[e].head]});
                lengths.push_back(lp.lengths[e]);
            } else if (std::abs(lengths[edge_id[r]] - lp.lengths[e]) > 1e-12) {
                throw Error(ErrorKind::Construction, "identified edges have different lengths");
            }
            edge_id[global] = edge_id[r];
        }
        for (const Face& f : lp.faces) {
            Face g;
            for (const EdgeUse& use : f.boundary) {
                g.boundary.push_back({edge_id[edge_offset[p] + use.edge], use.reversed});
            }
            faces.push_back(g);
            kappas.push_back(lp.kappa);
            out.face_piece.push_back(static_cast<int>(p));
        }
        out.piece_base_vertex.push_back(vertex_id[vertex_offset[p]]);
    }
    const AngledComplex x(vertex_count, edges, faces, {}, kappas);
    out.complex = MetricComplex::realize(x, lengths);
    return out;
}

MetricComplex gen_surface(int genus) {
    if (genus < 2) {
        throw Error(ErrorKind::Domain, "gen_surface needs genus >= 2");
    }
    SurfacePiece piece{"S", genus, {}};
    for (int j = 1; j <= genus; ++j) {
        piece.loops.push_back("a" + std::to_string(j));
        piece.loops.push_back("b" + std::to_string(j));
    }
    return gen_gluing({{piece}, {}, 0.0}).complex;
}

Figure3Complex gen_figure3() {
    SurfaceGluingSpec spec;
    spec.loop_length = regular_polygon_side(8, kPi / 2.0);
    spec.pieces.push_back({"S", 2, {"a1", "a2", "a3", "a4"}});
    for (int i = 1; i <= 4; ++i) {
        spec.pieces.push_back({"T" + std::to_string(i), 1, {"a", "b"}});
    }
    for (int i = 1; i <= 3; ++i) {
        const std::string lo = std::to_string(i);
        const std::string hi = std::to_string(i + 1);
        spec.pieces.push_back({"T" + lo + hi, 1, {"b" + lo, "b" + hi}});
    }
    for (int i = 1; i <= 4; ++i) {
        spec.gluings.push_back({0, "a" + std::to_string(i), i, "a"});
    }
    for (int i = 1; i <= 3; ++i) {
        const int torus = 4 + i;
        spec.gluings.push_back({torus, "b" + std::to_string(i), i, "b"});
        spec.gluings.push_back({torus, "b" + std::to_string(i + 1), i + 1, "b"});
    }
    if (!gluing_graph_triangle_free(spec)) {
        throw Error(ErrorKind::Construction, "gluing graph has a triangle");
    }
    Figure3Complex out;
    out.glued = gen_gluing(spec);
    out.presentation =
        "< a1, a2, a3, a4, b1, b2, b3, b4 | [a1,a2][a3,a4], [b1,b2], [b2,b3], [b3,b4], "
        "[a1,b1], [a2,b2], [a3,b3], [a4,b4] >";
    return out;
}

namespace {

struct StripPiece {
    double u0 = 0.0;
    double u1 = 0.0;
    bool hyperbolic = false;
    double centre = 0.0;  // Fermi chart origin along the axis
};

ModelPoint fermi_point(double u, double v) {
    return ModelPoint{Curvature::hyperbolic(),
                      {std::cosh(v) * std::cosh(u), std::cosh(v) * std::sinh(u), std::sinh(v)}};
}

struct StripBuild {
    MetricComplex complex;
    std::vector<EdgeUse> central;
    std::vector<double> us;
    std::vector<double> vs;
};

StripBuild build_strip(const std::vector<StripPiece>& pieces, double half_width, double cell,
                       bool need_central) {
    std::vector<double> us{pieces.front().u0};
    std::vector<int> column_piece;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const double len = pieces[p].u1 - pieces[p].u0;
        const int cells = std::max(1, static_cast<int>(std::ceil(len / cell - 1e-9)));
        for (int k = 1; k <= cells; ++k) {
            us.push_back(k == cells ? pieces[p].u1 : pieces[p].u0 + len * k / cells);
            column_piece.push_back(static_cast<int>(p));
        }
    }
    int rows = std::max(1, static_cast<int>(std::ceil(2.0 * half_width / cell - 1e-9)));
    if (need_central && rows % 2 == 1) {
        ++rows;
    }
    std::vector<double> vs;
    for (int j = 0; j <= rows; ++j) {
        vs.push_back(j == rows ? half_width : -half_width + 2.0 * half_width * j / rows);
    }
    if (need_central) {
        vs[rows / 2] = 0.0;
    }
    const int cols = static_cast<int>(us.size()) - 1;
    auto vid = [&](int i, int j) { return i * (rows + 1) + j; };
    std::vector<Edge> edges;
    std::vector<double> lengths;
    auto point_in = [&](int piece, int i, int j) {
        const StripPiece& sp = pieces[piece];
        if (sp.hyperbolic) {
            return fermi_point(us[i] - sp.centre, vs[j]);
        }
        return ModelPoint::euclidean(us[i], vs[j]);
    };
    std::vector<int> horizontal((cols) * (rows + 1));
    std::vector<int> vertical((cols + 1) * rows);
    std::vector<int> diagonal(cols * rows);
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j <= rows; ++j) {
            horizontal[i * (rows + 1) + j] = static_cast<int>(edges.size());
            edges.push_back({vid(i, j), vid(i + 1, j)});
            const int p = column_piece[i];
            const double du = us[i + 1] - us[i];
            // Points at equal height: d = 2 asinh(cosh v sinh(du / 2)).
            lengths.push_back(pieces[p].hyperbolic
                                  ? 2.0 * std::asinh(std::cosh(vs[j]) * std::sinh(du / 2.0))
                                  : du);
        }
    }
    for (int i = 0; i <= cols; ++i) {
        for (int j = 0; j < rows; ++j) {
            vertical[i * rows + j] = static_cast<int>(edges.size());
            edges.push_back({vid(i, j), vid(i, j + 1)});
            lengths.push_back(vs[j + 1] - vs[j]);
        }
    }
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < rows; ++j) {
            diagonal[i * rows + j] = static_cast<int>(edges.size());
            edges.push_back({vid(i, j), vid(i + 1, j + 1)});
            const int p = column_piece[i];
            lengths.push_back(model_distance(point_in(p, i, j), point_in(p, i + 1, j + 1)));
        }
    }
    std::vector<Face> faces;
    std::vector<std::optional<Curvature>> kappas;
    for (int i = 0; i < cols; ++i) {
        const Curvature k =
            pieces[column_piece[i]].hyperbolic ? Curvature::hyperbolic() : Curvature::flat();
        for (int j = 0; j < rows; ++j) {
            const int h_lo = horizontal[i * (rows + 1) + j];
            const int h_hi = horizontal[i * (rows + 1) + j + 1];
            const int v_left = vertical[i * rows + j];
            const int v_right = vertical[(i + 1) * rows + j];
            const int d = diagonal[i * rows + j];
            faces.push_back({{{h_lo, false}, {v_right, false}, {d, true}}});
            faces.push_back({{{d, false}, {h_hi, true}, {v_left, true}}});
            kappas.push_back(k);
            kappas.push_back(k);
        }
    }
    const AngledComplex x((cols + 1) * (rows + 1), edges, faces, {}, kappas);
    StripBuild out;
    out.complex = MetricComplex::realize(x, lengths);
    if (need_central) {
        for (int i = 0; i < cols; ++i) {
            out.central.push_back({horizontal[i * (rows + 1) + rows / 2], false});
        }
    }
    out.us = us;
    out.vs = vs;
    return out;
}

void check_links(const MetricComplex& m) {
    for (const auto& verdict : classify_vertices(m.base())) {
        if (!verdict.locally_cat0) {
            throw Error(ErrorKind::Construction,
                        "vertex " + std::to_string(verdict.vertex) + " has link girth " +
                            std::to_string(verdict.girth) + " below 2 pi");
        }
    }
}

}  // namespace

StripComplex gen_beaded_strip(int n_beads, double L, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw Error(ErrorKind::Construction, "beaded strip needs epsilon > 0");
    }
    if (n_beads < 1) {
        throw Error(ErrorKind::Construction, "beaded strip needs at least one bead");
    }
    if (!(L > 2.0 * epsilon + 0.1)) {
        throw Error(ErrorKind::Construction, "beaded strip needs L > 2 epsilon + 0.1");
    }
    const double reach = 2.0 * epsilon + 0.05;
    const double half_width = 2.0 * epsilon + 0.5;
    std::vector<StripPiece> pieces;
    double u = 0.0;
    for (int j = 1; j <= n_beads; ++j) {
        const double mark = j * L;
        pieces.push_back({u, mark - reach, false, 0.0});
        pieces.push_back({mark - reach, mark + reach, true, mark});
        u = mark + reach;
    }
    const double length = (n_beads + 1) * L;
    pieces.push_back({u, length, false, 0.0});
    StripBuild build = build_strip(pieces, half_width, 0.25, true);
    check_links(build.complex);
    StripComplex out;
    out.complex = std::move(build.complex);
    out.half_width = half_width;
    out.length = length;
    out.geodesic.path = edge_path(out.complex, build.central);
    for (int j = 1; j <= n_beads; ++j) {
        out.geodesic.marks.push_back(j * L);
    }
    out.geodesic.params = {epsilon, L, L};
    out.geodesic.validate();
    return out;
}

StripComplex gen_hyperbolic_patch(double length, double half_width, double cell) {
    if (!(length > 0.0) || !(half_width > 0.0) || !(cell > 0.0)) {
        throw Error(ErrorKind::Construction, "patch needs positive dimensions");
    }
    const double centre = length / 2.0;
    StripBuild build = build_strip({{0.0, length, true, centre}}, half_width, cell, true);
    std::vector<ModelPoint> chart;
    const int rows = static_cast<int>(build.vs.size()) - 1;
    for (std::size_t i = 0; i < build.us.size(); ++i) {
        for (int j = 0; j <= rows; ++j) {
            chart.push_back(fermi_point(build.us[i] - centre, build.vs[j]));
        }
    }
    StripComplex out;
    out.complex = build.complex.with_global_chart(std::move(chart));
    out.half_width = half_width;
    out.length = length;
    out.geodesic.path = edge_path(out.complex, build.central);
    return out;
}

StripComplex gen_flat_strip(double length, double half_width, double cell) {
    if (!(length > 0.0) || !(half_width > 0.0) || !(cell > 0.0)) {
        throw Error(ErrorKind::Construction, "strip needs positive dimensions");
    }
    const int rows = static_cast<int>(std::ceil(2.0 * half_width / cell - 1e-9));
    StripBuild build =
        build_strip({{0.0, length, false, 0.0}}, half_width, cell, rows > 1 && rows % 2 == 0);
    std::vector<ModelPoint> chart;
    for (std::size_t i = 0; i < build.us.size(); ++i) {
        for (double v : build.vs) {
            chart.push_back(ModelPoint::euclidean(build.us[i], v));
        }
    }
    StripComplex out;
    out.complex = build.complex.with_global_chart(std::move(chart));
    out.half_width = half_width;
    out.length = length;
    if (!build.central.empty()) {
        out.geodesic.path = edge_path(out.complex, build.central);
    }
    return out;
}

}  // namespace catkit
