#include "catkit/cube_links.hpp"

#include "catkit/error.hpp"

#include <algorithm>
#include <set>

namespace catkit {

SimplicialLink::SimplicialLink(int vertex_count, std::vector<std::pair<int, int>> edges,
                               std::vector<std::array<int, 3>> triangles)
    : n_(vertex_count), edges_(std::move(edges)), triangles_(std::move(triangles)) {
    if (n_ < 0) {
        throw Error(ErrorKind::InvalidInput, "negative vertex count");
    }
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw Error(ErrorKind::InvalidInput, "link edge out of range");
        }
        if (u == v) {
            throw Error(ErrorKind::InvalidInput, "link edge is a loop");
        }
        if (adjacent(u, v)) {
            throw Error(ErrorKind::InvalidInput, "duplicate link edge");
        }
        adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    }
    std::set<std::array<int, 3>> seen;
    for (const auto& t : triangles_) {
        auto sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] < 0 || sorted[2] >= n_ || sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
            throw Error(ErrorKind::InvalidInput, "invalid link triangle");
        }
        if (!seen.insert(sorted).second) {
            throw Error(ErrorKind::InvalidInput, "duplicate link triangle");
        }
        if (!adjacent(t[0], t[1]) || !adjacent(t[1], t[2]) || !adjacent(t[0], t[2])) {
            throw Error(ErrorKind::InvalidInput, "link triangle with a missing edge");
        }
    }
}

bool SimplicialLink::has_triangle(int a, int b, int c) const {
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    return std::any_of(triangles_.begin(), triangles_.end(), [&](std::array<int, 3> t) {
        std::sort(t.begin(), t.end());
        return t == key;
    });
}

std::optional<std::array<int, 4>> find_induced_4cycle(const SimplicialLink& link) {
    const int n = link.vertex_count();
    std::vector<int> common;
    // Each induced 4-cycle has a non-adjacent diagonal pair u < w with two
    // non-adjacent common neighbours.
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (link.adjacent(u, w)) {
                continue;
            }
            common.clear();
            for (int v = 0; v < n; ++v) {
                if (link.adjacent(u, v) && link.adjacent(w, v)) {
                    common.push_back(v);
                }
            }
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    if (!link.adjacent(common[i], common[j])) {
                        return std::array<int, 4>{u, common[i], w, common[j]};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool has_induced_4cycle(const SimplicialLink& link) { return find_induced_4cycle(link).has_value(); }

std::optional<std::array<int, 3>> find_flag_violation(const SimplicialLink& link) {
    const int n = link.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!link.adjacent(a, b)) {
                continue;
            }
            for (int c = b + 1; c < n; ++c) {
                if (link.adjacent(a, c) && link.adjacent(b, c) && !link.has_triangle(a, b, c)) {
                    return std::array<int, 3>{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_flag(const SimplicialLink& link) { return !find_flag_violation(link).has_value(); }

CubeLinkReport classify_cat_minus1_vertices(const std::map<int, SimplicialLink>& links) {
    CubeLinkReport report;
    for (const auto& [vertex, link] : links) {
        if (const auto bad = find_flag_violation(link)) {
            throw Error(ErrorKind::InvalidInput,
                        "link of vertex " + std::to_string(vertex) + " is not flag: {" +
                            std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1]) + ", " +
                            std::to_string((*bad)[2]) + "} spans no triangle");
        }
        CubeVertexVerdict verdict{vertex, false, find_induced_4cycle(link)};
        verdict.cat_minus1 = !verdict.witness;
        report.cat_minus1_count += verdict.cat_minus1 ? 1 : 0;
        report.verdicts.push_back(verdict);
    }
    if (report.cat_minus1_count > 0) {
        report.annotation =
            "CAT(-1) vertex present: a group acting essentially and geometrically on this "
            "cube complex is virtually cyclic or acylindrically hyperbolic (not checked here)";
    }
    return report;
}

}  // namespace catkit
