#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catkit {

/// Link of a cube-complex vertex up to dimension 2.
class SimplicialLink {
public:
    SimplicialLink() = default;
    /// Throws InvalidInput on loops, duplicate simplices, out-of-range
    /// vertices, or triangles with a missing edge.
    SimplicialLink(int vertex_count, std::vector<std::pair<int, int>> edges,
                   std::vector<std::array<int, 3>> triangles = {});

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    bool adjacent(int u, int v) const { return adj_[u * n_ + v] != 0; }
    bool has_triangle(int a, int b, int c) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<char> adj_;
};

/// Cycle order u, v, w, x with both diagonals absent.
std::optional<std::array<int, 4>> find_induced_4cycle(const SimplicialLink& link);
bool has_induced_4cycle(const SimplicialLink& link);

/// First 3-clique of the 1-skeleton not spanned by a triangle, if any.
std::optional<std::array<int, 3>> find_flag_violation(const SimplicialLink& link);
bool is_flag(const SimplicialLink& link);

struct CubeVertexVerdict {
    int vertex = 0;
    bool cat_minus1 = false;
    std::optional<std::array<int, 4>> witness;
};

struct CubeLinkReport {
    std::vector<CubeVertexVerdict> verdicts;
    int cat_minus1_count = 0;
    /// Set when a CAT(-1) vertex exists; informational only.
    std::string annotation;
};

/// Throws InvalidInput naming the first vertex with a non-flag link.
CubeLinkReport classify_cat_minus1_vertices(const std::map<int, SimplicialLink>& links);

}  // namespace catkit
