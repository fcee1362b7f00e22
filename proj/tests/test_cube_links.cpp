#include "catkit/cube_links.hpp"
#include "catkit/error.hpp"
#include "catkit/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace catkit;

namespace {

SimplicialLink cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return SimplicialLink(n, edges);
}

SimplicialLink complete(int n, bool with_triangles) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.emplace_back(a, b);
            for (int c = b + 1; c < n && with_triangles; ++c) {
                tris.push_back({a, b, c});
            }
        }
    }
    return SimplicialLink(n, edges, tris);
}

// Exhaustive oracle: some 4-subset induces a 2-regular graph with 4 edges.
bool brute_force_4cycle(const SimplicialLink& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int s[4] = {a, b, c, d};
                    bool two_regular = true;
                    for (int i = 0; i < 4 && two_regular; ++i) {
                        int deg = 0;
                        for (int j = 0; j < 4; ++j) {
                            deg += (i != j && g.adjacent(s[i], s[j])) ? 1 : 0;
                        }
                        two_regular = deg == 2;
                    }
                    if (two_regular) {
                        return true;
                    }
                }
    return false;
}

SimplicialLink random_graph(std::mt19937_64& rng) {
    const int n = 1 + uniform_index(rng, 12);
    const double p = uniform(rng, 0.1, 0.9);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (uniform(rng, 0.0, 1.0) < p) {
                edges.emplace_back(a, b);
            }
        }
    }
    return SimplicialLink(n, edges);
}

bool is_induced_cycle(const SimplicialLink& g, const std::array<int, 4>& w) {
    for (int i = 0; i < 4; ++i) {
        if (!g.adjacent(w[i], w[(i + 1) % 4])) {
            return false;
        }
    }
    return !g.adjacent(w[0], w[2]) && !g.adjacent(w[1], w[3]);
}

}  // namespace

TEST_CASE("fixtures") {
    const auto c4 = find_induced_4cycle(cycle(4));
    REQUIRE(c4);
    CHECK(is_induced_cycle(cycle(4), *c4));
    CHECK_FALSE(has_induced_4cycle(complete(4, false)));
    CHECK_FALSE(has_induced_4cycle(cycle(5)));
    CHECK(has_induced_4cycle(cycle(4)));
}

TEST_CASE("oracle equivalence on random graphs") {
    for (int i = 0; i < 200; ++i) {
        auto rng = trial_rng(2718, static_cast<std::uint64_t>(i));
        const SimplicialLink g = random_graph(rng);
        const auto witness = find_induced_4cycle(g);
        CHECK(witness.has_value() == brute_force_4cycle(g));
        if (witness) {
            CHECK(is_induced_cycle(g, *witness));
        }
    }
}

TEST_CASE("closing a diagonal destroys the witness") {
    for (int i = 0; i < 50; ++i) {
        auto rng = trial_rng(99, static_cast<std::uint64_t>(i));
        const SimplicialLink g = random_graph(rng);
        const auto witness = find_induced_4cycle(g);
        if (!witness) {
            continue;
        }
        auto edges = g.edges();
        edges.emplace_back((*witness)[0], (*witness)[2]);
        const SimplicialLink h(g.vertex_count(), edges);
        const auto again = find_induced_4cycle(h);
        CHECK((!again || *again != *witness));
        if (again) {
            CHECK(is_induced_cycle(h, *again));
        }
    }
}

TEST_CASE("flag condition") {
    const auto empty_triangle = find_flag_violation(complete(3, false));
    REQUIRE(empty_triangle);
    CHECK(*empty_triangle == std::array<int, 3>{0, 1, 2});
    CHECK(is_flag(complete(3, true)));
    CHECK(is_flag(cycle(4)));
    CHECK_FALSE(is_flag(complete(4, false)));
    CHECK(is_flag(complete(4, true)));
}

TEST_CASE("link validation") {
    CHECK_THROWS_AS(SimplicialLink(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(SimplicialLink(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(SimplicialLink(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(SimplicialLink(3, {{0, 1}, {1, 2}}, {{0, 1, 2}}), Error);
    CHECK_THROWS_AS(SimplicialLink(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}, {2, 1, 0}}), Error);
}

TEST_CASE("classification") {
    // Flat torus as a square complex: one vertex, link a 4-cycle.
    const auto torus = classify_cat_minus1_vertices({{0, cycle(4)}});
    CHECK(torus.cat_minus1_count == 0);
    CHECK(torus.annotation.empty());
    const auto pentagon = classify_cat_minus1_vertices({{0, cycle(5)}, {1, cycle(4)}});
    CHECK(pentagon.cat_minus1_count == 1);
    CHECK(pentagon.verdicts[0].cat_minus1);
    CHECK_FALSE(pentagon.verdicts[1].cat_minus1);
    CHECK_FALSE(pentagon.annotation.empty());
    try {
        classify_cat_minus1_vertices({{0, cycle(5)}, {7, complete(3, false)}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInput);
        CHECK(std::string(e.what()).find("vertex 7") != std::string::npos);
    }
}

TEST_CASE("classification is invariant under relabeling") {
    for (int i = 0; i < 30; ++i) {
        auto rng = trial_rng(5150, static_cast<std::uint64_t>(i));
        std::map<int, SimplicialLink> links;
        std::map<int, SimplicialLink> relabeled;
        for (int v = 0; v < 4; ++v) {
            // Triangle-free graphs are flag.
            SimplicialLink g = random_graph(rng);
            std::vector<std::pair<int, int>> kept;
            for (const auto& e : g.edges()) {
                auto trial = kept;
                trial.push_back(e);
                if (is_flag(SimplicialLink(g.vertex_count(), trial))) {
                    kept = trial;
                }
            }
            const SimplicialLink flag(g.vertex_count(), kept);
            std::vector<int> perm(flag.vertex_count());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> moved;
            for (const auto& [a, b] : flag.edges()) {
                moved.emplace_back(perm[a], perm[b]);
            }
            links.emplace(v, flag);
            relabeled.emplace(v, SimplicialLink(flag.vertex_count(), moved));
        }
        const auto a = classify_cat_minus1_vertices(links);
        const auto b = classify_cat_minus1_vertices(relabeled);
        CHECK(a.cat_minus1_count == b.cat_minus1_count);
        for (std::size_t k = 0; k < a.verdicts.size(); ++k) {
            CHECK(a.verdicts[k].cat_minus1 == b.verdicts[k].cat_minus1);
        }
    }
}
