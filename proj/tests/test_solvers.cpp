#include "brute.hpp"
#include "geometry.hpp"

#include "spr/errors.hpp"
#include "spr/generators.hpp"
#include "spr/solvers.hpp"

#include <doctest.h>

using namespace spr;

namespace {

struct BruteSpace {
    std::vector<Path> paths;
    std::vector<std::vector<bool>> adj;

    std::size_t index(const Path& p) const {
        return static_cast<std::size_t>(std::find(paths.begin(), paths.end(), p) - paths.begin());
    }
    bool connected(std::size_t i, std::size_t j) const { return brute::bfs(adj, i)[j].has_value(); }
};

BruteSpace brute_space(const StInstance& inst, std::size_t k = 1) {
    BruteSpace space{brute::shortest_paths(inst.graph, inst.s, inst.t), {}};
    space.adj = brute::k_adjacency(space.paths, k);
    return space;
}

}  // namespace

TEST_CASE("lr_edge_type") {
    bool seen_l = false, seen_r = false;
    for (int seed = 0; seed < 200 && !(seen_l && seen_r); ++seed) {
        Rng rng(seed);
        const auto rep = random_permutation_rep(7, rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 2, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const ShortestPathDag dag(inst);
            if (dag.on_shortest_path(5) && std::ranges::count(dag.successors(5), 2)) {
                CHECK(lr_edge_type(rep, inst, 5, 2) == EdgeType::kL);
                seen_l = true;
            }
            if (dag.on_shortest_path(2) && std::ranges::count(dag.successors(2), 5)) {
                CHECK(lr_edge_type(rep, inst, 2, 5) == EdgeType::kR);
                seen_r = true;
            }
        }
    }
    CHECK(seen_l);
    CHECK(seen_r);

    const PermutationRep rep{{2, 3, 1}};
    const auto inst = StInstance::make(graph_of(rep), 0, 1);
    CHECK_THROWS_AS(lr_edge_type(rep, inst, 0, 1), EdgeNotOnShortestPath);
    CHECK(lr_edge_type(rep, inst, 0, 2) == EdgeType::kR);
    CHECK(to_char(EdgeType::kL) == 'L');
}

TEST_CASE("permutation edge types alternate and single steps keep the first type") {
    for (int seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const auto rep = random_permutation_rep(5 + static_cast<std::size_t>(seed % 5), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 3, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto space = brute_space(inst);
            for (const auto& p : space.paths) {
                for (std::size_t i = 2; i < p.size(); ++i) {
                    CHECK(lr_edge_type(rep, inst, p[i - 2], p[i - 1]) != lr_edge_type(rep, inst, p[i - 1], p[i]));
                }
            }
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    if (!space.adj[i][j]) continue;
                    CHECK(lr_edge_type(rep, inst, space.paths[i][0], space.paths[i][1]) ==
                          lr_edge_type(rep, inst, space.paths[j][0], space.paths[j][1]));
                }
            }
        }
    }
}

TEST_CASE("permutation_solve agrees with brute force") {
    std::size_t negatives = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto rep = random_permutation_rep(4 + static_cast<std::size_t>(seed % 6), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto space = brute_space(inst);
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    const auto r = permutation_solve(rep, inst, space.paths[i], space.paths[j]);
                    REQUIRE(r.reconfigurable == space.connected(i, j));
                    if (!r.reconfigurable) {
                        ++negatives;
                        if (space.paths[i].size() > 3) {
                            CHECK(lr_edge_type(rep, inst, s, space.paths[i][1]) !=
                                  lr_edge_type(rep, inst, s, space.paths[j][1]));
                        }
                        continue;
                    }
                    REQUIRE(r.sequence);
                    CHECK(replays_validly(inst, *r.sequence, 1, space.paths[j]));
                    if (i == j) CHECK(r.sequence->size() == 0);
                }
            }
        }
    }
    CHECK(negatives > 0);
    const PermutationRep rep{{2, 3, 1}};
    const auto inst = StInstance::make(graph_of(PermutationRep{{3, 1, 2}}), 0, 1);
    CHECK_THROWS_AS(permutation_solve(rep, inst, Path{0, 1}, Path{0, 1}), InvalidRepresentation);
}

TEST_CASE("chord labels on a hand-built diagram") {
    // s = (0,6), v1 = (2,7), v2 = (1,4), t = (3,5): a path s v1 v2 t, with v1 entirely on the top side.
    const ChordRep rep{{{0, 6}, {2, 7}, {1, 4}, {3, 5}}};
    const auto inst = StInstance::make(graph_of(rep), 0, 3);
    const auto label = chord_label(rep, inst, Path{0, 1, 2, 3});
    REQUIRE(label.entries.size() == 4);
    CHECK(label.entries[1] == "TT");
    CHECK(label.entries[2] == "TB");
    CHECK(to_string(label) == "(sT)(TT)(TB)(Bt)");
    const auto equator = find_equator(rep);
    REQUIRE(equator.has_value());
    for (const auto& [a, b] : rep.chords) CHECK(equator->top(a, 8) != equator->top(b, 8));

    const ChordRep triangle{{{0, 1}, {2, 3}, {4, 5}}};
    CHECK_FALSE(find_equator(triangle).has_value());
}

TEST_CASE("chord orientations are path independent and labels chain") {
    for (int seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const auto rep = random_chord_rep(5 + static_cast<std::size_t>(seed % 5), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 2, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto orientation = orient_chords(rep, inst);
            const auto space = brute_space(inst);
            for (const auto& p : space.paths) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                    CHECK(*orientation.first_endpoint[static_cast<std::size_t>(p[i])] ==
                          geometry::geometric_first_endpoint(rep, p[i - 1], p[i], p[i + 1]));
                }
                const auto label = chord_label(rep, orientation, p);
                for (std::size_t i = 0; i + 1 < label.entries.size(); ++i) {
                    CHECK(label.entries[i][1] == label.entries[i + 1][0]);
                }
            }
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    if (space.adj[i][j]) {
                        CHECK(chord_label(rep, orientation, space.paths[i]) == chord_label(rep, orientation, space.paths[j]));
                    }
                }
            }
        }
    }
}

TEST_CASE("circle_solve agrees with brute force") {
    std::size_t negatives = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto rep = random_chord_rep(4 + static_cast<std::size_t>(seed % 6), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto space = brute_space(inst);
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    const auto r = circle_solve(rep, inst, space.paths[i], space.paths[j]);
                    REQUIRE(r.reconfigurable == space.connected(i, j));
                    CHECK_FALSE(r.used_fallback);
                    if (!r.reconfigurable) {
                        ++negatives;
                        continue;
                    }
                    REQUIRE(r.sequence);
                    CHECK(replays_validly(inst, *r.sequence, 1, space.paths[j]));
                }
            }
        }
    }
    CHECK(negatives > 0);
}

TEST_CASE("hypercube_solve") {
    const HypercubeRep rep{5, "00101", "10011"};
    const auto inst = StInstance::make(graph_of(rep), hypercube_vertex("00101"), hypercube_vertex("10011"));
    const auto space = brute_space(inst);
    CHECK(space.paths.size() == 6);
    std::vector<int> ones;
    for (const auto& p : space.paths) {
        auto perm = hypercube_permutation(rep, p);
        std::sort(perm.begin(), perm.end());
        CHECK(perm == std::vector<int>{1, 3, 4});
    }
    const Path p = hypercube_path(rep, {1, 3, 4});
    const Path q = hypercube_path(rep, {4, 3, 1});
    CHECK(hypercube_solve(rep, p, p).size() == 0);
    const auto seq = hypercube_solve(rep, p, q);
    CHECK(seq.size() == brute::inversions({1, 3, 4}, {4, 3, 1}));
    CHECK(seq.size() == *brute::bfs(space.adj, space.index(p))[space.index(q)]);
    CHECK(replays_validly(inst, seq, 1, q));
    CHECK_THROWS_AS(hypercube_solve(rep, p, Path{p.front(), p.back()}), InvalidPath);
}

TEST_CASE("kendall_tau") {
    CHECK(kendall_tau({1, 2, 3, 4}, {1, 2, 3, 4}) == 0);
    CHECK(kendall_tau({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}) == 10);
    CHECK(kendall_tau({1, 3, 4}, {4, 3, 1}) == brute::inversions({1, 3, 4}, {4, 3, 1}));
    CHECK_THROWS_AS(kendall_tau({1, 2}, {1, 3}), DomainMismatch);
    CHECK_THROWS_AS(kendall_tau({1, 1}, {1, 1}), DomainMismatch);
}

TEST_CASE("build_look_table") {
    const auto c4 = StInstance::make(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0, 2);
    const auto table = build_look_table(c4);
    CHECK(table.lookup(1, 3) == std::optional<Vertex>{0});
    CHECK(table.lookup(3, 1) == std::optional<Vertex>{0});

    const auto path = StInstance::make(Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 4}}), 0, 3);
    CHECK_FALSE(build_look_table(path).lookup(3, 4).has_value());

    Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(9, 0.35, rng);
        const auto inst = StInstance::make(g, 0, g.neighbors(0).empty() ? 1 : g.neighbors(0)[0]);
        if (g.neighbors(0).empty()) continue;
        const auto d = brute::distances(g);
        const auto look = build_look_table(inst);
        for (Vertex u = 0; u < 9; ++u) {
            for (Vertex v = 0; v < 9; ++v) {
                if (u == v || !brute::reachable(d, 0, u) || d[0][u] != d[0][v] || d[0][u] == 0) continue;
                std::optional<Vertex> expected;
                for (Vertex w = 0; w < 9 && !expected; ++w) {
                    if (d[0][w] + 1 == d[0][u] && g.has_edge(w, u) && g.has_edge(w, v)) expected = w;
                }
                CHECK(look.lookup(u, v) == expected);
            }
        }
    }
}

TEST_CASE("weakly_modular_solve on interval graphs") {
    for (int seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const std::size_t n = 5 + static_cast<std::size_t>(seed % 6);
        const auto g = graph_of(random_interval_rep(n, rng));
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto space = brute_space(inst);
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    REQUIRE(space.connected(i, j));
                    WeaklyModularStats stats;
                    const auto seq = weakly_modular_solve(inst, space.paths[i], space.paths[j], &stats);
                    CHECK(replays_validly(inst, seq, 1, space.paths[j]));
                    CHECK(stats.subproblems <= n * n);
                    if (i == j) CHECK(seq.size() == 0);
                }
            }
        }
    }
}

TEST_CASE("weakly_modular_solve reports a missing common parent") {
    // Five-cycle 0..4 with t = 5 attached to 2 and 3; 2 and 3 are adjacent but share no neighbor at distance 1.
    const auto g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}, {3, 5}});
    const auto inst = StInstance::make(g, 0, 5);
    const auto d = brute::distances(g);
    for (Vertex w = 0; w < 6; ++w) {
        if (d[0][w] == 1) CHECK_FALSE((g.has_edge(w, 2) && g.has_edge(w, 3)));
    }
    CHECK_THROWS_AS(weakly_modular_solve(inst, Path{0, 1, 2, 5}, Path{0, 4, 3, 5}), TriangleConditionViolated);
}

TEST_CASE("circular_arc_solve") {
    // Twelve arcs around the circle form C12; s = 0 and t = 6 leave the two middles in opposite gaps.
    ArcRep cycle;
    for (int i = 0; i < 12; ++i) cycle.arcs.emplace_back(2 * i, (2 * i + 3) % 24);
    const auto c12 = StInstance::make(graph_of(cycle), 0, 6);
    const auto r = circular_arc_solve(cycle, c12, Path{0, 1, 2, 3, 4, 5, 6}, Path{0, 11, 10, 9, 8, 7, 6});
    CHECK_FALSE(r.reconfigurable);
    CHECK_FALSE(brute_space(c12).connected(0, 1));

    std::size_t long_pairs = 0, short_pairs = 0;
    for (int seed = 0; seed < 300; ++seed) {
        Rng rng(seed);
        const auto rep = random_narrow_arc_rep(8 + static_cast<std::size_t>(seed % 6), 3 + static_cast<std::size_t>(seed % 3), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 4, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto space = brute_space(inst);
            if (space.paths.size() > 60) continue;
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    const auto res = circular_arc_solve(rep, inst, space.paths[i], space.paths[j]);
                    REQUIRE(res.reconfigurable == space.connected(i, j));
                    CHECK_FALSE(res.used_fallback);
                    if (res.reconfigurable) CHECK(replays_validly(inst, *res.sequence, 1, space.paths[j]));
                    ++(space.paths[i].size() > 6 ? long_pairs : short_pairs);
                }
            }
        }
    }
    CHECK(long_pairs > 0);
    CHECK(short_pairs > 0);
}

TEST_CASE("bounded_diameter_solve") {
    // Split graph: clique {0,1,2,3}, independent {4,5,6}; 4~0, 5~1,2, 6~3.
    const auto g = Graph::from_edges(
        7, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}});
    const auto inst = StInstance::make(g, 4, 6);
    const auto r = bounded_diameter_solve(inst, Path{4, 0, 3, 6}, Path{4, 0, 3, 6});
    CHECK(r.reconfigurable);
    CHECK(r.sequence->size() == 0);
    const auto d = brute::distances(g);
    for (Vertex u = 0; u < 7; ++u) {
        for (Vertex v = 0; v < 7; ++v) CHECK(d[u][v] <= 3);
    }

    for (int seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const auto rg = random_graph(5 + static_cast<std::size_t>(seed % 5), 0.4, rng);
        for (const auto& [s, t] : st_pairs(rg, 1, 4)) {
            const auto i2 = StInstance::make(rg, s, t);
            const auto space = brute_space(i2);
            for (std::size_t i = 0; i < space.paths.size(); ++i) {
                for (std::size_t j = 0; j < space.paths.size(); ++j) {
                    CHECK(bounded_diameter_solve(i2, space.paths[i], space.paths[j]).reconfigurable ==
                          space.connected(i, j));
                }
            }
        }
    }

    std::vector<Edge> line;
    for (Vertex v = 0; v < 8; ++v) line.emplace_back(v, v + 1);
    const auto long_path = StInstance::make(Graph::from_edges(9, line), 0, 8);
    const Path only{0, 1, 2, 3, 4, 5, 6, 7, 8};
    CHECK_THROWS_AS(bounded_diameter_solve(long_path, only, only), CapExceeded);
}
