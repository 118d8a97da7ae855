#include "spr/generators.hpp"

#include <algorithm>
#include <numeric>

namespace spr {

namespace {

std::vector<int> shuffled_positions(std::size_t count, Rng& rng) {
    std::vector<int> positions(count);
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    return positions;
}

}  // namespace

PermutationRep random_permutation_rep(std::size_t n, Rng& rng) {
    PermutationRep rep{shuffled_positions(n, rng)};
    for (int& value : rep.sigma) ++value;
    return rep;
}

PermutationRep random_local_permutation_rep(std::size_t n, double spread, Rng& rng) {
    std::uniform_real_distribution<double> jitter(0.0, spread);
    std::vector<std::pair<double, int>> keyed;
    for (std::size_t i = 0; i < n; ++i) keyed.emplace_back(static_cast<double>(i) + jitter(rng), static_cast<int>(i) + 1);
    std::sort(keyed.begin(), keyed.end());
    PermutationRep rep;
    for (const auto& entry : keyed) rep.sigma.push_back(entry.second);
    return rep;
}

ChordRep random_chord_rep(std::size_t n, Rng& rng) {
    const auto positions = shuffled_positions(2 * n, rng);
    ChordRep rep;
    for (std::size_t v = 0; v < n; ++v) rep.chords.emplace_back(positions[2 * v], positions[2 * v + 1]);
    return rep;
}

ArcRep random_arc_rep(std::size_t n, Rng& rng) {
    const auto positions = shuffled_positions(2 * n, rng);
    ArcRep rep;
    for (std::size_t v = 0; v < n; ++v) rep.arcs.emplace_back(positions[2 * v], positions[2 * v + 1]);
    return rep;
}

ArcRep random_narrow_interval_rep(std::size_t n, std::size_t width, Rng& rng) {
    const int m = static_cast<int>(2 * n);
    ArcRep rep;
    rep.arcs.resize(n);
    std::vector<std::pair<std::size_t, int>> open;  // (vertex, start)
    std::size_t next = 0;
    std::bernoulli_distribution coin(0.5);
    for (int position = 0; position < m; ++position) {
        const bool must_close = !open.empty() && static_cast<std::size_t>(position - open.front().second) >= width;
        const bool can_open = next < n;
        if (!open.empty() && (must_close || !can_open || coin(rng))) {
            std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
            const std::size_t i = must_close ? 0 : pick(rng);
            rep.arcs[open[i].first] = {open[i].second, position};
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            open.emplace_back(next++, position);
        }
    }
    return rep;
}

ArcRep random_narrow_arc_rep(std::size_t n, std::size_t width, Rng& rng) {
    ArcRep rep = random_narrow_interval_rep(n, width, rng);
    const int m = static_cast<int>(2 * n);
    const int shift = std::uniform_int_distribution<int>(0, m - 1)(rng);
    for (auto& [a, b] : rep.arcs) {
        a = (a + shift) % m;
        b = (b + shift) % m;
    }
    return rep;
}

ChordRep random_narrow_chord_rep(std::size_t n, std::size_t width, Rng& rng) {
    ChordRep rep;
    for (const auto& arc : random_narrow_arc_rep(n, width, rng).arcs) rep.chords.push_back(arc);
    return rep;
}

ArcRep random_interval_rep(std::size_t n, Rng& rng) {
    ArcRep rep = random_arc_rep(n, rng);
    for (auto& [a, b] : rep.arcs) {
        if (a > b) std::swap(a, b);
    }
    return rep;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

std::vector<std::pair<Vertex, Vertex>> st_pairs(const Graph& graph, int min_distance, int max_distance) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex s = 0; s < static_cast<Vertex>(graph.vertex_count()); ++s) {
        const auto layering = bfs_layering(graph, s);
        for (Vertex t = 0; t < static_cast<Vertex>(graph.vertex_count()); ++t) {
            const int d = layering.layer(t);
            if (t != s && d != BfsLayering::kUnreached && d >= min_distance && d <= max_distance) out.emplace_back(s, t);
        }
    }
    return out;
}

}  // namespace spr
