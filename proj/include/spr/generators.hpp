#pragma once

#include "spr/graph.hpp"
#include "spr/representation.hpp"

#include <random>

namespace spr {

using Rng = std::mt19937_64;

PermutationRep random_permutation_rep(std::size_t n, Rng& rng);
// Each value lands near its own position; jitter up to `spread` keeps the graph path-like.
PermutationRep random_local_permutation_rep(std::size_t n, double spread, Rng& rng);
ChordRep random_chord_rep(std::size_t n, Rng& rng);
// Chords of at most `width` positions, rotated.
ChordRep random_narrow_chord_rep(std::size_t n, std::size_t width, Rng& rng);
// Arcs may wrap around position 0.
ArcRep random_arc_rep(std::size_t n, Rng& rng);
// Intervals spanning at most `width` positions, never wrapping.
ArcRep random_narrow_interval_rep(std::size_t n, std::size_t width, Rng& rng);
// Every arc spans at most `width` positions, then rotated; yields long geodesics.
ArcRep random_narrow_arc_rep(std::size_t n, std::size_t width, Rng& rng);
// Arcs never wrap, so the intersection graph is an interval graph.
ArcRep random_interval_rep(std::size_t n, Rng& rng);
// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

// Ordered pairs (s, t), s != t, with t reachable from s and min_distance <= d(s,t) <= max_distance.
std::vector<std::pair<Vertex, Vertex>> st_pairs(const Graph& graph, int min_distance, int max_distance);

}  // namespace spr
