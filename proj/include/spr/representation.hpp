#pragma once

#include "spr/graph.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace spr {

// Vertex v (0-based) sits at top position v+1 and bottom position sigma[v]; sigma is a bijection on 1..n.
// Vertices i < j are adjacent iff sigma[i] > sigma[j].
struct PermutationRep {
    std::vector<int> sigma;

    std::size_t size() const noexcept { return sigma.size(); }
    friend bool operator==(const PermutationRep&, const PermutationRep&) = default;
};

// Chord endpoints on a circle of 2n integer positions 0..2n-1, all distinct.
struct ChordRep {
    std::vector<std::pair<int, int>> chords;

    std::size_t size() const noexcept { return chords.size(); }
    std::size_t positions() const noexcept { return 2 * chords.size(); }
    bool crosses(Vertex u, Vertex v) const;
    friend bool operator==(const ChordRep&, const ChordRep&) = default;
};

// Arc v runs clockwise from arcs[v].first to arcs[v].second on a circle of 2n integer positions.
struct ArcRep {
    std::vector<std::pair<int, int>> arcs;

    std::size_t size() const noexcept { return arcs.size(); }
    std::size_t positions() const noexcept { return 2 * arcs.size(); }
    bool covers(Vertex v, int position) const;
    bool intersects(Vertex u, Vertex v) const;
    friend bool operator==(const ArcRep&, const ArcRep&) = default;
};

// Vertices of the d-cube are bit strings; vertex id = the string read as a binary number, position 1 first.
struct HypercubeRep {
    int dimension = 0;
    std::string s_bits;
    std::string t_bits;

    std::size_t size() const noexcept { return std::size_t{1} << dimension; }
    friend bool operator==(const HypercubeRep&, const HypercubeRep&) = default;
};

using Representation = std::variant<PermutationRep, ChordRep, ArcRep, HypercubeRep>;

// Each builder validates the representation and throws InvalidRepresentation when malformed.
Graph graph_of(const PermutationRep& rep);
Graph graph_of(const ChordRep& rep);
Graph graph_of(const ArcRep& rep);
Graph graph_of(const HypercubeRep& rep);

// Throws InvalidRepresentation when the representation does not induce exactly `graph`.
void require_matches(const Graph& graph, const Representation& rep);

Vertex hypercube_vertex(const std::string& bits);
std::string hypercube_bits(Vertex v, int dimension);

}  // namespace spr
