#pragma once

#include "spr/graph.hpp"

#include <functional>

namespace spr {

struct LabeledLineGraph {
    Graph graph;
    // origin[i] is the edge (x, y), x < y, that line-graph vertex i stands for; i is its edge id.
    std::vector<Edge> origin;
};

// Throws EmptyGraph when g has no edges.
LabeledLineGraph line_graph(const Graph& g);

struct ReducedInstance {
    StInstance instance;
    // Sends an s-t shortest path of the source instance to one of the target instance.
    std::function<Path(const Path&)> forward_path_map;
};

// Each edge from an even BFS layer (from s) to the next layer becomes a path on k vertices. The k-2 new
// vertices of each edge are appended in edge-id order, listed from the smaller endpoint to the larger.
Graph even_odd_subdivide(const StInstance& instance, std::size_t k);

// Line graph of the even-odd subdivision with pendant s* at s and t* at t; s' = s*s and t' = tt*.
// Throws PreconditionViolated when k < 2.
ReducedInstance kspr_line_instance(const StInstance& src, std::size_t k);

// G^k: u and v adjacent iff 1 <= d(u, v) <= k. Throws PreconditionViolated when k < 1.
Graph graph_power(const Graph& g, std::size_t k);

// (G^k, s, t); a shortest path maps to every k-th vertex followed by t.
ReducedInstance power_instance(const StInstance& src, std::size_t k);

// Every edge becomes a path with l new interior vertices, appended in edge-id order.
Graph subdivide_uniform(const Graph& g, std::size_t l);

// g copies of K_{2,l} in series. Vertex 0 is s, gadget j spans ids j(l+1) .. (j+1)(l+1), t is the last id.
StInstance gadget_chain(std::size_t g, std::size_t l);

}  // namespace spr
