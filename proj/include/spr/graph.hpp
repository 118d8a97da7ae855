#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace spr {

using Vertex = int;
using Path = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using BigInt = boost::multiprecision::cpp_int;

// Undirected simple graph on dense ids 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {}

    // Throws InvalidInstance on self-loops, duplicates or out-of-range ids.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }

    // Edges as (u, v) with u < v, lexicographically sorted. Position in this list is the edge id.
    std::vector<Edge> edges() const;

    Graph induced(std::span<const Vertex> keep, std::vector<Vertex>* old_ids = nullptr) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct StInstance {
    Graph graph;
    Vertex s = 0;
    Vertex t = 0;

    // Validates s != t, range, and reachability of t.
    static StInstance make(Graph graph, Vertex s, Vertex t);

    std::size_t n() const noexcept { return graph.vertex_count(); }
};

class BfsLayering {
public:
    static constexpr int kUnreached = -1;

    BfsLayering(Vertex source, std::vector<int> layer) : source_(source), layer_(std::move(layer)) {}

    Vertex source() const noexcept { return source_; }
    bool reached(Vertex v) const { return layer_[static_cast<std::size_t>(v)] != kUnreached; }
    int layer(Vertex v) const { return layer_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& layers() const noexcept { return layer_; }
    int depth() const;
    // Vertices grouped by distance, each group sorted by id.
    std::vector<std::vector<Vertex>> groups() const;

private:
    Vertex source_;
    std::vector<int> layer_;
};

BfsLayering bfs_layering(const Graph& graph, Vertex source);
inline BfsLayering bfs_layering(const StInstance& instance, Vertex source) {
    return bfs_layering(instance.graph, source);
}

enum class PathDefect {
    kNone,
    kEmpty,
    kOutOfRange,
    kWrongEndpoints,
    kNotAdjacent,
    kRepeatedVertex,
    kNotShortest,
};

std::string_view to_string(PathDefect defect);

struct PathCheck {
    PathDefect defect = PathDefect::kNone;
    explicit operator bool() const noexcept { return defect == PathDefect::kNone; }
};

PathCheck check_st_shortest_path(const StInstance& instance, std::span<const Vertex> path);
inline bool is_st_shortest_path(const StInstance& instance, std::span<const Vertex> path) {
    return static_cast<bool>(check_st_shortest_path(instance, path));
}

// The s-t shortest-path DAG: distances from both ends, and for each vertex on some
// shortest path its successors (sorted by id) one layer closer to t.
class ShortestPathDag {
public:
    explicit ShortestPathDag(const StInstance& instance);

    int distance() const noexcept { return distance_; }
    int layer(Vertex v) const { return from_s_.layer(v); }
    bool on_shortest_path(Vertex v) const { return on_path_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> successors(Vertex v) const { return succ_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> predecessors(Vertex v) const { return pred_[static_cast<std::size_t>(v)]; }
    // Vertices on shortest paths at the given layer, sorted by id.
    std::span<const Vertex> layer_vertices(int layer) const { return by_layer_[static_cast<std::size_t>(layer)]; }
    const BfsLayering& from_source() const noexcept { return from_s_; }
    const BfsLayering& to_target() const noexcept { return to_t_; }

    // All u -> ... -> v paths inside the DAG (u strictly earlier than v), lexicographic order.
    std::vector<Path> paths_between(Vertex u, Vertex v) const;

private:
    BfsLayering from_s_;
    BfsLayering to_t_;
    int distance_ = 0;
    std::vector<bool> on_path_;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
    std::vector<std::vector<Vertex>> by_layer_;
};

Graph prune_to_shortest_dag(const StInstance& instance);

BigInt count_shortest_paths(const StInstance& instance);

// Lexicographic enumeration; throws CapExceeded when more than `cap` paths exist.
std::vector<Path> enumerate_shortest_paths(const StInstance& instance, std::size_t cap);

// {w : d(u,w) + d(w,v) = d(u,v)}, sorted. Throws DisconnectedPair.
std::vector<Vertex> interval(const Graph& graph, Vertex u, Vertex v);

}  // namespace spr
