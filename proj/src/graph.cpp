#include "spr/graph.hpp"

#include "spr/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace spr {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (!g.contains(u) || !g.contains(v)) {
            throw InvalidInstance("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw InvalidInstance("self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = g.adjacency_[v];
        std::sort(list.begin(), list.end());
        if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
            throw InvalidInstance("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep, std::vector<Vertex>* old_ids) const {
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Vertex> new_id(adjacency_.size(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) new_id[static_cast<std::size_t>(sorted[i])] = static_cast<Vertex>(i);
    std::vector<Edge> kept;
    for (const auto& [u, v] : edges()) {
        Vertex a = new_id[static_cast<std::size_t>(u)];
        Vertex b = new_id[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    if (old_ids) *old_ids = sorted;
    return from_edges(sorted.size(), kept);
}

StInstance StInstance::make(Graph graph, Vertex s, Vertex t) {
    if (!graph.contains(s)) throw InvalidInstance("s = " + std::to_string(s) + " out of range");
    if (!graph.contains(t)) throw InvalidInstance("t = " + std::to_string(t) + " out of range");
    if (s == t) throw InvalidInstance("s and t coincide");
    if (!bfs_layering(graph, s).reached(t)) throw InvalidInstance("t is unreachable from s");
    return StInstance{std::move(graph), s, t};
}

int BfsLayering::depth() const {
    int best = kUnreached;
    for (int l : layer_) best = std::max(best, l);
    return best;
}

std::vector<std::vector<Vertex>> BfsLayering::groups() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(depth() + 1));
    for (std::size_t v = 0; v < layer_.size(); ++v) {
        if (layer_[v] != kUnreached) out[static_cast<std::size_t>(layer_[v])].push_back(static_cast<Vertex>(v));
    }
    return out;
}

BfsLayering bfs_layering(const Graph& graph, Vertex source) {
    std::vector<int> layer(graph.vertex_count(), BfsLayering::kUnreached);
    std::deque<Vertex> queue{source};
    layer[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : graph.neighbors(u)) {
            if (layer[static_cast<std::size_t>(w)] == BfsLayering::kUnreached) {
                layer[static_cast<std::size_t>(w)] = layer[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return BfsLayering(source, std::move(layer));
}

std::string_view to_string(PathDefect defect) {
    switch (defect) {
        case PathDefect::kNone: return "ok";
        case PathDefect::kEmpty: return "empty";
        case PathDefect::kOutOfRange: return "vertex out of range";
        case PathDefect::kWrongEndpoints: return "does not run from s to t";
        case PathDefect::kNotAdjacent: return "consecutive vertices not adjacent";
        case PathDefect::kRepeatedVertex: return "repeated vertex";
        case PathDefect::kNotShortest: return "not a shortest path";
    }
    return "unknown";
}

PathCheck check_st_shortest_path(const StInstance& instance, std::span<const Vertex> path) {
    if (path.empty()) return {PathDefect::kEmpty};
    for (Vertex v : path) {
        if (!instance.graph.contains(v)) return {PathDefect::kOutOfRange};
    }
    if (path.front() != instance.s || path.back() != instance.t) return {PathDefect::kWrongEndpoints};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!instance.graph.has_edge(path[i], path[i + 1])) return {PathDefect::kNotAdjacent};
    }
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {PathDefect::kRepeatedVertex};
    const int d = bfs_layering(instance.graph, instance.s).layer(instance.t);
    if (static_cast<int>(path.size()) - 1 != d) return {PathDefect::kNotShortest};
    return {};
}

ShortestPathDag::ShortestPathDag(const StInstance& instance)
    : from_s_(bfs_layering(instance.graph, instance.s)), to_t_(bfs_layering(instance.graph, instance.t)) {
    const std::size_t n = instance.n();
    distance_ = from_s_.layer(instance.t);
    on_path_.assign(n, false);
    succ_.assign(n, {});
    pred_.assign(n, {});
    by_layer_.assign(static_cast<std::size_t>(distance_ + 1), {});
    for (std::size_t v = 0; v < n; ++v) {
        const auto vv = static_cast<Vertex>(v);
        if (from_s_.reached(vv) && to_t_.reached(vv) && from_s_.layer(vv) + to_t_.layer(vv) == distance_) {
            on_path_[v] = true;
            by_layer_[static_cast<std::size_t>(from_s_.layer(vv))].push_back(vv);
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (!on_path_[u]) continue;
        const auto uu = static_cast<Vertex>(u);
        for (Vertex w : instance.graph.neighbors(uu)) {
            if (on_path_[static_cast<std::size_t>(w)] && from_s_.layer(w) == from_s_.layer(uu) + 1) {
                succ_[u].push_back(w);
                pred_[static_cast<std::size_t>(w)].push_back(uu);
            }
        }
    }
    for (auto& list : pred_) std::sort(list.begin(), list.end());
}

std::vector<Path> ShortestPathDag::paths_between(Vertex u, Vertex v) const {
    std::vector<Path> out;
    if (!on_shortest_path(u) || !on_shortest_path(v)) return out;
    const int target_layer = layer(v);
    if (target_layer <= layer(u)) return out;
    // Iterative DFS; branches are cut once they reach the target layer.
    Path current{u};
    std::vector<std::size_t> cursor{0};
    while (!current.empty()) {
        Vertex x = current.back();
        if (x == v) {
            out.push_back(current);
            current.pop_back();
            cursor.pop_back();
            continue;
        }
        auto next = successors(x);
        std::size_t& i = cursor.back();
        if (layer(x) >= target_layer || i >= next.size()) {
            current.pop_back();
            cursor.pop_back();
            continue;
        }
        current.push_back(next[i++]);
        cursor.push_back(0);
    }
    return out;
}

Graph prune_to_shortest_dag(const StInstance& instance) {
    ShortestPathDag dag(instance);
    std::vector<Edge> kept;
    for (const auto& [u, v] : instance.graph.edges()) {
        if (!dag.on_shortest_path(u) || !dag.on_shortest_path(v)) continue;
        const auto& su = dag.successors(u);
        const auto& sv = dag.successors(v);
        if (std::binary_search(su.begin(), su.end(), v) || std::binary_search(sv.begin(), sv.end(), u)) {
            kept.emplace_back(u, v);
        }
    }
    return Graph::from_edges(instance.n(), kept);
}

BigInt count_shortest_paths(const StInstance& instance) {
    ShortestPathDag dag(instance);
    std::vector<BigInt> ways(instance.n());
    ways[static_cast<std::size_t>(instance.s)] = 1;
    for (int l = 0; l < dag.distance(); ++l) {
        for (Vertex u : dag.layer_vertices(l)) {
            for (Vertex w : dag.successors(u)) ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(u)];
        }
    }
    return ways[static_cast<std::size_t>(instance.t)];
}

std::vector<Path> enumerate_shortest_paths(const StInstance& instance, std::size_t cap) {
    if (cap == 0) throw PreconditionViolated("path cap must be positive");
    ShortestPathDag dag(instance);
    std::vector<Path> out;
    Path current{instance.s};
    std::vector<std::size_t> cursor{0};
    while (!current.empty()) {
        Vertex x = current.back();
        if (x == instance.t) {
            if (out.size() == cap) throw CapExceeded(cap);
            out.push_back(current);
            current.pop_back();
            cursor.pop_back();
            continue;
        }
        auto next = dag.successors(x);
        std::size_t& i = cursor.back();
        if (i >= next.size()) {
            current.pop_back();
            cursor.pop_back();
            continue;
        }
        current.push_back(next[i++]);
        cursor.push_back(0);
    }
    return out;
}

std::vector<Vertex> interval(const Graph& graph, Vertex u, Vertex v) {
    const auto from_u = bfs_layering(graph, u);
    if (!from_u.reached(v)) {
        throw DisconnectedPair("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are disconnected");
    }
    const auto from_v = bfs_layering(graph, v);
    const int d = from_u.layer(v);
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < graph.vertex_count(); ++w) {
        const auto ww = static_cast<Vertex>(w);
        if (from_u.reached(ww) && from_v.reached(ww) && from_u.layer(ww) + from_v.layer(ww) == d) out.push_back(ww);
    }
    return out;
}

}  // namespace spr
