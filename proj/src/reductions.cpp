#include "spr/reductions.hpp"

#include "spr/errors.hpp"
#include "spr/oracle.hpp"

#include <deque>
#include <map>

namespace spr {

LabeledLineGraph line_graph(const Graph& g) {
    if (g.edge_count() == 0) throw EmptyGraph("line graph of an edgeless graph");
    LabeledLineGraph out;
    out.origin = g.edges();
    std::vector<std::vector<Vertex>> incident(g.vertex_count());
    for (std::size_t i = 0; i < out.origin.size(); ++i) {
        incident[static_cast<std::size_t>(out.origin[i].first)].push_back(static_cast<Vertex>(i));
        incident[static_cast<std::size_t>(out.origin[i].second)].push_back(static_cast<Vertex>(i));
    }
    std::vector<Edge> edges;
    for (const auto& list : incident) {
        for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
        }
    }
    // Two distinct simple-graph edges share at most one endpoint, so no pair repeats.
    out.graph = Graph::from_edges(out.origin.size(), edges);
    return out;
}

namespace {

struct Subdivision {
    Graph graph;
    // Interior chain of each expanded edge, from its smaller endpoint to its larger one.
    std::map<Edge, std::vector<Vertex>> chains;
};

Subdivision expand_even_odd(const StInstance& instance, std::size_t k) {
    const auto layering = bfs_layering(instance, instance.s);
    Subdivision out;
    std::vector<Edge> edges;
    Vertex next = static_cast<Vertex>(instance.n());
    for (const auto& [u, v] : instance.graph.edges()) {
        const int lu = layering.layer(u);
        const int lv = layering.layer(v);
        const bool even_odd = lu != BfsLayering::kUnreached && lv != BfsLayering::kUnreached &&
                              std::abs(lu - lv) == 1 && std::min(lu, lv) % 2 == 0;
        if (!even_odd || k == 2) {
            edges.emplace_back(u, v);
            continue;
        }
        std::vector<Vertex> chain;
        for (std::size_t i = 0; i + 2 < k; ++i) chain.push_back(next++);
        Vertex prev = u;
        for (Vertex x : chain) {
            edges.emplace_back(prev, x);
            prev = x;
        }
        edges.emplace_back(prev, v);
        out.chains.emplace(Edge{u, v}, std::move(chain));
    }
    out.graph = Graph::from_edges(static_cast<std::size_t>(next), edges);
    return out;
}

// Vertices of the walk through the subdivision that follows `path`.
Path stretch(const Subdivision& sub, const Path& path) {
    Path out{path.front()};
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Vertex a = path[i - 1];
        const Vertex b = path[i];
        if (auto it = sub.chains.find({std::min(a, b), std::max(a, b)}); it != sub.chains.end()) {
            if (a < b) {
                out.insert(out.end(), it->second.begin(), it->second.end());
            } else {
                out.insert(out.end(), it->second.rbegin(), it->second.rend());
            }
        }
        out.push_back(b);
    }
    return out;
}

}  // namespace

Graph even_odd_subdivide(const StInstance& instance, std::size_t k) {
    if (k < 2) throw PreconditionViolated("even-odd subdivision needs k >= 2");
    return expand_even_odd(instance, k).graph;
}

ReducedInstance kspr_line_instance(const StInstance& src, std::size_t k) {
    if (k < 2) throw PreconditionViolated("line-graph reduction needs k >= 2");
    auto sub = expand_even_odd(src, k);
    const auto base = static_cast<Vertex>(sub.graph.vertex_count());
    const Vertex s_star = base;
    const Vertex t_star = base + 1;
    auto edges = sub.graph.edges();
    edges.emplace_back(src.s, s_star);
    edges.emplace_back(src.t, t_star);
    sub.graph = Graph::from_edges(static_cast<std::size_t>(base) + 2, edges);

    auto line = line_graph(sub.graph);
    std::map<Edge, Vertex> edge_id;
    for (std::size_t i = 0; i < line.origin.size(); ++i) edge_id.emplace(line.origin[i], static_cast<Vertex>(i));
    const auto id_of = [edge_id](Vertex a, Vertex b) { return edge_id.at({std::min(a, b), std::max(a, b)}); };

    const Vertex s_prime = id_of(s_star, src.s);
    const Vertex t_prime = id_of(src.t, t_star);
    auto instance = StInstance::make(std::move(line.graph), s_prime, t_prime);
    auto map = [src, sub = std::move(sub), id_of, s_star, t_star](const Path& path) {
        require_shortest_path(src, path, "source path");
        Path walk{s_star};
        const Path stretched = stretch(sub, path);
        walk.insert(walk.end(), stretched.begin(), stretched.end());
        walk.push_back(t_star);
        Path out;
        for (std::size_t i = 1; i < walk.size(); ++i) out.push_back(id_of(walk[i - 1], walk[i]));
        return out;
    };
    return ReducedInstance{std::move(instance), std::move(map)};
}

Graph graph_power(const Graph& g, std::size_t k) {
    if (k < 1) throw PreconditionViolated("graph power needs k >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u) {
        const auto layering = bfs_layering(g, u);
        for (Vertex v = u + 1; v < static_cast<Vertex>(g.vertex_count()); ++v) {
            const int d = layering.layer(v);
            if (d != BfsLayering::kUnreached && static_cast<std::size_t>(d) <= k) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

ReducedInstance power_instance(const StInstance& src, std::size_t k) {
    auto instance = StInstance::make(graph_power(src.graph, k), src.s, src.t);
    auto map = [src, k](const Path& path) {
        require_shortest_path(src, path, "source path");
        Path out;
        for (std::size_t i = 0; i + 1 < path.size(); i += k) out.push_back(path[i]);
        out.push_back(path.back());
        return out;
    };
    return ReducedInstance{std::move(instance), std::move(map)};
}

Graph subdivide_uniform(const Graph& g, std::size_t l) {
    std::vector<Edge> edges;
    Vertex next = static_cast<Vertex>(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        Vertex prev = u;
        for (std::size_t i = 0; i < l; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

StInstance gadget_chain(std::size_t g, std::size_t l) {
    if (g < 1 || l < 1) throw PreconditionViolated("gadget chain needs g, l >= 1");
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < g; ++j) {
        const auto start = static_cast<Vertex>(j * (l + 1));
        const auto end = static_cast<Vertex>(start + static_cast<Vertex>(l) + 1);
        for (Vertex m = start + 1; m < end; ++m) {
            edges.emplace_back(start, m);
            edges.emplace_back(m, end);
        }
    }
    const std::size_t n = 1 + g * (l + 1);
    return StInstance::make(Graph::from_edges(n, edges), 0, static_cast<Vertex>(n - 1));
}

}  // namespace spr
