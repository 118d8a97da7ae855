#include "merge.hpp"
#include "spr/errors.hpp"
#include "spr/solvers.hpp"

namespace spr {

char to_char(EdgeType type) { return type == EdgeType::kL ? 'L' : 'R'; }

namespace {

EdgeType edge_type(const ShortestPathDag& dag, const Graph& graph, Vertex from, Vertex to) {
    if (!graph.contains(from) || !graph.contains(to) || !graph.has_edge(from, to) || !dag.on_shortest_path(from) ||
        !dag.on_shortest_path(to) || dag.layer(to) != dag.layer(from) + 1) {
        throw EdgeNotOnShortestPath("edge (" + std::to_string(from) + "," + std::to_string(to) +
                                    ") is not an s-side oriented shortest-path edge");
    }
    return to < from ? EdgeType::kL : EdgeType::kR;
}

void require_alternation(const ShortestPathDag& dag, const Graph& graph, const Path& path) {
    for (std::size_t i = 2; i < path.size(); ++i) {
        if (edge_type(dag, graph, path[i - 2], path[i - 1]) == edge_type(dag, graph, path[i - 1], path[i])) {
            throw InternalError("consecutive shortest-path edges share a type at index " + std::to_string(i - 1));
        }
    }
}

}  // namespace

EdgeType lr_edge_type(const PermutationRep& rep, const StInstance& instance, Vertex from, Vertex to) {
    require_matches(instance.graph, rep);
    return edge_type(ShortestPathDag(instance), instance.graph, from, to);
}

SolveResult permutation_solve(const PermutationRep& rep, const StInstance& instance, const Path& p, const Path& q) {
    require_matches(instance.graph, rep);
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    if (p == q) return SolveResult{true, ReconfigSequence{p, {}}, false, {}};
    if (p.size() <= 3) return bounded_diameter_solve(instance, p, q);

    const ShortestPathDag dag(instance);
    require_alternation(dag, instance.graph, p);
    require_alternation(dag, instance.graph, q);
    SolveResult result;
    result.reconfigurable =
        edge_type(dag, instance.graph, p[0], p[1]) == edge_type(dag, instance.graph, q[0], q[1]);
    if (!result.reconfigurable) return result;

    auto stages = detail::merge_prefixes(instance.graph, p, q);
    if (!stages) throw InternalError("prefix merge stalled on paths with equal first-edge types");
    result.sequence = ReconfigSequence::from_stages(*stages);
    return result;
}

}  // namespace spr
