#include "spr/errors.hpp"
#include "spr/solvers.hpp"

#include <algorithm>

namespace spr {

namespace {

// 0 or 1: which of the two gaps left between the arcs of s and t contains `position`.
int gap_of(const ArcRep& rep, const StInstance& instance, int position) {
    const int m = static_cast<int>(rep.positions());
    const int s_end = rep.arcs[static_cast<std::size_t>(instance.s)].second;
    const int t_start = rep.arcs[static_cast<std::size_t>(instance.t)].first;
    const int offset = ((position - s_end) % m + m) % m;
    const int span = ((t_start - s_end) % m + m) % m;
    return offset > 0 && offset < span ? 0 : 1;
}

}  // namespace

SolveResult circular_arc_solve(const ArcRep& rep, const StInstance& instance, const Path& p, const Path& q) {
    require_matches(instance.graph, rep);
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    if (p == q) return SolveResult{true, ReconfigSequence{p, {}}, false, {}};
    const std::size_t d = p.size() - 1;
    if (d <= 5) return bounded_diameter_solve(instance, p, q);

    const std::size_t middle = d / 2;
    const auto gap_at = [&](Vertex v) { return gap_of(rep, instance, rep.arcs[static_cast<std::size_t>(v)].first); };
    const int gap = gap_at(p[middle]);
    SolveResult result;
    if (gap != gap_at(q[middle])) return result;

    // Keep the vertices of shortest paths whose middle vertex lies in the shared gap. Their arcs leave
    // the other gap uncovered, so they induce an interval graph.
    const ShortestPathDag dag(instance);
    std::vector<char> keep(instance.n(), 0);
    std::vector<Vertex> stack;
    for (Vertex v : dag.layer_vertices(static_cast<int>(middle))) {
        if (gap_at(v) == gap) stack.push_back(v);
    }
    const std::vector<Vertex> seeds = stack;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (keep[static_cast<std::size_t>(v)]) continue;
        keep[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : dag.predecessors(v)) stack.push_back(u);
    }
    for (Vertex v : seeds) {
        for (Vertex w : dag.successors(v)) stack.push_back(w);
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (keep[static_cast<std::size_t>(v)]) continue;
        keep[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : dag.successors(v)) stack.push_back(w);
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < static_cast<Vertex>(instance.n()); ++v) {
        if (keep[static_cast<std::size_t>(v)]) kept.push_back(v);
    }
    std::vector<Vertex> old_ids;
    Graph sub = instance.graph.induced(kept, &old_ids);
    std::vector<Vertex> new_id(instance.n(), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<Vertex>(i);
    const auto to_sub = [&](const Path& path) {
        Path out;
        for (Vertex v : path) out.push_back(new_id[static_cast<std::size_t>(v)]);
        return out;
    };
    const auto sub_instance = StInstance::make(std::move(sub), new_id[static_cast<std::size_t>(instance.s)],
                                               new_id[static_cast<std::size_t>(instance.t)]);

    result.reconfigurable = true;
    try {
        const auto seq = weakly_modular_solve(sub_instance, to_sub(p), to_sub(q));
        std::vector<Path> stages;
        for (const Path& stage : seq.stages()) {
            Path mapped;
            for (Vertex v : stage) mapped.push_back(old_ids[static_cast<std::size_t>(v)]);
            stages.push_back(std::move(mapped));
        }
        result.sequence = ReconfigSequence::from_stages(stages);
    } catch (const TriangleConditionViolated& e) {
        result.used_fallback = true;
        result.notes.push_back(std::string("interval restriction is not weakly modular: ") + e.what());
        result.sequence = shortest_reconfig_sequence(instance, p, q, 1);
        if (!result.sequence) result.notes.push_back("oracle finds no sequence for paths sharing a gap");
    }
    return result;
}

}  // namespace spr
