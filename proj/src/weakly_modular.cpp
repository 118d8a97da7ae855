#include "spr/errors.hpp"
#include "spr/solvers.hpp"

#include <algorithm>
#include <map>

namespace spr {

LookTable::LookTable(std::size_t n, std::vector<int> layer, std::vector<Vertex> table)
    : n_(n), layer_(std::move(layer)), table_(std::move(table)) {}

std::optional<Vertex> LookTable::lookup(Vertex u, Vertex v) const {
    const Vertex w = table_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
    if (w < 0) return std::nullopt;
    return w;
}

std::size_t LookTable::entry_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](Vertex w) { return w >= 0; }));
}

LookTable build_look_table(const StInstance& instance) {
    const std::size_t n = instance.n();
    const auto layering = bfs_layering(instance, instance.s);
    std::vector<Vertex> table(n * n, -1);
    for (Vertex w = 0; w < static_cast<Vertex>(n); ++w) {
        if (!layering.reached(w)) continue;
        std::vector<Vertex> children;
        for (Vertex x : instance.graph.neighbors(w)) {
            if (layering.layer(x) == layering.layer(w) + 1) children.push_back(x);
        }
        for (Vertex u : children) {
            for (Vertex v : children) {
                auto& slot = table[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
                if (u != v && slot < 0) slot = w;
            }
        }
    }
    return LookTable(n, layering.layers(), std::move(table));
}

namespace {

struct Replacement {
    std::size_t index;
    Vertex vertex;
};

class CanonicalMerger {
public:
    explicit CanonicalMerger(const StInstance& instance) : graph_(instance.graph), look_(build_look_table(instance)) {
        parent_.assign(instance.n(), -1);
        for (Vertex v = 0; v < static_cast<Vertex>(instance.n()); ++v) {
            for (Vertex u : graph_.neighbors(v)) {
                if (look_.layer(v) > 0 && look_.layer(u) == look_.layer(v) - 1) {
                    parent_[static_cast<std::size_t>(v)] = u;
                    break;
                }
            }
        }
    }

    // Stages turning `path` into the canonical least-parent path to t.
    std::vector<Path> to_canonical(const Path& path) {
        std::vector<Path> stages{path};
        Path current = path;
        for (std::size_t j = 2; j < path.size(); ++j) {
            for (const auto& r : swap_prefix(current[j - 1], parent_[static_cast<std::size_t>(path[j])])) {
                current[r.index] = r.vertex;
                stages.push_back(current);
            }
        }
        return stages;
    }

    std::size_t subproblems() const noexcept { return memo_.size(); }

private:
    // Replacements turning the canonical prefix ending in u into the one ending in v. Both u and v
    // must be adjacent to the vertex that follows them.
    const std::vector<Replacement>& swap_prefix(Vertex u, Vertex v) {
        static const std::vector<Replacement> kNone;
        if (u == v) return kNone;
        if (auto it = memo_.find({u, v}); it != memo_.end()) return it->second;
        const auto w = look_.lookup(u, v);
        if (!w) {
            throw TriangleConditionViolated("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                            " have no common neighbor one layer closer to s");
        }
        std::vector<Replacement> out;
        const Vertex pu = parent_[static_cast<std::size_t>(u)];
        const Vertex pv = parent_[static_cast<std::size_t>(v)];
        if (pu != *w) {
            const auto& head = swap_prefix(pu, *w);
            out.insert(out.end(), head.begin(), head.end());
        }
        out.push_back({static_cast<std::size_t>(look_.layer(u)), v});
        if (*w != pv) {
            const auto& tail = swap_prefix(*w, pv);
            out.insert(out.end(), tail.begin(), tail.end());
        }
        return memo_.emplace(std::pair{u, v}, std::move(out)).first->second;
    }

    const Graph& graph_;
    LookTable look_;
    std::vector<Vertex> parent_;
    std::map<std::pair<Vertex, Vertex>, std::vector<Replacement>> memo_;
};

}  // namespace

ReconfigSequence weakly_modular_solve(const StInstance& instance, const Path& p, const Path& q,
                                      WeaklyModularStats* stats) {
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    if (p == q) return ReconfigSequence{p, {}};
    CanonicalMerger merger(instance);
    auto stages = merger.to_canonical(p);
    const auto back = merger.to_canonical(q);
    stages.insert(stages.end(), back.rbegin() + 1, back.rend());
    if (stats) stats->subproblems = merger.subproblems();
    return ReconfigSequence::from_stages(stages);
}

}  // namespace spr
