#include "spr/oracle.hpp"

#include "spr/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace spr {

std::size_t change_span(const Path& a, const Path& b) {
    if (a.size() != b.size()) throw InvalidPath("paths of different lengths");
    std::size_t first = a.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            first = std::min(first, i);
            last = i;
        }
    }
    return first == a.size() ? 0 : last - first + 1;
}

KStep step_between(const Path& from, const Path& to) {
    if (from.size() != to.size()) throw InvalidPath("paths of different lengths");
    std::size_t first = from.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] != to[i]) {
            first = std::min(first, i);
            last = i;
        }
    }
    if (first == from.size()) throw InvalidPath("a step must change at least one vertex");
    if (first == 0 || last + 1 == from.size()) throw InvalidPath("a step may not replace s or t");
    KStep step;
    step.anchor_lo = first - 1;
    step.anchor_hi = last + 1;
    step.old_block.assign(from.begin() + static_cast<std::ptrdiff_t>(first), from.begin() + static_cast<std::ptrdiff_t>(last + 1));
    step.new_block.assign(to.begin() + static_cast<std::ptrdiff_t>(first), to.begin() + static_cast<std::ptrdiff_t>(last + 1));
    return step;
}

Path apply_step(const Path& path, const KStep& step) {
    if (step.anchor_hi >= path.size() || step.anchor_hi - step.anchor_lo - 1 != step.new_block.size() ||
        step.old_block.size() != step.new_block.size()) {
        throw InvalidPath("step does not fit the path");
    }
    Path out = path;
    for (std::size_t i = 0; i < step.old_block.size(); ++i) {
        if (out[step.anchor_lo + 1 + i] != step.old_block[i]) throw InvalidPath("step block does not match the path");
        out[step.anchor_lo + 1 + i] = step.new_block[i];
    }
    return out;
}

std::vector<Path> ReconfigSequence::stages() const {
    std::vector<Path> out{start};
    for (const auto& step : steps) out.push_back(apply_step(out.back(), step));
    return out;
}

Path ReconfigSequence::finish() const { return stages().back(); }

std::size_t ReconfigSequence::max_block() const {
    std::size_t best = 0;
    for (const auto& step : steps) best = std::max(best, step.size());
    return best;
}

ReconfigSequence ReconfigSequence::from_stages(const std::vector<Path>& stages) {
    if (stages.empty()) throw InvalidPath("a sequence needs a start path");
    ReconfigSequence seq{stages.front(), {}};
    for (std::size_t i = 1; i < stages.size(); ++i) seq.steps.push_back(step_between(stages[i - 1], stages[i]));
    return seq;
}

bool replays_validly(const StInstance& instance, const ReconfigSequence& sequence, std::size_t k, const Path& target) {
    if (!is_st_shortest_path(instance, sequence.start)) return false;
    Path current = sequence.start;
    for (const auto& step : sequence.steps) {
        if (step.size() == 0 || step.size() > k) return false;
        try {
            current = apply_step(current, step);
        } catch (const InvalidPath&) {
            return false;
        }
        if (!is_st_shortest_path(instance, current)) return false;
    }
    return current == target;
}

std::string format_sequence(const ReconfigSequence& sequence, std::size_t k) {
    std::ostringstream out;
    out << "steps " << sequence.size() << " k " << k << '\n';
    Path current = sequence.start;
    for (std::size_t i = 0; i < current.size(); ++i) out << (i ? " " : "") << current[i];
    out << '\n';
    for (const auto& step : sequence.steps) {
        current = apply_step(current, step);
        for (std::size_t i = 0; i < current.size(); ++i) out << (i ? " " : "") << current[i];
        out << '\n';
    }
    return out.str();
}

void require_shortest_path(const StInstance& instance, const Path& path, const char* role) {
    if (auto check = check_st_shortest_path(instance, path); !check) {
        throw InvalidPath(std::string(role) + " is not an s-t shortest path: " + std::string(to_string(check.defect)));
    }
}

namespace {

// Splices every DAG detour between anchors `window + 1` apart into the path.
class NeighborFinder {
public:
    explicit NeighborFinder(const StInstance& instance) : dag_(instance) {}

    std::vector<Path> neighbors(const Path& path, std::size_t k) {
        std::set<Path> found;
        const std::size_t interior = path.size() - 2;
        if (interior == 0 || k == 0) return {};
        // Any change inside a window of at most k positions also lies inside some window of exactly this size.
        const std::size_t window = std::min(k, interior);
        for (std::size_t lo = 0; lo + window + 1 < path.size(); ++lo) {
            const std::size_t hi = lo + window + 1;
            for (const Path& detour : detours(path[lo], path[hi])) {
                Path candidate = path;
                std::copy(detour.begin() + 1, detour.end() - 1, candidate.begin() + static_cast<std::ptrdiff_t>(lo + 1));
                if (candidate != path) found.insert(std::move(candidate));
            }
        }
        return {found.begin(), found.end()};
    }

private:
    const std::vector<Path>& detours(Vertex u, Vertex v) {
        auto [it, inserted] = cache_.try_emplace({u, v});
        if (inserted) it->second = dag_.paths_between(u, v);
        return it->second;
    }

    ShortestPathDag dag_;
    std::map<std::pair<Vertex, Vertex>, std::vector<Path>> cache_;
};

void require_within_vertex_bound(const StInstance& instance, std::size_t path_count) {
    // Each shortest path is a distinct vertex subset, so at most 2^n of them exist.
    if (instance.n() < 63 && path_count > (std::size_t{1} << instance.n())) {
        throw InternalError("more than 2^n shortest paths enumerated");
    }
}

}  // namespace

std::vector<Path> k_step_neighbors(const StInstance& instance, const Path& path, std::size_t k) {
    require_shortest_path(instance, path, "path");
    return NeighborFinder(instance).neighbors(path, k);
}

ReconfigGraph::ReconfigGraph(std::vector<Path> paths, std::vector<std::vector<std::size_t>> adjacency, std::size_t k)
    : paths_(std::move(paths)), adjacency_(std::move(adjacency)), k_(k) {
    for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);
}

std::size_t ReconfigGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& list : adjacency_) total += list.size();
    return total / 2;
}

bool ReconfigGraph::adjacent(std::size_t i, std::size_t j) const {
    return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

std::optional<std::size_t> ReconfigGraph::index_of(const Path& path) const {
    if (auto it = index_.find(path); it != index_.end()) return it->second;
    return std::nullopt;
}

std::vector<std::optional<std::size_t>> ReconfigGraph::distances_from(std::size_t i) const {
    std::vector<std::optional<std::size_t>> dist(paths_.size());
    std::deque<std::size_t> queue{i};
    dist[i] = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t w : adjacency_[u]) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

const std::vector<std::size_t>& ReconfigGraph::components() const {
    if (components_.size() == paths_.size()) return components_;
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(paths_.size(), kUnset);
    std::size_t next = 0;
    for (std::size_t root = 0; root < paths_.size(); ++root) {
        if (comp[root] != kUnset) continue;
        std::vector<std::size_t> stack{root};
        comp[root] = next;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w : adjacency_[u]) {
                if (comp[w] == kUnset) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    components_ = std::move(comp);
    return components_;
}

ReconfigGraph build_reconfig_graph(const StInstance& instance, std::size_t k, std::size_t path_cap) {
    auto paths = enumerate_shortest_paths(instance, path_cap);
    require_within_vertex_bound(instance, paths.size());
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], i);
    NeighborFinder finder(instance);
    std::vector<std::vector<std::size_t>> adjacency(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (const Path& q : finder.neighbors(paths[i], k)) adjacency[i].push_back(index.at(q));
        std::sort(adjacency[i].begin(), adjacency[i].end());
    }
    return ReconfigGraph(std::move(paths), std::move(adjacency), k);
}

std::optional<ReconfigSequence> shortest_reconfig_sequence(const ReconfigGraph& graph, const Path& p, const Path& q) {
    const auto from = graph.index_of(p);
    const auto to = graph.index_of(q);
    if (!from) throw InvalidPath("P is not an s-t shortest path");
    if (!to) throw InvalidPath("Q is not an s-t shortest path");
    if (*from == *to) return ReconfigSequence{p, {}};
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(graph.size(), kUnset);
    std::deque<std::size_t> queue{*from};
    parent[*from] = *from;
    while (!queue.empty() && parent[*to] == kUnset) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t w : graph.neighbors(u)) {
            if (parent[w] == kUnset) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (parent[*to] == kUnset) return std::nullopt;
    std::vector<Path> stages;
    for (std::size_t v = *to; v != *from; v = parent[v]) stages.push_back(graph.path(v));
    stages.push_back(p);
    std::reverse(stages.begin(), stages.end());
    return ReconfigSequence::from_stages(stages);
}

std::optional<ReconfigSequence> shortest_reconfig_sequence(const StInstance& instance, const Path& p, const Path& q,
                                                           std::size_t k, std::size_t path_cap) {
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    if (p == q) return ReconfigSequence{p, {}};
    return shortest_reconfig_sequence(build_reconfig_graph(instance, k, path_cap), p, q);
}

Diameter reconfig_diameter(const ReconfigGraph& graph) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        for (const auto& d : graph.distances_from(i)) {
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

Diameter reconfig_diameter(const StInstance& instance, std::size_t k, std::size_t path_cap) {
    return reconfig_diameter(build_reconfig_graph(instance, k, path_cap));
}

ReconfigSequence large_k_shortcut(const StInstance& instance, const Path& p, const Path& q, std::size_t k) {
    if (2 * k < instance.n()) {
        throw PreconditionViolated("large-k shortcut needs k >= n/2 (k = " + std::to_string(k) +
                                   ", n = " + std::to_string(instance.n()) + ")");
    }
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    std::vector<std::size_t> differing;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != q[i]) differing.push_back(i);
    }
    if (differing.empty()) return ReconfigSequence{p, {}};
    if (differing.back() - differing.front() + 1 <= k) return ReconfigSequence::from_stages({p, q});

    // The window is too wide for one step; cut at a shared position so both halves fit. Every vertex
    // sits at a fixed layer, so q has at most n - d - 1 vertices off p, which makes such a cut exist.
    for (std::size_t j = 0; j + 1 < differing.size(); ++j) {
        const bool gap = differing[j + 1] > differing[j] + 1;
        const std::size_t left = differing[j] - differing.front() + 1;
        const std::size_t right = differing.back() - differing[j + 1] + 1;
        if (gap && left <= k && right <= k) {
            Path middle = p;
            for (std::size_t i = 0; i <= j; ++i) middle[differing[i]] = q[differing[i]];
            return ReconfigSequence::from_stages({p, middle, q});
        }
    }
    throw InternalError("no two-step split found although k >= n/2");
}

}  // namespace spr
