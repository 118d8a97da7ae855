#pragma once

#include "spr/graph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spr {

inline constexpr std::size_t kDefaultPathCap = 100000;

// One reconfiguration step: the interior block strictly between path indices anchor_lo and
// anchor_hi is replaced. Blocks are the minimal ones, so the first and last entries differ.
struct KStep {
    std::size_t anchor_lo = 0;
    std::size_t anchor_hi = 0;
    Path old_block;
    Path new_block;

    std::size_t size() const noexcept { return new_block.size(); }
    friend bool operator==(const KStep&, const KStep&) = default;
};

// Positions where two equal-length paths differ, as the length of the smallest covering window.
// Zero when the paths are equal.
std::size_t change_span(const Path& a, const Path& b);

// The minimal step turning `from` into `to`. Throws InvalidPath if they are equal or misaligned.
KStep step_between(const Path& from, const Path& to);
Path apply_step(const Path& path, const KStep& step);

struct ReconfigSequence {
    Path start;
    std::vector<KStep> steps;

    std::size_t size() const noexcept { return steps.size(); }
    // start followed by the path after each step.
    std::vector<Path> stages() const;
    Path finish() const;
    // Largest block replaced by any step (0 for the empty sequence).
    std::size_t max_block() const;

    static ReconfigSequence from_stages(const std::vector<Path>& stages);
};

// Every stage is an s-t shortest path, every step replaces at most k vertices, and the sequence ends at `target`.
bool replays_validly(const StInstance& instance, const ReconfigSequence& sequence, std::size_t k,
                     const Path& target);

// `steps <count> k <k>` followed by one path line per stage.
std::string format_sequence(const ReconfigSequence& sequence, std::size_t k);

// All distinct shortest paths obtained by replacing a window of at most k interior vertices
// between two kept anchors; lexicographic order. Throws InvalidPath.
std::vector<Path> k_step_neighbors(const StInstance& instance, const Path& path, std::size_t k);

class ReconfigGraph {
public:
    ReconfigGraph(std::vector<Path> paths, std::vector<std::vector<std::size_t>> adjacency, std::size_t k);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return paths_.size(); }
    std::size_t edge_count() const noexcept;
    const std::vector<Path>& paths() const noexcept { return paths_; }
    const Path& path(std::size_t i) const { return paths_[i]; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> index_of(const Path& path) const;

    // BFS distances from i; unreachable entries are nullopt.
    std::vector<std::optional<std::size_t>> distances_from(std::size_t i) const;
    // Component id per path, numbered by first appearance.
    const std::vector<std::size_t>& components() const;
    bool connected(std::size_t i, std::size_t j) const { return components()[i] == components()[j]; }

private:
    std::vector<Path> paths_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t k_;
    std::map<Path, std::size_t> index_;
    mutable std::vector<std::size_t> components_;
};

// Vertex set = enumerate_shortest_paths, edges = k_step_neighbors. Throws CapExceeded.
ReconfigGraph build_reconfig_graph(const StInstance& instance, std::size_t k, std::size_t path_cap = kDefaultPathCap);

// Minimum-step sequence from p to q, or nullopt when they lie in different components.
std::optional<ReconfigSequence> shortest_reconfig_sequence(const StInstance& instance, const Path& p, const Path& q,
                                                           std::size_t k, std::size_t path_cap = kDefaultPathCap);
std::optional<ReconfigSequence> shortest_reconfig_sequence(const ReconfigGraph& graph, const Path& p, const Path& q);

// nullopt stands for an infinite diameter (disconnected reconfiguration graph).
using Diameter = std::optional<std::size_t>;
Diameter reconfig_diameter(const StInstance& instance, std::size_t k, std::size_t path_cap = kDefaultPathCap);
Diameter reconfig_diameter(const ReconfigGraph& graph);

// At most two steps from p to q when 2k >= n. Throws PreconditionViolated otherwise.
ReconfigSequence large_k_shortcut(const StInstance& instance, const Path& p, const Path& q, std::size_t k);

// Throws InvalidPath with the defect name unless `path` is an s-t shortest path.
void require_shortest_path(const StInstance& instance, const Path& path, const char* role);

}  // namespace spr
