#pragma once

#include "spr/graph.hpp"
#include "spr/oracle.hpp"
#include "spr/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spr {

struct SolveResult {
    bool reconfigurable = false;
    std::optional<ReconfigSequence> sequence;
    // Set when the constructive builder stalled and the oracle produced the sequence instead.
    bool used_fallback = false;
    std::vector<std::string> notes;
};

inline constexpr int kDefaultMaxDiameter = 6;

// Exact answer through the oracle. Throws CapExceeded when d(s,t) > max_diameter or the path cap is hit.
SolveResult bounded_diameter_solve(const StInstance& instance, const Path& p, const Path& q,
                                   int max_diameter = kDefaultMaxDiameter, std::size_t path_cap = kDefaultPathCap);

// ---- permutation graphs

enum class EdgeType { kL, kR };
char to_char(EdgeType type);

// Type of the shortest-path edge from -> to, oriented away from s. Throws EdgeNotOnShortestPath.
EdgeType lr_edge_type(const PermutationRep& rep, const StInstance& instance, Vertex from, Vertex to);

SolveResult permutation_solve(const PermutationRep& rep, const StInstance& instance, const Path& p, const Path& q);

// ---- circle graphs

struct Equator {
    // Gap g sits between positions g and g+1 (mod 2n). Top is the clockwise run of positions after `from` up to `to`.
    int from = 0;
    int to = 0;
    bool synthetic = false;

    bool top(int position, int modulus) const;
};

// Entry strings: "TT", "TB", "BT", "BB" for interior chords; s gets "s" + side and t gets side + "t".
struct PathLabel {
    std::vector<std::string> entries;
    friend bool operator==(const PathLabel&, const PathLabel&) = default;
};
std::string to_string(const PathLabel& label);

struct ChordOrientation {
    Equator equator;
    // First endpoint of every interior shortest-path chord; nullopt elsewhere (including s and t).
    std::vector<std::optional<int>> first_endpoint;
};

// Throws OrientationConflict if two shortest paths orient a chord differently.
ChordOrientation orient_chords(const ChordRep& rep, const StInstance& instance);
// A chord crossing every other chord, if one exists (first in lexicographic gap order).
std::optional<Equator> find_equator(const ChordRep& rep);
// The chord crossing s and t that every label is measured against. Top holds the endpoints beyond s and
// the side that starts at the chosen endpoint of s; bottom holds the endpoints beyond t and the other side.
Equator st_equator(const ChordRep& rep, const StInstance& instance);

PathLabel chord_label(const ChordRep& rep, const StInstance& instance, const Path& path);
PathLabel chord_label(const ChordRep& rep, const ChordOrientation& orientation, const Path& path);

SolveResult circle_solve(const ChordRep& rep, const StInstance& instance, const Path& p, const Path& q);

// ---- hypercubes

// Bit positions (1 = leftmost) flipped along the path, in order. Throws InvalidPath.
std::vector<int> hypercube_permutation(const HypercubeRep& rep, const Path& path);
Path hypercube_path(const HypercubeRep& rep, const std::vector<int>& flips);

// Adjacent-transposition sequence of length kendall_tau(perm(P), perm(Q)).
ReconfigSequence hypercube_solve(const HypercubeRep& rep, const Path& p, const Path& q);

// Number of pairs ordered differently. Throws DomainMismatch.
std::size_t kendall_tau(const std::vector<int>& p, const std::vector<int>& q);

// ---- weakly modular graphs

class LookTable {
public:
    // `table` is n*n, row-major, -1 where no common parent exists.
    LookTable(std::size_t n, std::vector<int> layer, std::vector<Vertex> table);

    // Least-id common neighbor one layer closer to s, for two distinct vertices of the same layer.
    std::optional<Vertex> lookup(Vertex u, Vertex v) const;
    int layer(Vertex v) const { return layer_[static_cast<std::size_t>(v)]; }
    std::size_t entry_count() const noexcept;

private:
    std::size_t n_;
    std::vector<int> layer_;
    std::vector<Vertex> table_;
};

LookTable build_look_table(const StInstance& instance);

struct WeaklyModularStats {
    std::size_t subproblems = 0;
};

// Always reconfigurable in weakly modular graphs. Throws TriangleConditionViolated when a needed
// common parent is missing.
ReconfigSequence weakly_modular_solve(const StInstance& instance, const Path& p, const Path& q,
                                      WeaklyModularStats* stats = nullptr);

// ---- circular-arc graphs

SolveResult circular_arc_solve(const ArcRep& rep, const StInstance& instance, const Path& p, const Path& q);

}  // namespace spr
