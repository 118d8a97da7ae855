#include "merge.hpp"
#include "spr/errors.hpp"
#include "spr/solvers.hpp"

#include <algorithm>
#include <sstream>

namespace spr {

namespace {

int clockwise_offset(int from, int p, int modulus) { return ((p - from) % modulus + modulus) % modulus; }

// The endpoint of `chord` strictly inside the clockwise arc (a, b).
int endpoint_inside(std::pair<int, int> chord, int a, int b, int modulus) {
    const int span = clockwise_offset(a, b, modulus);
    const int first = clockwise_offset(a, chord.first, modulus);
    return first > 0 && first < span ? chord.first : chord.second;
}

int orient(const ChordRep& rep, Vertex v, Vertex prev, Vertex next) {
    const int m = static_cast<int>(rep.positions());
    const auto [a, b] = rep.chords[static_cast<std::size_t>(v)];
    const int from_prev = endpoint_inside(rep.chords[static_cast<std::size_t>(prev)], a, b, m);
    const int from_next = endpoint_inside(rep.chords[static_cast<std::size_t>(next)], a, b, m);
    return clockwise_offset(a, from_prev, m) < clockwise_offset(a, from_next, m) ? a : b;
}

char side_char(const Equator& equator, int position, int modulus) { return equator.top(position, modulus) ? 'T' : 'B'; }

}  // namespace

bool Equator::top(int position, int modulus) const {
    const int offset = clockwise_offset(from, position, modulus);
    return offset >= 1 && offset <= clockwise_offset(from, to, modulus);
}

std::optional<Equator> find_equator(const ChordRep& rep) {
    const int m = static_cast<int>(rep.positions());
    for (int g1 = 0; g1 < m; ++g1) {
        for (int g2 = g1 + 1; g2 < m; ++g2) {
            const Equator candidate{g1, g2, false};
            const bool crosses_all = std::all_of(rep.chords.begin(), rep.chords.end(), [&](const auto& chord) {
                return candidate.top(chord.first, m) != candidate.top(chord.second, m);
            });
            if (crosses_all) return candidate;
        }
    }
    return std::nullopt;
}

Equator st_equator(const ChordRep& rep, const StInstance& instance) {
    const int m = static_cast<int>(rep.positions());
    // Clockwise the endpoints read s_a, (side A), t_a, (beyond t), t_b, (side B), s_b, (beyond s).
    auto [s_a, s_b] = rep.chords[static_cast<std::size_t>(instance.s)];
    const auto [t1, t2] = rep.chords[static_cast<std::size_t>(instance.t)];
    const int o1 = clockwise_offset(s_a, t1, m);
    if (!(o1 > 0 && o1 < clockwise_offset(s_a, s_b, m))) std::swap(s_a, s_b);
    const int t_a = clockwise_offset(s_a, t1, m) < clockwise_offset(s_a, t2, m) ? t1 : t2;
    return Equator{s_b, t_a, true};
}

ChordOrientation orient_chords(const ChordRep& rep, const StInstance& instance) {
    require_matches(instance.graph, rep);
    const ShortestPathDag dag(instance);
    ChordOrientation out{st_equator(rep, instance), std::vector<std::optional<int>>(instance.n())};
    for (int layer = 1; layer < dag.distance(); ++layer) {
        for (Vertex v : dag.layer_vertices(layer)) {
            auto& first = out.first_endpoint[static_cast<std::size_t>(v)];
            for (Vertex prev : dag.predecessors(v)) {
                for (Vertex next : dag.successors(v)) {
                    const int e = orient(rep, v, prev, next);
                    if (first && *first != e) {
                        throw OrientationConflict("chord " + std::to_string(v) + " receives both orientations");
                    }
                    first = e;
                }
            }
        }
    }
    return out;
}

PathLabel chord_label(const ChordRep& rep, const ChordOrientation& orientation, const Path& path) {
    const int m = static_cast<int>(rep.positions());
    PathLabel label;
    std::vector<std::pair<char, char>> sides;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const auto v = static_cast<std::size_t>(path[i]);
        const auto& first = orientation.first_endpoint[v];
        if (!first) throw InvalidPath("vertex " + std::to_string(v) + " is not interior to a shortest path");
        const auto [a, b] = rep.chords[v];
        const int second = *first == a ? b : a;
        sides.emplace_back(side_char(orientation.equator, *first, m), side_char(orientation.equator, second, m));
    }
    if (sides.empty()) return PathLabel{{"s-", "-t"}};
    label.entries.push_back(std::string{'s', sides.front().first});
    for (const auto& [x, y] : sides) label.entries.push_back(std::string{x, y});
    label.entries.push_back(std::string{sides.back().second, 't'});
    return label;
}

PathLabel chord_label(const ChordRep& rep, const StInstance& instance, const Path& path) {
    require_shortest_path(instance, path, "path");
    return chord_label(rep, orient_chords(rep, instance), path);
}

std::string to_string(const PathLabel& label) {
    std::ostringstream out;
    for (const auto& entry : label.entries) out << '(' << entry << ')';
    return out.str();
}

SolveResult circle_solve(const ChordRep& rep, const StInstance& instance, const Path& p, const Path& q) {
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    const auto orientation = orient_chords(rep, instance);
    if (p == q) return SolveResult{true, ReconfigSequence{p, {}}, false, {}};

    SolveResult result;
    result.reconfigurable = chord_label(rep, orientation, p) == chord_label(rep, orientation, q);
    if (!result.reconfigurable) return result;
    if (auto stages = detail::merge_prefixes(instance.graph, p, q)) {
        result.sequence = ReconfigSequence::from_stages(*stages);
        return result;
    }
    result.used_fallback = true;
    result.notes.push_back("prefix merge stalled; sequence taken from the oracle");
    result.sequence = shortest_reconfig_sequence(instance, p, q, 1);
    if (!result.sequence) result.notes.push_back("oracle finds no sequence although the labels agree");
    return result;
}

}  // namespace spr
