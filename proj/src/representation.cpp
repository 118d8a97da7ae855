#include "spr/representation.hpp"

#include "spr/errors.hpp"

#include <algorithm>
#include <numeric>

namespace spr {

namespace {

void require_distinct_positions(const std::vector<std::pair<int, int>>& pairs, const char* kind) {
    const int limit = static_cast<int>(2 * pairs.size());
    std::vector<bool> seen(static_cast<std::size_t>(limit), false);
    for (const auto& [a, b] : pairs) {
        for (int p : {a, b}) {
            if (p < 0 || p >= limit) {
                throw InvalidRepresentation(std::string(kind) + " position " + std::to_string(p) + " outside 0.." +
                                            std::to_string(limit - 1));
            }
            if (seen[static_cast<std::size_t>(p)]) {
                throw InvalidRepresentation(std::string(kind) + " position " + std::to_string(p) + " used twice");
            }
            seen[static_cast<std::size_t>(p)] = true;
        }
    }
}

// True iff p lies strictly inside the clockwise open arc (from, to).
bool strictly_between(int from, int to, int p, int modulus) {
    const int span = ((to - from) % modulus + modulus) % modulus;
    const int offset = ((p - from) % modulus + modulus) % modulus;
    return offset > 0 && offset < span;
}

template <typename Pred>
Graph build(std::size_t n, Pred adjacent) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

bool ChordRep::crosses(Vertex u, Vertex v) const {
    const auto [a, b] = chords[static_cast<std::size_t>(u)];
    const auto [c, d] = chords[static_cast<std::size_t>(v)];
    const int m = static_cast<int>(positions());
    return strictly_between(a, b, c, m) != strictly_between(a, b, d, m);
}

bool ArcRep::covers(Vertex v, int position) const {
    const auto [start, end] = arcs[static_cast<std::size_t>(v)];
    const int m = static_cast<int>(positions());
    return position == start || position == end || strictly_between(start, end, position, m);
}

bool ArcRep::intersects(Vertex u, Vertex v) const {
    return covers(u, arcs[static_cast<std::size_t>(v)].first) || covers(v, arcs[static_cast<std::size_t>(u)].first);
}

Graph graph_of(const PermutationRep& rep) {
    std::vector<int> sorted = rep.sigma;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(rep.size());
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected) throw InvalidRepresentation("sigma is not a permutation of 1..n");
    return build(rep.size(), [&](Vertex i, Vertex j) {
        return rep.sigma[static_cast<std::size_t>(i)] > rep.sigma[static_cast<std::size_t>(j)];
    });
}

Graph graph_of(const ChordRep& rep) {
    require_distinct_positions(rep.chords, "chord");
    return build(rep.size(), [&](Vertex u, Vertex v) { return rep.crosses(u, v); });
}

Graph graph_of(const ArcRep& rep) {
    require_distinct_positions(rep.arcs, "arc");
    return build(rep.size(), [&](Vertex u, Vertex v) { return rep.intersects(u, v); });
}

Graph graph_of(const HypercubeRep& rep) {
    if (rep.dimension < 1 || rep.dimension > 20) throw InvalidRepresentation("hypercube dimension must be in 1..20");
    for (const auto* bits : {&rep.s_bits, &rep.t_bits}) {
        if (static_cast<int>(bits->size()) != rep.dimension ||
            bits->find_first_not_of("01") != std::string::npos) {
            throw InvalidRepresentation("bit string '" + *bits + "' does not match dimension " +
                                        std::to_string(rep.dimension));
        }
    }
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(rep.size());
    for (Vertex v = 0; v < n; ++v) {
        for (int b = 0; b < rep.dimension; ++b) {
            const Vertex w = v ^ (1 << b);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph::from_edges(rep.size(), edges);
}

void require_matches(const Graph& graph, const Representation& rep) {
    const Graph induced = std::visit([](const auto& r) { return graph_of(r); }, rep);
    if (induced.vertex_count() != graph.vertex_count()) {
        throw InvalidRepresentation("representation has " + std::to_string(induced.vertex_count()) +
                                    " vertices, graph has " + std::to_string(graph.vertex_count()));
    }
    if (!(induced == graph)) throw InvalidRepresentation("representation does not induce the instance graph");
}

Vertex hypercube_vertex(const std::string& bits) {
    Vertex v = 0;
    for (char c : bits) v = (v << 1) | (c == '1' ? 1 : 0);
    return v;
}

std::string hypercube_bits(Vertex v, int dimension) {
    std::string bits(static_cast<std::size_t>(dimension), '0');
    for (int p = 0; p < dimension; ++p) {
        if ((v >> (dimension - 1 - p)) & 1) bits[static_cast<std::size_t>(p)] = '1';
    }
    return bits;
}

}  // namespace spr
