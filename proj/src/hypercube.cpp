#include "spr/errors.hpp"
#include "spr/solvers.hpp"

#include <algorithm>
#include <map>

namespace spr {

std::vector<int> hypercube_permutation(const HypercubeRep& rep, const Path& path) {
    const Vertex s = hypercube_vertex(rep.s_bits);
    const Vertex t = hypercube_vertex(rep.t_bits);
    const int ones = __builtin_popcount(static_cast<unsigned>(s ^ t));
    if (path.size() != static_cast<std::size_t>(ones) + 1 || path.front() != s || path.back() != t) {
        throw InvalidPath("not an s-t shortest path of the hypercube");
    }
    std::vector<int> flips;
    Vertex seen = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Vertex bit = path[i] ^ path[i - 1];
        if (path[i] < 0 || path[i] >= static_cast<Vertex>(rep.size()) || __builtin_popcount(static_cast<unsigned>(bit)) != 1 ||
            (bit & seen) != 0) {
            throw InvalidPath("not an s-t shortest path of the hypercube (step " + std::to_string(i) + ")");
        }
        seen |= bit;
        flips.push_back(rep.dimension - __builtin_ctz(static_cast<unsigned>(bit)));
    }
    return flips;
}

Path hypercube_path(const HypercubeRep& rep, const std::vector<int>& flips) {
    Path path{hypercube_vertex(rep.s_bits)};
    for (int position : flips) path.push_back(path.back() ^ (1 << (rep.dimension - position)));
    return path;
}

std::size_t kendall_tau(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> sp = p;
    std::vector<int> sq = q;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq || std::adjacent_find(sp.begin(), sp.end()) != sp.end()) {
        throw DomainMismatch("kendall_tau needs two permutations of the same set");
    }
    std::map<int, std::size_t> rank;
    for (std::size_t i = 0; i < q.size(); ++i) rank[q[i]] = i;
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (rank[p[i]] > rank[p[j]]) ++count;
        }
    }
    return count;
}

ReconfigSequence hypercube_solve(const HypercubeRep& rep, const Path& p, const Path& q) {
    graph_of(rep);
    std::vector<int> current = hypercube_permutation(rep, p);
    const std::vector<int> target = hypercube_permutation(rep, q);
    std::map<int, std::size_t> rank;
    for (std::size_t i = 0; i < target.size(); ++i) rank[target[i]] = i;

    std::vector<Path> stages{p};
    for (;;) {
        std::size_t j = 0;
        while (j + 1 < current.size() && rank[current[j]] < rank[current[j + 1]]) ++j;
        if (j + 1 >= current.size()) break;
        std::swap(current[j], current[j + 1]);
        stages.push_back(hypercube_path(rep, current));
    }
    return ReconfigSequence::from_stages(stages);
}

}  // namespace spr
