#include "merge.hpp"

#include <algorithm>

namespace spr::detail {

std::optional<std::vector<Path>> merge_prefixes(const Graph& graph, const Path& p, const Path& q) {
    Path a = p;
    Path b = q;
    std::vector<Path> forward{p};
    std::vector<Path> backward{q};
    for (;;) {
        const auto diff = std::mismatch(a.begin(), a.end(), b.begin());
        if (diff.first == a.end()) break;
        const auto i = static_cast<std::size_t>(diff.first - a.begin());
        if (graph.has_edge(a[i], b[i + 1])) {
            b[i] = a[i];
            backward.push_back(b);
        } else if (graph.has_edge(b[i], a[i + 1])) {
            a[i] = b[i];
            forward.push_back(a);
        } else {
            return std::nullopt;
        }
    }
    // a == b now; it closes both halves.
    forward.insert(forward.end(), backward.rbegin() + 1, backward.rend());
    return forward;
}

}  // namespace spr::detail
