#pragma once

#include "spr/graph.hpp"

#include <optional>
#include <vector>

namespace spr::detail {

// Grows the common prefix of p and q one vertex at a time, copying the vertex of one path into the
// other whenever it fits. Returns the stages from p to q, or nullopt when neither copy fits.
std::optional<std::vector<Path>> merge_prefixes(const Graph& graph, const Path& p, const Path& q);

}  // namespace spr::detail
