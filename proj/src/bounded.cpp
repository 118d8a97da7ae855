#include "spr/errors.hpp"
#include "spr/solvers.hpp"

namespace spr {

SolveResult bounded_diameter_solve(const StInstance& instance, const Path& p, const Path& q, int max_diameter,
                                   std::size_t path_cap) {
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    const int d = static_cast<int>(p.size()) - 1;
    if (d > max_diameter) {
        throw CapExceeded(path_cap, "d(s,t) = " + std::to_string(d) + " exceeds the bounded-diameter limit " +
                                        std::to_string(max_diameter));
    }
    SolveResult result;
    result.sequence = shortest_reconfig_sequence(instance, p, q, 1, path_cap);
    result.reconfigurable = result.sequence.has_value();
    return result;
}

}  // namespace spr
