#include "spr/cost.hpp"

#include "spr/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace spr {

CostModel::CostModel(std::vector<Rational> prices) : prices_(std::move(prices)) {
    if (prices_.empty()) throw PreconditionViolated("cost table is empty");
    for (std::size_t i = 0; i < prices_.size(); ++i) {
        if (prices_[i] < 0) throw PreconditionViolated("negative price p_" + std::to_string(i + 1));
        if (i > 0 && prices_[i] < prices_[i - 1]) {
            throw PreconditionViolated("prices must be non-decreasing (p_" + std::to_string(i + 1) + " < p_" +
                                       std::to_string(i) + ")");
        }
    }
}

const Rational& CostModel::price(std::size_t m) const {
    if (m < 1 || m > prices_.size()) {
        throw PreconditionViolated("no price for changing " + std::to_string(m) + " vertices");
    }
    return prices_[m - 1];
}

Rational top_l_sum(std::vector<Rational> costs, TopL l) {
    std::sort(costs.begin(), costs.end(), std::greater<>());
    if (l && costs.size() > *l) costs.resize(*l);
    Rational sum = 0;
    for (const auto& c : costs) sum += c;
    return sum;
}

CostedSequence price_sequence(const ReconfigSequence& sequence, const CostModel& costs, TopL l) {
    CostedSequence out{sequence, {}, 0, 0, 0};
    for (const auto& step : sequence.steps) {
        out.step_costs.push_back(costs.price(step.size()));
        out.total += out.step_costs.back();
        out.max = std::max(out.max, out.step_costs.back());
    }
    out.top_l_sum = top_l_sum(out.step_costs, l);
    return out;
}

namespace {

// Every pair of distinct shortest paths is one step apart when blocks are unbounded.
struct CompleteSpace {
    std::vector<Path> paths;
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<std::vector<Rational>> weight;
};

CompleteSpace complete_space(const StInstance& instance, const Path& p, const Path& q, const CostModel& costs,
                             std::size_t path_cap) {
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    CompleteSpace space;
    space.paths = enumerate_shortest_paths(instance, path_cap);
    if (instance.n() < 63 && space.paths.size() > (std::size_t{1} << instance.n())) {
        throw InternalError("more than 2^n shortest paths enumerated");
    }
    const std::size_t n = space.paths.size();
    space.from = static_cast<std::size_t>(std::lower_bound(space.paths.begin(), space.paths.end(), p) - space.paths.begin());
    space.to = static_cast<std::size_t>(std::lower_bound(space.paths.begin(), space.paths.end(), q) - space.paths.begin());
    space.weight.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) space.weight[i][j] = costs.price(change_span(space.paths[i], space.paths[j]));
        }
    }
    return space;
}

CostedSequence finish(const CompleteSpace& space, const std::vector<std::size_t>& route, const CostModel& costs,
                      TopL l) {
    std::vector<Path> stages;
    for (std::size_t i : route) stages.push_back(space.paths[i]);
    return price_sequence(ReconfigSequence::from_stages(stages), costs, l);
}

}  // namespace

std::optional<CostedSequence> min_sum(const StInstance& instance, const Path& p, const Path& q,
                                      const CostModel& costs, std::size_t path_cap) {
    const auto space = complete_space(instance, p, q, costs, path_cap);
    const std::size_t n = space.paths.size();
    // Distances to Q keyed by (cost, steps); the walk from P then takes the least-index tight successor.
    using Key = std::pair<Rational, std::size_t>;
    std::vector<std::optional<Key>> dist(n);
    std::vector<bool> done(n, false);
    dist[space.to] = Key{0, 0};
    for (;;) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i] && dist[i] && (!best || *dist[i] < *dist[*best])) best = i;
        }
        if (!best) break;
        done[*best] = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == *best || done[j]) continue;
            Key candidate{dist[*best]->first + space.weight[j][*best], dist[*best]->second + 1};
            if (!dist[j] || candidate < *dist[j]) dist[j] = std::move(candidate);
        }
    }
    std::vector<std::size_t> route{space.from};
    while (route.back() != space.to) {
        const std::size_t cur = route.back();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != cur && Key{space.weight[cur][j] + dist[j]->first, dist[j]->second + 1} == *dist[cur]) {
                route.push_back(j);
                break;
            }
        }
    }
    return finish(space, route, costs, std::nullopt);
}

std::optional<CostedSequence> min_max(const StInstance& instance, const Path& p, const Path& q,
                                      const CostModel& costs, std::size_t path_cap) {
    require_shortest_path(instance, p, "P");
    require_shortest_path(instance, q, "Q");
    if (p == q) return price_sequence(ReconfigSequence{p, {}}, costs, 1);
    const std::size_t interior = p.size() - 2;
    for (std::size_t k = 1; k <= interior; ++k) {
        const auto graph = build_reconfig_graph(instance, k, path_cap);
        if (auto seq = shortest_reconfig_sequence(graph, p, q)) return price_sequence(*seq, costs, 1);
    }
    throw InternalError("paths are not reconfigurable even with unbounded blocks");
}

std::optional<CostedSequence> min_top_l(const StInstance& instance, const Path& p, const Path& q,
                                        const CostModel& costs, TopL l, std::size_t path_cap) {
    if (l && *l == 0) throw PreconditionViolated("l must be at least 1");
    const auto space = complete_space(instance, p, q, costs, path_cap);
    const std::size_t n = space.paths.size();

    struct State {
        std::size_t path;
        std::vector<Rational> top;  // sorted descending, at most l entries
        Rational sum;
        std::size_t steps;
        std::size_t parent;
    };
    constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
    std::vector<State> states{{space.from, {}, 0, 0, kRoot}};
    std::vector<std::vector<std::size_t>> kept(n);  // per path, indices of non-dominated states
    kept[space.from].push_back(0);

    const auto dominated_by = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        // a is no better than b: every entry of a, zero-padded, is >= the matching entry of b.
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            const Rational x = i < a.size() ? a[i] : Rational(0);
            const Rational y = i < b.size() ? b[i] : Rational(0);
            if (x < y) return false;
        }
        return true;
    };
    using Entry = std::tuple<Rational, std::size_t, std::size_t>;  // (sum, steps, state index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    frontier.emplace(0, 0, 0);
    std::vector<bool> retired;
    while (!frontier.empty()) {
        const auto [sum, steps, index] = frontier.top();
        frontier.pop();
        if (index < retired.size() && retired[index]) continue;
        if (states[index].path == space.to) {
            std::vector<std::size_t> route;
            for (std::size_t i = index; i != kRoot; i = states[i].parent) route.push_back(states[i].path);
            std::reverse(route.begin(), route.end());
            return finish(space, route, costs, l);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == states[index].path) continue;
            std::vector<Rational> top = states[index].top;
            top.insert(std::upper_bound(top.begin(), top.end(), space.weight[states[index].path][j], std::greater<>()),
                       space.weight[states[index].path][j]);
            if (l && top.size() > *l) top.resize(*l);
            bool pruned = false;
            for (std::size_t other : kept[j]) {
                if (dominated_by(top, states[other].top)) {
                    pruned = true;
                    break;
                }
            }
            if (pruned) continue;
            // Drop states the new one dominates.
            auto& list = kept[j];
            list.erase(std::remove_if(list.begin(), list.end(),
                                      [&](std::size_t other) {
                                          if (!dominated_by(states[other].top, top)) return false;
                                          if (retired.size() <= other) retired.resize(other + 1, false);
                                          retired[other] = true;
                                          return true;
                                      }),
                       list.end());
            Rational new_sum = 0;
            for (const auto& c : top) new_sum += c;
            states.push_back({j, std::move(top), new_sum, states[index].steps + 1, index});
            list.push_back(states.size() - 1);
            frontier.emplace(std::move(new_sum), states.back().steps, states.size() - 1);
        }
    }
    return std::nullopt;
}

Rational reduc_threshold(std::size_t n, std::size_t l) {
    BigInt power = 1;
    power <<= static_cast<unsigned>(n * n + 1);
    return Rational(power * l);
}

CostModel reduc_costs(std::size_t n, std::size_t l) {
    if (n < 1 || l < 1) throw PreconditionViolated("reduc costs need n, l >= 1");
    std::vector<Rational> prices(n, reduc_threshold(n, l));
    prices[0] = 1;
    return CostModel(std::move(prices));
}

bool reduc_decide(const StInstance& instance, const Path& p, const Path& q, std::size_t l, std::size_t path_cap) {
    const auto best = min_top_l(instance, p, q, reduc_costs(instance.n(), l), l, path_cap);
    // A single two-vertex step already costs exactly the threshold, so equality means "not in SPR".
    return best && best->top_l_sum < reduc_threshold(instance.n(), l);
}

}  // namespace spr
