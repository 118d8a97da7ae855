#pragma once

#include "spr/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace spr {

using Rational = boost::multiprecision::cpp_rational;

// Price table p_1 <= p_2 <= ... ; price(m) is the cost of one step that changes m contiguous vertices.
class CostModel {
public:
    // Throws PreconditionViolated on an empty, negative or decreasing table.
    explicit CostModel(std::vector<Rational> prices);

    const Rational& price(std::size_t m) const;
    std::size_t size() const noexcept { return prices_.size(); }
    const std::vector<Rational>& prices() const noexcept { return prices_; }

private:
    std::vector<Rational> prices_;
};

// nullopt stands for l = infinity.
using TopL = std::optional<std::size_t>;

struct CostedSequence {
    ReconfigSequence sequence;
    std::vector<Rational> step_costs;
    Rational total;
    Rational max;
    Rational top_l_sum;
};

// Sum of the l largest values (all values when l is nullopt).
Rational top_l_sum(std::vector<Rational> costs, TopL l);

CostedSequence price_sequence(const ReconfigSequence& sequence, const CostModel& costs, TopL l = std::nullopt);

// Exact optimizers over the reconfiguration graph in which any block may change in one step.
// Each returns nullopt only if P and Q are unreachable from each other, which cannot happen
// here; the optional keeps the shape of the other variants. Throw CapExceeded and InvalidPath.
std::optional<CostedSequence> min_sum(const StInstance& instance, const Path& p, const Path& q,
                                      const CostModel& costs, std::size_t path_cap = kDefaultPathCap);
std::optional<CostedSequence> min_max(const StInstance& instance, const Path& p, const Path& q,
                                      const CostModel& costs, std::size_t path_cap = kDefaultPathCap);
std::optional<CostedSequence> min_top_l(const StInstance& instance, const Path& p, const Path& q,
                                        const CostModel& costs, TopL l, std::size_t path_cap = kDefaultPathCap);

// p_1 = 1 and p_i = l * 2^(n^2 + 1) for 2 <= i <= n.
CostModel reduc_costs(std::size_t n, std::size_t l);
Rational reduc_threshold(std::size_t n, std::size_t l);

// True iff the MinTop-l optimum under reduc_costs stays below l * 2^(n^2 + 1).
bool reduc_decide(const StInstance& instance, const Path& p, const Path& q, std::size_t l,
                  std::size_t path_cap = kDefaultPathCap);

}  // namespace spr
