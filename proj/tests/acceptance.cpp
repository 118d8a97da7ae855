// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "brute.hpp"
#include "geometry.hpp"

#include "spr/cost.hpp"
#include "spr/errors.hpp"
#include "spr/generators.hpp"
#include "spr/oracle.hpp"
#include "spr/reductions.hpp"
#include "spr/solvers.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace spr;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Every oracle build goes through here so the path-count bound is audited on all of them.
struct BuildAudit {
    std::size_t builds = 0;
    std::size_t largest_ratio_violations = 0;
    std::size_t max_paths = 0;
} audit;

ReconfigGraph oracle(const StInstance& inst, std::size_t k, std::size_t cap = kDefaultPathCap) {
    auto g = build_reconfig_graph(inst, k, cap);
    ++audit.builds;
    audit.max_paths = std::max(audit.max_paths, g.size());
    if (inst.n() < 63 && g.size() > (std::size_t{1} << inst.n())) ++audit.largest_ratio_violations;
    return g;
}

std::string bits_of(unsigned value, int d) {
    std::string out;
    for (int i = d - 1; i >= 0; --i) out += ((value >> i) & 1U) ? '1' : '0';
    return out;
}

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, args...);
    return buffer;
}

Outcome hypercube_optimality() {
    std::size_t pairs = 0, bad = 0;
    for (int d = 1; d <= 5; ++d) {
        for (unsigned s = 0; s < (1U << d); ++s) {
            for (unsigned t = 0; t < (1U << d); ++t) {
                if (s == t) continue;
                const HypercubeRep rep{d, bits_of(s, d), bits_of(t, d)};
                const auto inst = StInstance::make(graph_of(rep), static_cast<Vertex>(s), static_cast<Vertex>(t));
                const auto rg = oracle(inst, 1);
                for (std::size_t i = 0; i < rg.size(); ++i) {
                    const auto dist = rg.distances_from(i);
                    const auto pi = hypercube_permutation(rep, rg.path(i));
                    for (std::size_t j = 0; j < rg.size(); ++j) {
                        ++pairs;
                        const auto seq = hypercube_solve(rep, rg.path(i), rg.path(j));
                        const auto tau = kendall_tau(pi, hypercube_permutation(rep, rg.path(j)));
                        if (!dist[j] || seq.size() != tau || tau != *dist[j] || !replays_validly(inst, seq, 1, rg.path(j))) {
                            ++bad;
                        }
                    }
                }
            }
        }
    }
    return {bad == 0, fmt("%zu path pairs over d <= 5, %zu mismatches", pairs, bad)};
}

Outcome gadget_chain_counts() {
    std::size_t bad = 0;
    for (std::size_t g = 1; g <= 4; ++g) {
        for (std::size_t l = 1; l <= 4; ++l) {
            const auto inst = gadget_chain(g, l);
            BigInt expected = 1;
            for (std::size_t i = 0; i < g; ++i) expected *= l;
            const ShortestPathDag dag(inst);
            if (count_shortest_paths(inst) != expected || inst.n() != 1 + g * (l + 1) ||
                dag.distance() != static_cast<int>(2 * g)) {
                ++bad;
            }
            if (brute::shortest_paths(inst.graph, inst.s, inst.t).size() != expected) ++bad;
        }
    }
    return {bad == 0, fmt("16 chains, %zu mismatches", bad)};
}

struct SweepStats {
    std::size_t instances = 0, pairs = 0, bad = 0, invalid = 0, skipped = 0, negatives = 0;
};

constexpr std::size_t kSweepCap = 200;
// Half the seeds draw uniform models, half draw local ones with longer geodesics.
constexpr int kSeeds = 10000;

Outcome permutation_soundness() {
    SweepStats st;
    for (int seed = 0; seed < kSeeds; ++seed) {
        Rng rng(seed);
        const std::size_t n = 5 + static_cast<std::size_t>(seed % 5);
        const auto rep = seed % 2 == 0 ? random_permutation_rep(n, rng) : random_local_permutation_rep(n, 2.5, rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 3, 100)) {
            const auto inst = StInstance::make(g, s, t);
            std::optional<ReconfigGraph> rg;
            try {
                rg = oracle(inst, 1, kSweepCap);
            } catch (const CapExceeded&) {
                ++st.skipped;
                continue;
            }
            ++st.instances;
            for (std::size_t i = 0; i < rg->size(); ++i) {
                for (std::size_t j = 0; j < rg->size(); ++j) {
                    ++st.pairs;
                    const auto r = permutation_solve(rep, inst, rg->path(i), rg->path(j));
                    if (r.reconfigurable != rg->connected(i, j)) ++st.bad;
                    if (!r.reconfigurable) ++st.negatives;
                    if (r.reconfigurable && !(r.sequence && replays_validly(inst, *r.sequence, 1, rg->path(j)))) {
                        ++st.invalid;
                    }
                }
            }
        }
    }
    return {st.bad == 0 && st.invalid == 0 && st.instances > 0,
            fmt("%d seeds, %zu instances, %zu pairs (%zu no), %zu verdict mismatches, %zu invalid sequences, "
                "%zu instances over cap",
                kSeeds, st.instances, st.pairs, st.negatives, st.bad, st.invalid, st.skipped)};
}

Outcome circle_soundness() {
    SweepStats st;
    std::size_t label_breaks = 0, orientation_breaks = 0, fallbacks = 0;
    for (int seed = 0; seed < kSeeds; ++seed) {
        Rng rng(seed);
        const std::size_t n = 5 + static_cast<std::size_t>(seed % 5);
        const auto rep = seed % 2 == 0 ? random_chord_rep(n, rng)
                                       : random_narrow_chord_rep(n, 3 + static_cast<std::size_t>(seed % 3), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 3, 100)) {
            const auto inst = StInstance::make(g, s, t);
            std::optional<ReconfigGraph> rg;
            try {
                rg = oracle(inst, 1, kSweepCap);
            } catch (const CapExceeded&) {
                ++st.skipped;
                continue;
            }
            ++st.instances;
            std::optional<ChordOrientation> orientation;
            try {
                orientation = orient_chords(rep, inst);
            } catch (const OrientationConflict&) {
                ++orientation_breaks;
                continue;
            }
            std::vector<PathLabel> labels;
            for (const auto& p : rg->paths()) {
                labels.push_back(chord_label(rep, *orientation, p));
                for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                    if (orientation->first_endpoint[static_cast<std::size_t>(p[i])] !=
                        geometry::geometric_first_endpoint(rep, p[i - 1], p[i], p[i + 1])) {
                        ++orientation_breaks;
                    }
                }
            }
            for (std::size_t i = 0; i < rg->size(); ++i) {
                for (std::size_t j : rg->neighbors(i)) {
                    if (labels[i] != labels[j]) ++label_breaks;
                }
                for (std::size_t j = 0; j < rg->size(); ++j) {
                    ++st.pairs;
                    const auto r = circle_solve(rep, inst, rg->path(i), rg->path(j));
                    if (r.reconfigurable != rg->connected(i, j)) ++st.bad;
                    if (!r.reconfigurable) ++st.negatives;
                    if (r.used_fallback) ++fallbacks;
                    if (r.reconfigurable && !(r.sequence && replays_validly(inst, *r.sequence, 1, rg->path(j)))) {
                        ++st.invalid;
                    }
                }
            }
        }
    }
    return {st.bad == 0 && st.invalid == 0 && label_breaks == 0 && orientation_breaks == 0 && st.instances > 0,
            fmt("%d seeds, %zu instances, %zu pairs (%zu no), %zu verdict mismatches, %zu invalid, %zu label "
                "breaks, %zu orientation breaks, %zu fallbacks, %zu over cap",
                kSeeds, st.instances, st.pairs, st.negatives, st.bad, st.invalid, label_breaks, orientation_breaks, fallbacks,
                st.skipped)};
}

Outcome weakly_modular_interval() {
    SweepStats st;
    std::size_t over_budget = 0, max_sub = 0;
    for (int seed = 0; seed < kSeeds; ++seed) {
        Rng rng(seed);
        const std::size_t n = 5 + static_cast<std::size_t>(seed % 6);
        const auto rep = seed % 2 == 0 ? random_interval_rep(n, rng)
                                       : random_narrow_interval_rep(n, 3 + static_cast<std::size_t>(seed % 3), rng);
        const auto g = graph_of(rep);
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            std::optional<ReconfigGraph> rg;
            try {
                rg = oracle(inst, 1, kSweepCap);
            } catch (const CapExceeded&) {
                ++st.skipped;
                continue;
            }
            ++st.instances;
            for (std::size_t i = 0; i < rg->size(); ++i) {
                for (std::size_t j = 0; j < rg->size(); ++j) {
                    if (!rg->connected(i, j)) {
                        ++st.negatives;
                        continue;
                    }
                    ++st.pairs;
                    try {
                        WeaklyModularStats stats;
                        const auto seq = weakly_modular_solve(inst, rg->path(i), rg->path(j), &stats);
                        if (!replays_validly(inst, seq, 1, rg->path(j))) ++st.invalid;
                        max_sub = std::max(max_sub, stats.subproblems);
                        if (stats.subproblems > n * n) ++over_budget;
                    } catch (const Error&) {
                        ++st.bad;
                    }
                }
            }
        }
    }
    return {st.bad == 0 && st.invalid == 0 && over_budget == 0 && st.pairs > 0,
            fmt("%d seeds, %zu instances, %zu reconfigurable pairs, %zu errors, %zu invalid, %zu over n^2 "
                "(max %zu subproblems), %zu oracle-negative pairs, %zu over cap",
                kSeeds, st.instances, st.pairs, st.bad, st.invalid, over_budget, max_sub, st.negatives, st.skipped)};
}

Graph random_small_graph(int seed, std::size_t lo, std::size_t hi, Rng& rng) {
    const std::size_t n = lo + static_cast<std::size_t>(seed) % (hi - lo + 1);
    const double p = 0.3 + 0.1 * (seed % 4);
    return random_graph(n, p, rng);
}

Outcome line_graph_equivalence() {
    std::size_t pairs = 0, bad = 0, invalid = 0, five_checked = 0, five_bad = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto g = random_small_graph(seed, 4, 7, rng);
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto rg = oracle(inst, 1);
            for (std::size_t k : {2u, 3u}) {
                const auto red = kspr_line_instance(inst, k);
                const auto rk = oracle(red.instance, k);
                std::vector<std::size_t> image;
                for (const auto& p : rg.paths()) {
                    const Path m = red.forward_path_map(p);
                    if (!is_st_shortest_path(red.instance, m)) ++invalid;
                    image.push_back(rk.index_of(m).value_or(0));
                }
                for (std::size_t i = 0; i < rg.size(); ++i) {
                    for (std::size_t j = 0; j < rg.size(); ++j) {
                        ++pairs;
                        if (rg.connected(i, j) != rk.connected(image[i], image[j])) ++bad;
                    }
                }
            }
            const auto five = kspr_line_instance(inst, 5);
            for (std::size_t i = 0; i < rg.size(); ++i) {
                for (std::size_t j : rg.neighbors(i)) {
                    ++five_checked;
                    if (brute::span(five.forward_path_map(rg.path(i)), five.forward_path_map(rg.path(j))) != 5) {
                        ++five_bad;
                    }
                }
            }
        }
    }
    return {bad == 0 && invalid == 0 && five_bad == 0 && pairs > 0,
            fmt("200 seeds, %zu pairs over k in {2,3}, %zu mismatches, %zu invalid mapped paths, "
                "k=5 one-to-five property %zu/%zu",
                pairs, bad, invalid, five_checked - five_bad, five_checked)};
}

Outcome graph_power_correspondence() {
    std::size_t pairs = 0, bad = 0, invalid = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto g = random_small_graph(seed, 4, 7, rng);
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto r3 = oracle(inst, 3);
            const auto pw = power_instance(inst, 2);
            const auto r1 = oracle(pw.instance, 1);
            std::vector<std::size_t> image;
            for (const auto& p : r3.paths()) {
                const Path m = pw.forward_path_map(p);
                if (!is_st_shortest_path(pw.instance, m)) ++invalid;
                image.push_back(r1.index_of(m).value_or(0));
            }
            for (std::size_t i = 0; i < r3.size(); ++i) {
                for (std::size_t j = 0; j < r3.size(); ++j) {
                    ++pairs;
                    if (r3.connected(i, j) != r1.connected(image[i], image[j])) ++bad;
                }
            }
        }
    }
    return {bad == 0 && invalid == 0 && pairs > 0,
            fmt("200 seeds, %zu pairs, %zu mismatches, %zu invalid mapped paths", pairs, bad, invalid)};
}

Outcome diameter_monotonicity() {
    std::size_t instances = 0, edge_breaks = 0, diameter_breaks = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto g = random_small_graph(seed, 4, 8, rng);
        for (const auto& [s, t] : st_pairs(g, 2, 100)) {
            const auto inst = StInstance::make(g, s, t);
            std::vector<ReconfigGraph> graphs;
            for (std::size_t k = 1; k <= 4; ++k) graphs.push_back(oracle(inst, k));
            ++instances;
            for (std::size_t a = 0; a < 4; ++a) {
                for (std::size_t b = a + 1; b < 4; ++b) {
                    for (std::size_t i = 0; i < graphs[a].size(); ++i) {
                        for (std::size_t j : graphs[a].neighbors(i)) {
                            if (!graphs[b].adjacent(i, j)) ++edge_breaks;
                        }
                    }
                    const auto da = reconfig_diameter(graphs[a]);
                    const auto db = reconfig_diameter(graphs[b]);
                    if (da && (!db || *db > *da)) ++diameter_breaks;
                }
            }
        }
    }
    return {edge_breaks == 0 && diameter_breaks == 0 && instances > 0,
            fmt("%zu instances, %zu edge-inclusion violations, %zu diameter increases", instances, edge_breaks,
                diameter_breaks)};
}

Outcome large_k_shortcut_bound() {
    std::size_t pairs = 0, bad = 0;
    for (int seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const auto g = random_small_graph(seed, 4, 10, rng);
        const std::size_t n = g.vertex_count();
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto paths = enumerate_shortest_paths(inst, kSweepCap * 10);
            for (std::size_t k = (n + 1) / 2; k <= n; ++k) {
                for (const auto& p : paths) {
                    for (const auto& q : paths) {
                        ++pairs;
                        const auto seq = large_k_shortcut(inst, p, q, k);
                        bool ok = seq.size() <= 2 && replays_validly(inst, seq, k, q);
                        for (const auto& stage : seq.stages()) ok = ok && is_st_shortest_path(inst, stage);
                        if (!ok) ++bad;
                    }
                }
            }
        }
    }
    return {bad == 0 && pairs > 0, fmt("%zu (pair, k) combinations, %zu failures", pairs, bad)};
}

Outcome cost_exactness() {
    std::size_t checks = 0, bad = 0, identity_bad = 0, reduc_pairs = 0, reduc_bad = 0;
    for (int seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const auto g = random_small_graph(seed, 5, 8, rng);
        const std::size_t n = g.vertex_count();
        for (const auto& [s, t] : st_pairs(g, 2, 100)) {
            const auto inst = StInstance::make(g, s, t);
            const auto paths = brute::shortest_paths(g, s, t);
            if (paths.size() < 2 || paths.size() > 12) continue;
            std::vector<Rational> table;
            Rational current = 0;
            for (std::size_t i = 0; i < n; ++i) {
                current += Rational(static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 4));
                table.push_back(current);
            }
            const CostModel costs(table);
            const std::size_t l = 1 + static_cast<std::size_t>(rng() % 3);
            const std::size_t i = rng() % paths.size();
            const std::size_t j = (i + 1 + rng() % (paths.size() - 1)) % paths.size();
            const auto sum = min_sum(inst, paths[i], paths[j], costs);
            const auto max = min_max(inst, paths[i], paths[j], costs);
            const auto top = min_top_l(inst, paths[i], paths[j], costs, l);
            checks += 3;
            if (sum->total != brute::exhaustive_optimum(paths, i, j, table, brute::Objective::kSum)) ++bad;
            if (max->max != brute::exhaustive_optimum(paths, i, j, table, brute::Objective::kMax)) ++bad;
            if (top->top_l_sum != brute::exhaustive_optimum(paths, i, j, table, brute::Objective::kTopL, l)) ++bad;
            for (const auto* r : {&*sum, &*max, &*top}) {
                if (!replays_validly(inst, r->sequence, n, paths[j])) ++bad;
            }
            if (min_top_l(inst, paths[i], paths[j], costs, 1)->top_l_sum != max->max) ++identity_bad;
            if (min_top_l(inst, paths[i], paths[j], costs, std::nullopt)->top_l_sum != sum->total) ++identity_bad;
        }
        if (n <= 6) {
            for (const auto& [s, t] : st_pairs(g, 2, 100)) {
                const auto inst = StInstance::make(g, s, t);
                const auto rg = oracle(inst, 1);
                for (std::size_t a = 0; a < rg.size(); ++a) {
                    for (std::size_t b = 0; b < rg.size(); ++b) {
                        ++reduc_pairs;
                        if (reduc_decide(inst, rg.path(a), rg.path(b), 1 + (a + b) % 3) != rg.connected(a, b)) {
                            ++reduc_bad;
                        }
                    }
                }
            }
        }
    }
    return {bad == 0 && identity_bad == 0 && reduc_bad == 0 && checks > 0 && reduc_pairs > 0,
            fmt("%zu optima vs exhaustive search, %zu mismatches, %zu identity breaks, reduc %zu pairs, "
                "%zu mismatches",
                checks, bad, identity_bad, reduc_pairs, reduc_bad)};
}

Outcome path_count_bound() {
    std::size_t counted = 0, over = 0;
    for (int seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const auto g = random_graph(6 + static_cast<std::size_t>(seed % 7), 0.5, rng);
        for (const auto& [s, t] : st_pairs(g, 1, 100)) {
            ++counted;
            if (count_shortest_paths(StInstance::make(g, s, t)) > (BigInt(1) << g.vertex_count())) ++over;
        }
    }
    return {audit.builds > 0 && audit.largest_ratio_violations == 0 && over == 0,
            fmt("%zu oracle builds (largest %zu paths), %zu above 2^n; %zu extra counts, %zu above 2^n",
                audit.builds, audit.max_paths, audit.largest_ratio_violations, counted, over)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"hypercube optimality", hypercube_optimality},
        {"gadget-chain counts", gadget_chain_counts},
        {"permutation solver soundness", permutation_soundness},
        {"circle solver soundness and invariance", circle_soundness},
        {"weakly-modular solver on interval graphs", weakly_modular_interval},
        {"line-graph reduction equivalence", line_graph_equivalence},
        {"graph-power correspondence", graph_power_correspondence},
        {"diameter monotonicity", diameter_monotonicity},
        {"large-k shortcut", large_k_shortcut_bound},
        {"cost-variant exactness", cost_exactness},
        {"path-count bound", path_count_bound},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
                  << outcome.detail << fmt(" (%.1f s)", seconds) << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
