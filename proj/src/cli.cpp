#include "spr/cli.hpp"

#include "spr/cost.hpp"
#include "spr/errors.hpp"
#include "spr/generators.hpp"
#include "spr/instance_io.hpp"
#include "spr/oracle.hpp"
#include "spr/reductions.hpp"
#include "spr/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace spr::cli {

namespace {

using nlohmann::json;

struct Loaded {
    StInstance instance;
    std::optional<Representation> rep;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
    return parts;
}

std::size_t to_size(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-') {
        throw CLI::ValidationError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

HypercubeRep hypercube_rep(const std::string& d, const std::string& s, const std::string& t) {
    return HypercubeRep{static_cast<int>(to_size(d, "dimension")), s, t};
}

Loaded hypercube_instance(const HypercubeRep& rep) {
    auto graph = graph_of(rep);
    return Loaded{StInstance::make(std::move(graph), hypercube_vertex(rep.s_bits), hypercube_vertex(rep.t_bits)), rep};
}

// A file name, or gen:chain:<g>:<l>, or gen:hypercube:<d>:<s bits>:<t bits>.
Loaded load(const std::string& arg) {
    if (arg.rfind("gen:", 0) == 0) {
        const auto parts = split(arg, ':');
        if (parts.size() == 4 && parts[1] == "chain") {
            return Loaded{gadget_chain(to_size(parts[2], "g"), to_size(parts[3], "l")), std::nullopt};
        }
        if (parts.size() == 5 && parts[1] == "hypercube") return hypercube_instance(hypercube_rep(parts[2], parts[3], parts[4]));
        throw CLI::ValidationError("unknown generator '" + arg + "'");
    }
    auto file = parse_instance(read_file(arg));
    return Loaded{std::move(file.instance), std::move(file.representation)};
}

Path load_path(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return parse_path(read_file(arg));
    return parse_path(arg);
}

std::size_t path_cap() {
    if (const char* env = std::getenv("RECONFIG_PATH_CAP")) {
        const std::size_t cap = to_size(env, "RECONFIG_PATH_CAP");
        if (cap == 0) throw CLI::ValidationError("RECONFIG_PATH_CAP must be positive");
        return cap;
    }
    return kDefaultPathCap;
}

json stages_json(const ReconfigSequence& seq) {
    json stages = json::array();
    for (const auto& stage : seq.stages()) stages.push_back(stage);
    return stages;
}

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    std::uint64_t seed = 0;
};

int report_sequence(Context& ctx, const std::optional<ReconfigSequence>& seq, std::size_t k, bool with_verdict,
                    json extra = json::object()) {
    if (ctx.json) {
        json obj = std::move(extra);
        if (with_verdict) obj["verdict"] = seq ? "yes" : "no";
        if (seq) {
            obj["steps"] = seq->size();
            obj["k"] = k;
            obj["stages"] = stages_json(*seq);
        }
        ctx.out << obj.dump() << '\n';
    } else {
        for (const auto& [key, value] : extra.items()) {
            ctx.out << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        if (with_verdict) ctx.out << "verdict " << (seq ? "yes" : "no") << '\n';
        if (seq) ctx.out << format_sequence(*seq, k);
    }
    return seq ? kOk : kNo;
}

// ---- solve

template <typename R>
const R& require_rep(const Loaded& loaded, const char* cls) {
    if (!loaded.rep || !std::holds_alternative<R>(*loaded.rep)) {
        throw CLI::ValidationError(std::string("class ") + cls + " needs a matching representation block");
    }
    return std::get<R>(*loaded.rep);
}

int run_solve(Context& ctx, const std::string& cls, const std::string& instance_arg, const std::string& p_arg,
              const std::string& q_arg, std::size_t k) {
    const Loaded loaded = load(instance_arg);
    const Path p = load_path(p_arg);
    const Path q = load_path(q_arg);
    const auto& inst = loaded.instance;
    SolveResult result;
    std::size_t shown_k = 1;
    if (cls == "permutation") {
        result = permutation_solve(require_rep<PermutationRep>(loaded, "permutation"), inst, p, q);
    } else if (cls == "circle") {
        result = circle_solve(require_rep<ChordRep>(loaded, "circle"), inst, p, q);
    } else if (cls == "circular-arc") {
        result = circular_arc_solve(require_rep<ArcRep>(loaded, "circular-arc"), inst, p, q);
    } else if (cls == "hypercube") {
        result.sequence = hypercube_solve(require_rep<HypercubeRep>(loaded, "hypercube"), p, q);
        result.reconfigurable = true;
    } else if (cls == "weakly-modular") {
        result.sequence = weakly_modular_solve(inst, p, q);
        result.reconfigurable = true;
    } else if (cls == "bounded") {
        result = bounded_diameter_solve(inst, p, q, kDefaultMaxDiameter, path_cap());
    } else if (cls == "large-k") {
        result.sequence = large_k_shortcut(inst, p, q, k);
        result.reconfigurable = true;
        shown_k = k;
    } else {
        throw CLI::ValidationError("unknown class '" + cls + "'");
    }
    for (const auto& note : result.notes) ctx.err << "note: " << note << '\n';
    if (!result.reconfigurable) result.sequence.reset();
    if (result.reconfigurable && !result.sequence) {
        ctx.err << "note: verdict yes without a sequence\n";
        if (ctx.json) {
            ctx.out << json{{"verdict", "yes"}}.dump() << '\n';
        } else {
            ctx.out << "verdict yes\n";
        }
        return kOk;
    }
    return report_sequence(ctx, result.sequence, shown_k, true);
}

// ---- verify

struct Tally {
    std::size_t instances = 0;
    std::size_t pairs = 0;
    std::size_t disagreements = 0;
    std::size_t skipped = 0;
};

using PairCheck = std::function<bool(const StInstance&, const ReconfigGraph&, std::size_t, std::size_t)>;

void check_instance(Tally& tally, const Graph& graph, int min_distance, std::size_t cap, const PairCheck& check) {
    ++tally.instances;
    for (const auto& [s, t] : st_pairs(graph, min_distance, std::numeric_limits<int>::max())) {
        const auto inst = StInstance::make(graph, s, t);
        std::optional<ReconfigGraph> oracle;
        try {
            oracle = build_reconfig_graph(inst, 1, cap);
        } catch (const CapExceeded&) {
            ++tally.skipped;
            continue;
        }
        for (std::size_t i = 0; i < oracle->size(); ++i) {
            for (std::size_t j = 0; j < oracle->size(); ++j) {
                ++tally.pairs;
                if (!check(inst, *oracle, i, j)) ++tally.disagreements;
            }
        }
    }
}

bool agrees(const SolveResult& r, const StInstance& inst, const ReconfigGraph& oracle, std::size_t i, std::size_t j) {
    if (r.reconfigurable != oracle.connected(i, j)) return false;
    return !r.sequence || replays_validly(inst, *r.sequence, 1, oracle.path(j));
}

int run_verify(Context& ctx, const std::string& cls, std::size_t n, const std::string& trials_arg) {
    const bool exhaustive = trials_arg == "exhaustive";
    const std::size_t trials = exhaustive ? 0 : to_size(trials_arg, "--trials");
    const std::size_t cap = 200;
    Rng rng(ctx.seed);
    Tally tally;

    if (cls == "hypercube") {
        if (n < 1 || n > 5) throw CLI::ValidationError("hypercube verify needs 1 <= n <= 5");
        const auto size = static_cast<Vertex>(1 << n);
        std::vector<std::pair<Vertex, Vertex>> pairs;
        if (exhaustive) {
            for (Vertex s = 0; s < size; ++s) {
                for (Vertex t = 0; t < size; ++t) {
                    if (s != t) pairs.emplace_back(s, t);
                }
            }
        } else {
            std::uniform_int_distribution<Vertex> pick(0, size - 1);
            while (pairs.size() < trials) {
                const Vertex s = pick(rng);
                const Vertex t = pick(rng);
                if (s != t) pairs.emplace_back(s, t);
            }
        }
        for (const auto& [s, t] : pairs) {
            const HypercubeRep rep{static_cast<int>(n), hypercube_bits(s, static_cast<int>(n)), hypercube_bits(t, static_cast<int>(n))};
            const auto loaded = hypercube_instance(rep);
            const auto oracle = build_reconfig_graph(loaded.instance, 1, kDefaultPathCap);
            ++tally.instances;
            for (std::size_t i = 0; i < oracle.size(); ++i) {
                const auto dist = oracle.distances_from(i);
                for (std::size_t j = 0; j < oracle.size(); ++j) {
                    ++tally.pairs;
                    const auto seq = hypercube_solve(rep, oracle.path(i), oracle.path(j));
                    const auto tau = kendall_tau(hypercube_permutation(rep, oracle.path(i)),
                                                 hypercube_permutation(rep, oracle.path(j)));
                    if (seq.size() != tau || !dist[j] || *dist[j] != tau ||
                        !replays_validly(loaded.instance, seq, 1, oracle.path(j))) {
                        ++tally.disagreements;
                    }
                }
            }
        }
    } else {
        const auto repeat = [&](const std::function<void()>& once) {
            if (exhaustive) throw CLI::ValidationError("--trials exhaustive is available for permutation and hypercube");
            for (std::size_t i = 0; i < trials; ++i) once();
        };
        if (cls == "permutation") {
            const auto check = [&](const PermutationRep& rep) {
                check_instance(tally, graph_of(rep), 3, cap, [&](const StInstance& inst, const ReconfigGraph& o, std::size_t i, std::size_t j) {
                    return agrees(permutation_solve(rep, inst, o.path(i), o.path(j)), inst, o, i, j);
                });
            };
            if (exhaustive) {
                PermutationRep rep;
                rep.sigma.resize(n);
                std::iota(rep.sigma.begin(), rep.sigma.end(), 1);
                do {
                    check(rep);
                } while (std::next_permutation(rep.sigma.begin(), rep.sigma.end()));
            } else {
                for (std::size_t i = 0; i < trials; ++i) check(random_permutation_rep(n, rng));
            }
        } else if (cls == "circle") {
            repeat([&] {
                const auto rep = random_chord_rep(n, rng);
                check_instance(tally, graph_of(rep), 1, cap, [&](const StInstance& inst, const ReconfigGraph& o, std::size_t i, std::size_t j) {
                    return agrees(circle_solve(rep, inst, o.path(i), o.path(j)), inst, o, i, j);
                });
            });
        } else if (cls == "circular-arc") {
            repeat([&] {
                const auto rep = random_narrow_arc_rep(n, 3, rng);
                check_instance(tally, graph_of(rep), 1, cap, [&](const StInstance& inst, const ReconfigGraph& o, std::size_t i, std::size_t j) {
                    return agrees(circular_arc_solve(rep, inst, o.path(i), o.path(j)), inst, o, i, j);
                });
            });
        } else if (cls == "weakly-modular") {
            repeat([&] {
                const auto rep = random_interval_rep(n, rng);
                check_instance(tally, graph_of(rep), 1, cap, [&](const StInstance& inst, const ReconfigGraph& o, std::size_t i, std::size_t j) {
                    if (!o.connected(i, j)) return false;
                    const auto seq = weakly_modular_solve(inst, o.path(i), o.path(j));
                    return replays_validly(inst, seq, 1, o.path(j));
                });
            });
        } else {
            throw CLI::ValidationError("unknown class '" + cls + "'");
        }
    }

    std::ostringstream agreement;
    if (tally.disagreements == 0) {
        agreement << "100%";
    } else {
        agreement << std::fixed << std::setprecision(2)
                  << 100.0 * static_cast<double>(tally.pairs - tally.disagreements) / static_cast<double>(tally.pairs) << '%';
    }
    if (ctx.json) {
        ctx.out << json{{"class", cls},
                        {"instances", tally.instances},
                        {"pairs", tally.pairs},
                        {"disagreements", tally.disagreements},
                        {"skipped", tally.skipped},
                        {"agreement", agreement.str()}}
                       .dump()
                << '\n';
    } else {
        ctx.out << "class " << cls << " instances " << tally.instances << " pairs " << tally.pairs << " disagreements "
                << tally.disagreements << " skipped " << tally.skipped << '\n'
                << "agreement " << agreement.str() << '\n';
    }
    return tally.disagreements == 0 ? kOk : kNo;
}

// ---- gen

Loaded random_class_instance(const std::string& kind, std::size_t n, Rng& rng) {
    Representation rep;
    if (kind == "perm") {
        rep = random_permutation_rep(n, rng);
    } else if (kind == "chords") {
        rep = random_chord_rep(n, rng);
    } else if (kind == "arcs") {
        rep = random_narrow_arc_rep(n, 3, rng);
    } else if (kind == "interval") {
        rep = random_interval_rep(n, rng);
    } else {
        throw CLI::ValidationError("unknown generator '" + kind + "'");
    }
    const Graph graph = std::visit([](const auto& r) { return graph_of(r); }, rep);
    // s and t: the lexicographically first pair at the largest distance.
    const auto pairs = st_pairs(graph, 1, std::numeric_limits<int>::max());
    if (pairs.empty()) throw InvalidInstance("generated graph has no edges; try another --seed");
    std::pair<Vertex, Vertex> best = pairs.front();
    int best_d = 0;
    for (const auto& [s, t] : pairs) {
        const int d = bfs_layering(graph, s).layer(t);
        if (d > best_d) {
            best_d = d;
            best = {s, t};
        }
    }
    return Loaded{StInstance::make(graph, best.first, best.second), rep};
}

int run_gen(Context& ctx, const std::vector<std::string>& words) {
    if (words.empty()) throw CLI::ValidationError("gen needs a generator name");
    const auto& kind = words[0];
    const auto need = [&](std::size_t count) {
        if (words.size() != count + 1) {
            throw CLI::ValidationError("gen " + kind + " takes " + std::to_string(count) + " arguments");
        }
    };
    Loaded result{gadget_chain(1, 1), std::nullopt};
    if (kind == "chain") {
        need(2);
        result = Loaded{gadget_chain(to_size(words[1], "g"), to_size(words[2], "l")), std::nullopt};
    } else if (kind == "hypercube") {
        need(3);
        result = hypercube_instance(hypercube_rep(words[1], words[2], words[3]));
    } else if (kind == "linegraph" || kind == "power" || kind == "subdivide") {
        need(2);
        const auto src = load(words[1]).instance;
        const std::size_t param = to_size(words[2], kind == "subdivide" ? "l" : "k");
        if (kind == "linegraph") {
            result = Loaded{kspr_line_instance(src, param).instance, std::nullopt};
        } else if (kind == "power") {
            result = Loaded{power_instance(src, param).instance, std::nullopt};
        } else {
            result = Loaded{StInstance::make(subdivide_uniform(src.graph, param), src.s, src.t), std::nullopt};
        }
    } else {
        need(1);
        Rng rng(ctx.seed);
        result = random_class_instance(kind, to_size(words[1], "n"), rng);
    }
    const std::string text = format_instance(result.instance, result.rep);
    if (ctx.json) {
        ctx.out << json{{"instance", text}}.dump() << '\n';
    } else {
        ctx.out << text;
    }
    return kOk;
}

// ---- cost

CostModel load_costs(const std::string& arg) {
    const std::string text = std::filesystem::is_regular_file(arg) ? read_file(arg) : arg;
    std::vector<Rational> prices;
    std::istringstream in(text);
    for (std::string token; in >> token;) {
        try {
            prices.emplace_back(token);
        } catch (const std::exception&) {
            throw CLI::ValidationError("cost table entry '" + token + "' is not a rational number");
        }
    }
    return CostModel(std::move(prices));
}

int run_cost(Context& ctx, const std::string& variant, const std::string& instance_arg, const std::string& p_arg,
             const std::string& q_arg, const std::string& l_arg, const std::string& costs_arg) {
    const Loaded loaded = load(instance_arg);
    const Path p = load_path(p_arg);
    const Path q = load_path(q_arg);
    const auto& inst = loaded.instance;
    const auto parse_l = [&]() -> TopL {
        if (l_arg.empty()) throw CLI::ValidationError("--l is required for " + variant);
        if (l_arg == "inf") return std::nullopt;
        const std::size_t l = to_size(l_arg, "--l");
        if (l == 0) throw CLI::ValidationError("--l must be at least 1");
        return l;
    };
    if (variant == "reduc") {
        const TopL l = parse_l();
        if (!l) throw CLI::ValidationError("reduc needs a finite --l");
        const bool yes = reduc_decide(inst, p, q, *l, path_cap());
        const auto best = min_top_l(inst, p, q, reduc_costs(inst.n(), *l), l, path_cap());
        if (ctx.json) {
            ctx.out << json{{"verdict", yes ? "yes" : "no"},
                            {"cost", rational_text(best->top_l_sum)},
                            {"threshold", rational_text(reduc_threshold(inst.n(), *l))}}
                           .dump()
                    << '\n';
        } else {
            ctx.out << "verdict " << (yes ? "yes" : "no") << '\n'
                    << "cost " << best->top_l_sum << '\n'
                    << "threshold " << reduc_threshold(inst.n(), *l) << '\n';
        }
        return yes ? kOk : kNo;
    }
    if (costs_arg.empty()) throw CLI::ValidationError("--costs is required for " + variant);
    const CostModel costs = load_costs(costs_arg);
    std::optional<CostedSequence> best;
    Rational value;
    if (variant == "minsum") {
        best = min_sum(inst, p, q, costs, path_cap());
        if (best) value = best->total;
    } else if (variant == "minmax") {
        best = min_max(inst, p, q, costs, path_cap());
        if (best) value = best->max;
    } else if (variant == "mintop") {
        best = min_top_l(inst, p, q, costs, parse_l(), path_cap());
        if (best) value = best->top_l_sum;
    } else {
        throw CLI::ValidationError("unknown cost variant '" + variant + "'");
    }
    if (!best) return report_sequence(ctx, std::nullopt, 0, false, json{{"cost", "infeasible"}});
    return report_sequence(ctx, best->sequence, std::max<std::size_t>(best->sequence.max_block(), 1), false,
                           json{{"cost", rational_text(value)}});
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shortest path reconfiguration: oracles, class solvers, reductions and cost variants.\n\n"
                 "Instance files: header `n m`, m lines `e u v`, `s <id>`, `t <id>`, then optionally one of\n"
                 "`perm <sigma_1..sigma_n>`, `chords` + n lines `v a b`, `arcs` + n lines `v a b`,\n"
                 "`hypercube d s_bits t_bits`. `#` starts a comment. Wherever an instance is expected,\n"
                 "gen:chain:<g>:<l> and gen:hypercube:<d>:<s bits>:<t bits> work too.\n"
                 "Paths are files of whitespace-separated ids, or the ids themselves in one argument.\n"
                 "Sequences print as `steps <count> k <k>` followed by one path per stage.\n"
                 "RECONFIG_PATH_CAP overrides the enumeration cap (default 100000).\n"
                 "Exit status: 0 ok, 1 no/infeasible/disagreement, 2 usage or input error, 3 cap exceeded.",
                 "reconfig"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err};
    app.add_flag("--json", ctx.json, "Emit one JSON object per result");
    app.add_option("--seed", ctx.seed, "Seed for random generators")->capture_default_str();

    std::string instance_arg, p_arg, q_arg, cls, trials = "exhaustive", l_arg, costs_arg, variant;
    std::size_t k = 1;
    std::size_t n = 0;
    std::vector<std::string> gen_words;

    auto* solve = app.add_subcommand("solve", "Decide SPR with a class solver and print a sequence");
    solve->add_option("--class", cls, "permutation|circle|circular-arc|hypercube|weakly-modular|bounded|large-k")->required();
    solve->add_option("instance", instance_arg, "Instance file or generator")->required();
    solve->add_option("--p", p_arg, "Start path")->required();
    solve->add_option("--q", q_arg, "Target path")->required();
    solve->add_option("--k", k, "Block bound (large-k only)")->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "Minimum k-SPR sequence by breadth-first search");
    oracle->add_option("instance", instance_arg)->required();
    oracle->add_option("--p", p_arg)->required();
    oracle->add_option("--q", q_arg)->required();
    oracle->add_option("--k", k)->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Print an instance: chain g l | hypercube d s t | linegraph <file> k | "
                                          "power <file> k | subdivide <file> l | perm|chords|arcs|interval n");
    gen->add_option("words", gen_words)->required();

    auto* verify = app.add_subcommand("verify", "Compare a class solver with the oracle on generated instances");
    verify->add_option("--class", cls, "permutation|circle|circular-arc|weakly-modular|hypercube")->required();
    verify->add_option("--n", n, "Vertex count (hypercube: dimension)")->required();
    verify->add_option("--trials", trials, "Instance count, or `exhaustive` (permutation, hypercube)")->capture_default_str();

    auto* count = app.add_subcommand("count", "Number of s-t shortest paths");
    count->add_option("instance", instance_arg)->required();

    auto* diameter = app.add_subcommand("diameter", "Diameter of the k-SPR reconfiguration graph");
    diameter->add_option("instance", instance_arg)->required();
    diameter->add_option("--k", k)->capture_default_str();

    auto* cost = app.add_subcommand("cost", "Cost variants: minsum|minmax|mintop|reduc");
    cost->add_option("variant", variant)->required();
    cost->add_option("instance", instance_arg)->required();
    cost->add_option("--p", p_arg)->required();
    cost->add_option("--q", q_arg)->required();
    cost->add_option("--l", l_arg, "Number of largest costs summed (mintop, reduc); `inf` for all");
    cost->add_option("--costs", costs_arg, "File (or quoted list) with p_1 .. p_n");

    std::vector<const char*> argv{"reconfig"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (k == 0) throw CLI::ValidationError("--k must be at least 1");
        if (*solve) return run_solve(ctx, cls, instance_arg, p_arg, q_arg, k);
        if (*verify) return run_verify(ctx, cls, n, trials);
        if (*gen) return run_gen(ctx, gen_words);
        if (*cost) return run_cost(ctx, variant, instance_arg, p_arg, q_arg, l_arg, costs_arg);
        const Loaded loaded = load(instance_arg);
        if (*oracle) {
            const auto seq = shortest_reconfig_sequence(loaded.instance, load_path(p_arg), load_path(q_arg), k, path_cap());
            return report_sequence(ctx, seq, k, true);
        }
        if (*count) {
            const BigInt total = count_shortest_paths(loaded.instance);
            if (ctx.json) {
                ctx.out << json{{"count", total.str()}}.dump() << '\n';
            } else {
                ctx.out << total << '\n';
            }
            return kOk;
        }
        if (*diameter) {
            const auto d = reconfig_diameter(loaded.instance, k, path_cap());
            const std::string text = d ? std::to_string(*d) : "infinite";
            if (ctx.json) {
                ctx.out << json{{"k", k}, {"diameter", text}}.dump() << '\n';
            } else {
                ctx.out << "diameter " << text << '\n';
            }
            return kOk;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace spr::cli
