#include "spr/instance_io.hpp"

#include "spr/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace spr {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(const Line& line, std::string_view token) {
    long long value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line.number, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

void expect_arity(const Line& line, std::size_t arity) {
    if (line.tokens.size() != arity) {
        throw ParseError(line.number, "record '" + std::string(line.tokens.front()) + "' expects " +
                                          std::to_string(arity - 1) + " fields");
    }
}

std::vector<std::pair<int, int>> parse_endpoint_block(const std::vector<Line>& lines, std::size_t& cursor,
                                                      std::size_t n, const char* kind) {
    std::vector<std::pair<int, int>> out(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (cursor >= lines.size()) {
            throw ParseError(lines.back().number, std::string(kind) + " block ended after " + std::to_string(i) +
                                                      " of " + std::to_string(n) + " records");
        }
        const Line& line = lines[cursor++];
        if (line.tokens.size() != 3) throw ParseError(line.number, std::string(kind) + " record expects `v a b`");
        const auto v = to_int(line, line.tokens[0]);
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
            throw ParseError(line.number, std::string(kind) + " vertex " + std::to_string(v) + " invalid or repeated");
        }
        seen[static_cast<std::size_t>(v)] = true;
        out[static_cast<std::size_t>(v)] = {static_cast<int>(to_int(line, line.tokens[1])),
                                            static_cast<int>(to_int(line, line.tokens[2]))};
    }
    return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty instance");

    const Line& header = lines.front();
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be `n m`");
    const auto n = to_int(header, header.tokens[0]);
    const auto m = to_int(header, header.tokens[1]);
    if (n < 1 || m < 0) throw ParseError(header.number, "header counts must satisfy n >= 1, m >= 0");

    std::vector<Edge> edges;
    std::set<Edge> seen_edges;
    std::optional<long long> s, t;
    std::optional<Representation> rep;
    std::size_t cursor = 1;
    while (cursor < lines.size()) {
        const Line& line = lines[cursor++];
        const std::string_view kind = line.tokens.front();
        if (rep) throw ParseError(line.number, "unexpected record after representation block");
        if (kind == "e") {
            expect_arity(line, 3);
            const auto u = to_int(line, line.tokens[1]);
            const auto v = to_int(line, line.tokens[2]);
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw InvalidInstance("line " + std::to_string(line.number) + ": edge endpoint out of range");
            }
            if (u == v) throw InvalidInstance("line " + std::to_string(line.number) + ": self-loop at " + std::to_string(u));
            const Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
            if (!seen_edges.insert(key).second) {
                throw InvalidInstance("line " + std::to_string(line.number) + ": duplicate edge");
            }
            edges.push_back(key);
        } else if (kind == "s" || kind == "t") {
            expect_arity(line, 2);
            auto& slot = kind == "s" ? s : t;
            if (slot) throw ParseError(line.number, "duplicate `" + std::string(kind) + "` record");
            slot = to_int(line, line.tokens[1]);
        } else if (kind == "perm") {
            PermutationRep perm;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                perm.sigma.push_back(static_cast<int>(to_int(line, line.tokens[i])));
            }
            while (perm.sigma.size() < static_cast<std::size_t>(n) && cursor < lines.size()) {
                const Line& more = lines[cursor++];
                for (auto token : more.tokens) perm.sigma.push_back(static_cast<int>(to_int(more, token)));
            }
            if (perm.sigma.size() != static_cast<std::size_t>(n)) {
                throw ParseError(line.number, "perm block needs exactly n values");
            }
            rep = std::move(perm);
        } else if (kind == "chords") {
            expect_arity(line, 1);
            rep = ChordRep{parse_endpoint_block(lines, cursor, static_cast<std::size_t>(n), "chords")};
        } else if (kind == "arcs") {
            expect_arity(line, 1);
            rep = ArcRep{parse_endpoint_block(lines, cursor, static_cast<std::size_t>(n), "arcs")};
        } else if (kind == "hypercube") {
            expect_arity(line, 4);
            rep = HypercubeRep{static_cast<int>(to_int(line, line.tokens[1])), std::string(line.tokens[2]),
                               std::string(line.tokens[3])};
        } else {
            throw ParseError(line.number, "unknown record '" + std::string(kind) + "'");
        }
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(header.number, "header announces " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges.size()));
    }
    if (!s) throw ParseError(lines.back().number, "missing `s` record");
    if (!t) throw ParseError(lines.back().number, "missing `t` record");
    if (*s < 0 || *s >= n) throw InvalidInstance("s = " + std::to_string(*s) + " out of range");
    if (*t < 0 || *t >= n) throw InvalidInstance("t = " + std::to_string(*t) + " out of range");

    auto graph = Graph::from_edges(static_cast<std::size_t>(n), edges);
    if (rep) {
        require_matches(graph, *rep);
        if (const auto* cube = std::get_if<HypercubeRep>(&*rep);
            cube && (hypercube_vertex(cube->s_bits) != *s || hypercube_vertex(cube->t_bits) != *t)) {
            throw InvalidRepresentation("hypercube s/t bit strings disagree with the s/t records");
        }
    }
    return InstanceFile{StInstance::make(std::move(graph), static_cast<Vertex>(*s), static_cast<Vertex>(*t)),
                        std::move(rep)};
}

std::string format_instance(const StInstance& instance, const std::optional<Representation>& rep) {
    std::ostringstream out;
    const auto edges = instance.graph.edges();
    out << instance.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u << ' ' << v << '\n';
    out << "s " << instance.s << '\n' << "t " << instance.t << '\n';
    if (!rep) return out.str();
    if (const auto* perm = std::get_if<PermutationRep>(&*rep)) {
        out << "perm";
        for (int value : perm->sigma) out << ' ' << value;
        out << '\n';
    } else if (const auto* chords = std::get_if<ChordRep>(&*rep)) {
        out << "chords\n";
        for (std::size_t v = 0; v < chords->size(); ++v) {
            out << v << ' ' << chords->chords[v].first << ' ' << chords->chords[v].second << '\n';
        }
    } else if (const auto* arcs = std::get_if<ArcRep>(&*rep)) {
        out << "arcs\n";
        for (std::size_t v = 0; v < arcs->size(); ++v) {
            out << v << ' ' << arcs->arcs[v].first << ' ' << arcs->arcs[v].second << '\n';
        }
    } else if (const auto* cube = std::get_if<HypercubeRep>(&*rep)) {
        out << "hypercube " << cube->dimension << ' ' << cube->s_bits << ' ' << cube->t_bits << '\n';
    }
    return out.str();
}

Path parse_path(std::string_view text) {
    Path path;
    for (const auto& line : tokenize(text)) {
        for (auto token : line.tokens) path.push_back(static_cast<Vertex>(to_int(line, token)));
    }
    return path;
}

std::string format_path(const Path& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(path[i]);
    }
    return out;
}

std::string read_file(const std::string& filename) {
    std::ifstream in(filename, std::ios::binary);
    if (!in) throw Error("cannot open '" + filename + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace spr
