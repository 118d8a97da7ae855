#pragma once

#include "spr/graph.hpp"
#include "spr/representation.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace spr {

// Text instance format, one record per line, `#` starts a comment:
//
//   n m
//   e u v          (m times)
//   s <id>
//   t <id>
//
// optionally followed by one representation block:
//
//   perm <sigma_0 ... sigma_{n-1}>      (values may continue on following lines)
//   chords  + n lines `v a b`
//   arcs    + n lines `v a b`
//   hypercube d s_bits t_bits
struct InstanceFile {
    StInstance instance;
    std::optional<Representation> representation;
};

InstanceFile parse_instance(std::string_view text);
// Convenience wrapper that discards the representation block.
inline StInstance load_graph(std::string_view text) { return parse_instance(text).instance; }

std::string format_instance(const StInstance& instance, const std::optional<Representation>& rep = std::nullopt);

// Path files hold whitespace-separated vertex ids on one line.
Path parse_path(std::string_view text);
std::string format_path(const Path& path);

std::string read_file(const std::string& filename);

}  // namespace spr
