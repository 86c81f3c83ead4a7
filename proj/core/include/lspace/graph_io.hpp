#pragma once

#include "lspace/graph.hpp"

#include <string>

namespace lspace {

/// Parses the line-based graph format:
///   # comment
///   vertex <id> <weight> [arrows=<n>]
///   edge <id> <id>
/// Vertices must be declared before edges use them. Throws parse_error with
/// the offending line number on syntax errors and invariant violations
/// (duplicate id, dangling edge, self-loop, cycle).
DecoratedGraph parse_graph(const std::string& text);

/// Renders a graph in the same format parse_graph reads, so subcommand output
/// can be piped back in.
std::string render_graph(const DecoratedGraph& g);
std::string render_graph(const PlumbingGraph& g);

} // namespace lspace
