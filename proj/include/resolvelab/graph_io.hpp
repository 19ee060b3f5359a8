#pragma once

#include <resolvelab/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace resolvelab {

/// Reads "n m" followed by m lines "u v" (0-based). '#' starts a comment.
/// Throws ParseError naming the offending line.
auto graph_from_edge_list(std::istream & in) -> Graph;
auto graph_from_edge_list(std::string_view text) -> Graph;
auto graph_to_edge_list(const Graph & g) -> std::string;

/// Short-form graph6 only, so n <= 62.
auto graph_to_graph6(const Graph & g) -> std::string;
auto graph_from_graph6(std::string_view text) -> Graph;

}
