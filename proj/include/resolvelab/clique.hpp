#pragma once

#include <resolvelab/graph.hpp>

#include <vector>

namespace resolvelab {

/// A maximum clique, found by branch and bound with a greedy colouring
/// bound. Vertices returned in increasing order.
auto maximum_clique(const Graph & g) -> std::vector<Vertex>;

auto clique_number(const Graph & g) -> std::size_t;

auto is_clique(const Graph & g, const std::vector<Vertex> & vertices) -> bool;

}
