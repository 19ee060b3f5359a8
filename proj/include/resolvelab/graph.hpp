#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace resolvelab {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with first < second.
struct Edge
{
    Vertex first;
    Vertex second;

    Edge() = default;
    Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

    auto operator<=>(const Edge &) const = default;
};

/// Shortest-path length, or infinity across components. Infinity equals
/// itself and is greater than every finite value.
class Distance
{
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t v) : _value(v) {}

    static constexpr auto infinity() -> Distance { return Distance{inf_raw}; }

    constexpr auto is_infinite() const -> bool { return _value == inf_raw; }
    constexpr auto value() const -> std::uint32_t { return _value; }

    constexpr auto operator<=>(const Distance &) const = default;

    auto to_string() const -> std::string;

    static constexpr std::uint32_t inf_raw = std::numeric_limits<std::uint32_t>::max();

private:
    std::uint32_t _value = 0;
};

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph
{
public:
    Graph() = default;

    /// Throws UsageError on self-loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, std::span<const Edge> edges);

    auto order() const -> std::size_t { return _adjacency.size(); }
    auto size() const -> std::size_t { return _edge_count; }

    auto adjacent(Vertex a, Vertex b) const -> bool { return _adjacency[a].test(b); }
    auto neighbourhood(Vertex v) const -> const VertexSet & { return _adjacency[v]; }
    auto degree(Vertex v) const -> std::size_t { return _adjacency[v].count(); }
    auto max_degree() const -> std::size_t;

    /// Edges in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto empty_set() const -> VertexSet { return VertexSet(order()); }

    auto operator==(const Graph & other) const -> bool { return _adjacency == other._adjacency; }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> _adjacency;
    std::size_t _edge_count = 0;
};

/// Mutable staging area for constructions.
class GraphBuilder
{
public:
    explicit GraphBuilder(std::size_t n = 0);

    auto add_vertex() -> Vertex;
    auto order() const -> std::size_t { return _adjacency.size(); }

    /// Idempotent; throws UsageError on self-loops or bad endpoints.
    auto add_edge(Vertex a, Vertex b) -> void;
    auto adjacent(Vertex a, Vertex b) const -> bool { return _adjacency[a].test(b); }

    auto build() const -> Graph;

private:
    std::vector<VertexSet> _adjacency;
};

auto path_graph(std::size_t n) -> Graph;
auto cycle_graph(std::size_t n) -> Graph;
auto complete_graph(std::size_t n) -> Graph;
auto empty_graph(std::size_t n) -> Graph;
auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph;
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

/// Induced subgraph on `keep`, densely re-indexed; `keep[i]` becomes vertex i.
auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph;

/// Component id per vertex, ids numbered by smallest member.
auto connected_components(const Graph & g) -> std::vector<std::size_t>;
auto component_count(const Graph & g) -> std::size_t;
auto is_connected(const Graph & g) -> bool;

class DistanceMatrix
{
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n);

    auto order() const -> std::size_t { return _n; }
    auto operator()(Vertex u, Vertex v) const -> Distance { return Distance{_d[u * _n + v]}; }
    auto raw(Vertex u, Vertex v) const -> std::uint32_t { return _d[u * _n + v]; }
    auto set(Vertex u, Vertex v, std::uint32_t d) -> void { _d[u * _n + v] = d; }

    auto diameter_of_components() const -> std::uint32_t;

private:
    std::size_t _n = 0;
    std::vector<std::uint32_t> _d;
};

/// BFS from every vertex.
auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

}
