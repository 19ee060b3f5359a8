#pragma once

#include <resolvelab/graph.hpp>
#include <resolvelab/variant.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace resolvelab {

/// Ordered, duplicate-free landmark vertices; coordinate i of a distance
/// vector belongs to element i.
using LandmarkSet = std::vector<Vertex>;

/// A vertex, or an edge under the edge variant.
struct Item
{
    Vertex a = 0;
    Vertex b = 0;
    bool is_edge = false;

    static auto vertex(Vertex v) -> Item { return Item{v, v, false}; }
    static auto edge(Vertex u, Vertex v) -> Item { return u < v ? Item{u, v, true} : Item{v, u, true}; }

    auto to_string() const -> std::string;

    auto operator<=>(const Item &) const = default;
};

struct ItemPair
{
    Item first;
    Item second;

    auto to_string() const -> std::string;
};

using DistanceVector = std::vector<Distance>;

/// Outcome of a resolving or fault-tolerance check. On failure `unresolved`
/// names a colliding pair and, for fault tolerance, `removed` the landmark
/// whose loss exposes it.
struct Certificate
{
    bool ok = true;
    std::optional<Vertex> removed;
    std::optional<ItemPair> unresolved;

    explicit operator bool() const { return ok; }
};

/// The items a variant has to tell apart: edges for the edge variant,
/// vertices otherwise.
auto items_for(const Graph & g, const Variant & v) -> std::vector<Item>;

/// Single coordinate of an item's vector, as a raw value (Distance::inf_raw
/// for infinity). Truncated variants never produce infinity.
auto coordinate(const DistanceMatrix & dm, const Variant & v, const Item & it, Vertex landmark) -> std::uint32_t;

/// Throws UsageError if `it` is an edge under a vertex variant (or vice versa).
auto item_vector(const Graph & g, const DistanceMatrix & dm, const Variant & v, const Item & it, const LandmarkSet & s) -> DistanceVector;

auto distinguishes(const Graph & g, const DistanceMatrix & dm, const Variant & v, Vertex landmark, const ItemPair & pair) -> bool;

/// Pair-coverage view: for each item pair that must be told apart, the set
/// of vertices whose single coordinate separates it.
struct DistinguishMatrix
{
    Variant variant = Variant::metric();
    std::size_t vertex_count = 0;
    std::vector<Item> items;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into items
    std::vector<VertexSet> distinguishers;  // parallel to pairs

    auto pair(std::size_t i) const -> ItemPair { return {items[pairs[i].first], items[pairs[i].second]}; }
};

auto build_distinguish_matrix(const Graph & g, const DistanceMatrix & dm, const Variant & v) -> DistinguishMatrix;

/// Throws UsageError on duplicate or out-of-range landmarks.
auto check_landmarks(const Graph & g, const LandmarkSet & s) -> void;

auto is_resolving(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> Certificate;

/// Every one-landmark deletion must still resolve. Throws UsageError on an empty set.
auto is_fault_tolerant(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> Certificate;

/// |{u != v : dist(u, v) <= radius}|
auto count_within_distance(const DistanceMatrix & dm, Vertex v, std::uint32_t radius) -> std::size_t;

/// |{u : dist(u, v) == radius}|
auto count_at_distance(const DistanceMatrix & dm, Vertex v, std::uint32_t radius) -> std::size_t;

/// Largest degree a member of a resolving set of `size` landmarks can have:
/// 3^(size-1) for metric and truncated(k >= 2), 2^(size-1) for edge,
/// 2^(size-1) + size - 1 for truncated(1). The local variant has no bound.
auto landmark_degree_bound(const Variant & v, std::size_t size) -> std::optional<std::size_t>;

struct LandmarkDegree
{
    Vertex landmark;
    std::size_t degree;
    std::size_t bound;
    bool ok;
};

/// Throws UsageError if `s` does not resolve or the variant has no bound.
auto landmark_degree_report(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> std::vector<LandmarkDegree>;

}
