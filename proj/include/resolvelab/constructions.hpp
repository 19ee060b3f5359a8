#pragma once

#include <resolvelab/graph.hpp>
#include <resolvelab/resolve.hpp>
#include <resolvelab/variant.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace resolvelab {

/// What a vertex of a generated graph stands for.
struct Role
{
    enum class Kind
    {
        center,
        leaf,
        s,
        r,
        u,
        lattice
    };

    Kind kind = Kind::center;
    std::string leaf;         // digit string for leaves
    unsigned index = 0;       // 1-based, for s_i, r_i, u_i
    std::vector<int> coords;  // lattice points

    /// "c", "leaf 02", "s1", "r2", "u3", "(1,0,2)".
    auto to_string() const -> std::string;
};

struct LabeledFamily
{
    Graph graph;
    Variant variant = Variant::metric();
    /// Resolves `graph` under `variant`. Empty for plain lattice boxes.
    LandmarkSet designated_landmarks;
    std::vector<Role> labels;  // one per vertex

    /// Vertex whose label prints as `text`; throws UsageError if none.
    auto vertex(std::string_view text) const -> Vertex;
};

/// Star with ternary-labelled leaves plus s_i / r_i. Vertex order: center,
/// surviving leaves in lexicographic order, s_1..s_k, r_1..r_k.
auto build_J(unsigned k) -> LabeledFamily;

/// Star with binary-labelled leaves plus u_i adjacent to the leaves with 0
/// in digit i. Vertex order: center, leaves lexicographic, u_1..u_k.
auto build_H(unsigned k) -> LabeledFamily;

/// H_k with the u_i made a clique, minus every vertex whose adjacency vector
/// matches the center's.
auto build_A(unsigned k) -> LabeledFamily;

/// King-move lattice on the box [lo, hi], points in lexicographic order.
auto build_D_box(unsigned k, const std::vector<int> & lo, const std::vector<int> & hi) -> LabeledFamily;

/// King-move lattice on [q,3q]^k plus the landmark spikes. Landmark i has
/// coordinate i equal to 0. Throws ConstructionError if some vertex's
/// distances to the landmarks differ from its coordinates.
auto build_I(unsigned k, unsigned q) -> LabeledFamily;

/// `g` plus r new vertices hanging off v.
auto pendant_extend(const Graph & g, Vertex v, unsigned r) -> Graph;

/// Fault-tolerant sets grown from a resolving set S: S plus N(S) plus the
/// single partner each landmark leaves unresolved. Throws UsageError if S
/// does not resolve or g has fewer than 2 vertices, TheoremViolation if a
/// landmark leaves more than one partner.
auto ft_construct_metric(const Graph & g, const LandmarkSet & s) -> LandmarkSet;
auto ft_construct_edge(const Graph & g, const LandmarkSet & s) -> LandmarkSet;
auto ft_construct_truncated(const Graph & g, unsigned k, const LandmarkSet & s) -> LandmarkSet;

/// Dispatch on the variant (metric, edge or truncated).
auto ft_construct(const Graph & g, const Variant & v, const LandmarkSet & s) -> LandmarkSet;

/// Size promised for ft_construct output from a resolving set of `size`
/// landmarks: size(2+3^(size-1)), or size(1+2^size) for edges.
auto ft_construct_bound(const Variant & v, std::size_t size) -> std::size_t;

}
