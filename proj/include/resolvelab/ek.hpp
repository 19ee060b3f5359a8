#pragma once

#include <resolvelab/graph.hpp>
#include <resolvelab/resolve.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace resolvelab {

/// Subsets of {1..ground_k}; bit i-1 of a mask stands for element i.
struct SubsetFamily
{
    unsigned ground_k = 0;
    std::vector<std::uint32_t> members;

    /// Throws UsageError on out-of-range elements or repeated members.
    auto validate() const -> void;

    auto operator==(const SubsetFamily &) const -> bool = default;
};

/// "{}" or "{1,3}".
auto subset_to_string(std::uint32_t mask) -> std::string;
auto family_to_string(const SubsetFamily & f) -> std::string;

struct UnionCollision
{
    std::pair<std::size_t, std::size_t> pair_a;  // member indices
    std::pair<std::size_t, std::size_t> pair_b;
    std::uint32_t shared_union = 0;
};

struct UnionCheck
{
    bool ok = true;
    std::optional<UnionCollision> collision;

    explicit operator bool() const { return ok; }
};

/// Unions over pairs of distinct members must differ. With `strict`, a
/// member paired with itself counts too, so A u B may not equal a member.
auto is_union_distinct(const SubsetFamily & f, bool strict = false) -> UnionCheck;

inline constexpr unsigned max_ek_k = 6;

struct EkResult
{
    unsigned k = 0;
    std::size_t value = 0;
    SubsetFamily witness;  // lexicographically least optimum (members ascending)
};

/// Largest union-distinct family over {1..k}. Every family is scanned for
/// k <= 4; larger k use a branch and bound. Throws UsageError for k = 0 or
/// k > max_ek_k.
auto ek_bruteforce(unsigned k, bool strict = false) -> EkResult;

/// The branch and bound path alone, for any k <= max_ek_k.
auto ek_branch_and_bound(unsigned k, bool strict = false) -> EkResult;

struct FamilyGraph
{
    Graph graph;
    LandmarkSet landmarks;  // u_1..u_k, vertices 0..k-1
    std::vector<Vertex> clique;  // v_1..v_m, vertices k..k+m-1
};

/// u_i adjacent to v_j iff i is in member j; the v_j form a clique.
/// Throws UsageError unless the family is union-distinct.
auto family_to_graph(const SubsetFamily & f) -> FamilyGraph;

/// S_j = {i : dist(v_j, u_i) is least over the clique}. Throws UsageError if
/// `clique` is not a clique or `landmarks` do not edge-resolve `g`, and
/// TheoremViolation if the result is not union-distinct.
auto clique_to_family(const Graph & g, const std::vector<Vertex> & clique, const LandmarkSet & landmarks) -> SubsetFamily;

struct McEkReport
{
    unsigned k = 0;
    std::size_t ek = 0;
    SubsetFamily witness;

    // Witness graph side.
    std::size_t witness_order = 0;
    std::size_t witness_edim = 0;
    std::size_t witness_clique = 0;
    bool construction_ok = false;

    // Exhaustive side: no graph with n <= n_max has edim <= k and clique > ek.
    std::size_t n_max = 0;
    std::size_t graphs_scanned = 0;
    std::size_t large_cliques = 0;  // graphs with clique > ek, whose edim was computed
    std::vector<std::string> counterexamples;  // graph6

    auto ok() const -> bool { return construction_ok && counterexamples.empty(); }
};

/// Both directions of mc(k) = ek(k) at small scale; k <= 3, n_max <= 7.
auto verify_mc_ek(unsigned k, std::size_t n_max) -> McEkReport;

/// One member per line: "-" for the empty set, otherwise "1,3".
auto write_family(std::ostream & out, const SubsetFamily & f) -> void;

/// Reads the format above; '#' comments and blank lines are skipped. The
/// ground set is `ground_k` if given, else the largest element seen.
/// Throws ParseError naming the line.
auto read_family(std::istream & in, std::optional<unsigned> ground_k = std::nullopt) -> SubsetFamily;

}
