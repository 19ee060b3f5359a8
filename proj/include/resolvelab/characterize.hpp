#pragma once

#include <resolvelab/graph.hpp>
#include <resolvelab/variant.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace resolvelab {

/// Order at least 2, at most 2 components, at most one with 2+ vertices, all paths.
auto predicate_dim1(const Graph & g) -> bool;

/// At least 2 edges, components singletons or paths, at most 2 components
/// with an edge, at most one with more than one edge.
auto predicate_edim1(const Graph & g) -> bool;

/// Order 2, or order 3 with an edge and not complete.
auto predicate_adim1(const Graph & g) -> bool;

/// P_i for 2 <= i <= k+2, or P_j plus an isolated vertex for 1 <= j <= k+1.
auto predicate_dimk1(const Graph & g, unsigned k) -> bool;

/// One connected bipartite component with an edge, everything else isolated.
auto predicate_ldim1(const Graph & g) -> bool;

/// The structural xdim = 1 test matching the variant.
auto predicate_xdim1(const Graph & g, const Variant & v) -> bool;

/// Every v has a u != v with N(u)-{v} = N(v)-{u}; under the edge variant u
/// must also share a neighbour with v, under the local variant be adjacent.
auto twin_condition(const Graph & g, const Variant & v) -> bool;

/// Worker threads to use: RESOLVE_LAB_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
auto worker_count() -> unsigned;

/// Calls fn(i) for i in [0, count) across worker_count() threads. The first
/// exception thrown by any call is rethrown after all workers stop.
auto parallel_for(std::size_t count, const std::function<void(std::size_t)> & fn) -> void;

enum class Equivalence
{
    dim1_ft2,      // structure <=> xdim = 1 <=> ftxdim = 2
    ft_equals_n,   // twin condition <=> ftxdim = n
    dim_n_minus_1  // complete or edgeless (local: complete) <=> xdim = n - 1
};

auto equivalence_name(Equivalence e) -> std::string;
auto parse_equivalence(const std::string & text) -> Equivalence;

struct Mismatch
{
    std::string graph6;
    bool structural;
    bool solver;
    std::string detail;
};

struct CharacterizationReport
{
    Variant variant = Variant::metric();
    Equivalence which = Equivalence::dim1_ft2;
    std::size_t n_max = 0;
    std::size_t graphs_checked = 0;
    std::vector<Mismatch> mismatches;  // sorted by graph6

    auto holds() const -> bool { return mismatches.empty(); }
};

/// Checks the equivalence on every labeled graph with 1 <= n <= n_max (n_max <= 6).
auto run_equivalence_suite(std::size_t n_max, const Variant & v, Equivalence which) -> CharacterizationReport;

struct DegreeReport
{
    Variant variant = Variant::metric();
    std::size_t n_max = 0;
    std::size_t graphs_checked = 0;
    std::size_t landmarks_checked = 0;
    std::vector<Mismatch> violations;  // detail names the landmark and degree
};

/// Every landmark of the solver's minimum resolving set stays within
/// landmark_degree_bound, over all labeled graphs with n <= n_max (<= 6).
auto run_degree_suite(std::size_t n_max, const Variant & v) -> DegreeReport;

}
