#pragma once

#include <resolvelab/graph.hpp>
#include <resolvelab/resolve.hpp>
#include <resolvelab/variant.hpp>

namespace resolvelab {

struct DimensionResult
{
    std::size_t dimension = 0;
    LandmarkSet witness;
    /// Set only for fault tolerance on the 0-vertex graph, where no nonempty set exists.
    bool no_nonempty_set = false;
};

/// Exact xdim(G); dimension 0 with an empty witness when nothing needs resolving.
auto min_resolving(const Graph & g, const DistanceMatrix & dm, const Variant & v) -> DimensionResult;
auto min_resolving(const Graph & g, const Variant & v) -> DimensionResult;

/// Exact ftxdim(G): a minimum nonempty set covering every pair twice.
auto min_fault_tolerant(const Graph & g, const DistanceMatrix & dm, const Variant & v) -> DimensionResult;
auto min_fault_tolerant(const Graph & g, const Variant & v) -> DimensionResult;

/// k-metric dimension under a variant: every pair separated by at least
/// `multiplicity` landmarks. multiplicity 1 is xdim, 2 is ftxdim.
auto min_k_metric(const Graph & g, const DistanceMatrix & dm, const Variant & v, unsigned multiplicity) -> DimensionResult;

}
