#include <resolvelab/dimension.hpp>
#include <resolvelab/multicover.hpp>

namespace resolvelab {

auto min_k_metric(const Graph & g, const DistanceMatrix & dm, const Variant & v, unsigned multiplicity) -> DimensionResult
{
    const bool nonempty = multiplicity >= 2;
    auto matrix = build_distinguish_matrix(g, dm, v);
    DimensionResult result;
    result.witness = min_multicover(matrix, multiplicity, nonempty);
    result.dimension = result.witness.size();
    result.no_nonempty_set = nonempty && g.order() == 0;
    return result;
}

auto min_resolving(const Graph & g, const DistanceMatrix & dm, const Variant & v) -> DimensionResult
{
    return min_k_metric(g, dm, v, 1);
}

auto min_resolving(const Graph & g, const Variant & v) -> DimensionResult
{
    return min_resolving(g, all_pairs_distances(g), v);
}

auto min_fault_tolerant(const Graph & g, const DistanceMatrix & dm, const Variant & v) -> DimensionResult
{
    return min_k_metric(g, dm, v, 2);
}

auto min_fault_tolerant(const Graph & g, const Variant & v) -> DimensionResult
{
    return min_fault_tolerant(g, all_pairs_distances(g), v);
}

}
