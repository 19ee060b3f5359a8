#pragma once

#include <resolvelab/graph.hpp>
#include <resolvelab/resolve.hpp>

#include <span>
#include <stdexcept>
#include <string>

namespace resolvelab {

/// Some constraint has fewer than t elements in the whole ground set.
class InfeasibleCover : public std::runtime_error
{
public:
    InfeasibleCover(std::size_t row, const std::string & what) : std::runtime_error(what), _row(row) {}

    auto row() const -> std::size_t { return _row; }

private:
    std::size_t _row;
};

/// Minimum X subset of {0..n-1} with |X & row| >= t for every row.
///
/// Branch and bound: branch on the row with the fewest remaining
/// candidates, candidates tried in increasing index; the greedy solution is
/// the initial incumbent and a disjoint-rows packing gives the lower bound.
/// The result is deterministic. Throws InfeasibleCover naming the first
/// short row, UsageError for t == 0.
auto solve_multicover(std::size_t n, std::span<const VertexSet> rows, unsigned t) -> VertexSet;

/// Greedy t-multicover (the solver's incumbent); not minimum in general.
auto greedy_multicover(std::size_t n, std::span<const VertexSet> rows, unsigned t) -> VertexSet;

/// solve_multicover over a distinguish matrix. With no pairs the answer is
/// empty, or one vertex if `forbid_empty` (empty again on the 0-vertex graph).
/// InfeasibleCover messages name the item pair.
auto min_multicover(const DistinguishMatrix & m, unsigned t, bool forbid_empty) -> LandmarkSet;

}
