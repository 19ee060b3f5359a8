#include <resolvelab/errors.hpp>
#include <resolvelab/multicover.hpp>

#include <algorithm>
#include <numeric>

namespace resolvelab {

namespace {
    // Indices of the inclusion-minimal rows; with a uniform requirement a
    // superset row is implied by any of its subsets.
    auto minimal_rows(std::span<const VertexSet> rows) -> std::vector<VertexSet>
    {
        std::vector<std::size_t> order(rows.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rows[a].count() < rows[b].count(); });

        std::vector<VertexSet> kept;
        for (auto index : order) {
            const auto & row = rows[index];
            bool implied = std::any_of(kept.begin(), kept.end(), [&](const VertexSet & k) { return k.is_subset_of(row); });
            if (! implied)
                kept.push_back(row);
        }
        return kept;
    }

    class MulticoverSearch
    {
    public:
        MulticoverSearch(std::size_t n, std::vector<VertexSet> rows, unsigned t) :
            _n(n), _rows(std::move(rows)), _t(t), _chosen(n), _excluded(n)
        {
        }

        auto run(VertexSet incumbent) -> VertexSet
        {
            _best = std::move(incumbent);
            _best_count = _best.count();
            search(0);
            return _best;
        }

    private:
        struct Active
        {
            std::size_t row;
            std::size_t residual;
            std::size_t candidates;
        };

        auto search(std::size_t chosen_count) -> void
        {
            std::vector<Active> active;
            std::vector<VertexSet> candidates;
            for (std::size_t r = 0; r < _rows.size(); ++r) {
                const auto covered = (_rows[r] & _chosen).count();
                if (covered >= _t)
                    continue;
                VertexSet cand = _rows[r] - _chosen - _excluded;
                const auto residual = _t - covered;
                const auto available = cand.count();
                if (available < residual)
                    return;
                active.push_back({candidates.size(), residual, available});
                candidates.push_back(std::move(cand));
            }

            if (active.empty()) {
                if (chosen_count < _best_count) {
                    _best = _chosen;
                    _best_count = chosen_count;
                }
                return;
            }

            std::stable_sort(active.begin(), active.end(), [](const Active & a, const Active & b) { return a.candidates < b.candidates; });

            // Rows with pairwise disjoint candidate sets need separate vertices.
            std::size_t lower = 0;
            VertexSet used(_n);
            for (const auto & a : active)
                if (! candidates[a.row].intersects(used)) {
                    lower += a.residual;
                    used |= candidates[a.row];
                }
            if (chosen_count + lower >= _best_count)
                return;

            const auto & branch = active.front();
            const VertexSet branch_candidates = candidates[branch.row];
            std::vector<std::size_t> tried;
            auto remaining = branch.candidates;
            for (auto c = branch_candidates.find_first(); c != VertexSet::npos; c = branch_candidates.find_next(c)) {
                if (remaining < branch.residual)
                    break;
                _chosen.set(c);
                search(chosen_count + 1);
                _chosen.reset(c);
                _excluded.set(c);
                tried.push_back(c);
                --remaining;
                if (chosen_count + 1 >= _best_count)
                    break;
            }
            for (auto c : tried)
                _excluded.reset(c);
        }

        std::size_t _n;
        std::vector<VertexSet> _rows;
        unsigned _t;
        VertexSet _chosen;
        VertexSet _excluded;
        VertexSet _best;
        std::size_t _best_count = 0;
    };
}

auto greedy_multicover(std::size_t n, std::span<const VertexSet> rows, unsigned t) -> VertexSet
{
    VertexSet chosen(n);
    std::vector<std::size_t> residual(rows.size(), t);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].count() < t)
            throw InfeasibleCover(r, "constraint " + std::to_string(r) + " has fewer than " + std::to_string(t) + " elements");

    while (true) {
        std::vector<std::size_t> gain(n, 0);
        bool done = true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (residual[r] == 0)
                continue;
            done = false;
            for (auto v = rows[r].find_first(); v != VertexSet::npos; v = rows[r].find_next(v))
                if (! chosen.test(v))
                    ++gain[v];
        }
        if (done)
            break;
        auto pick = static_cast<std::size_t>(std::max_element(gain.begin(), gain.end()) - gain.begin());
        chosen.set(pick);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (residual[r] > 0 && rows[r].test(pick))
                --residual[r];
    }
    return chosen;
}

auto solve_multicover(std::size_t n, std::span<const VertexSet> rows, unsigned t) -> VertexSet
{
    if (t == 0)
        throw UsageError("cover multiplicity must be positive");
    for (const auto & row : rows)
        if (row.size() != n)
            throw UsageError("constraint width does not match ground set size");

    auto incumbent = greedy_multicover(n, rows, t);
    MulticoverSearch search(n, minimal_rows(rows), t);
    return search.run(std::move(incumbent));
}

auto min_multicover(const DistinguishMatrix & m, unsigned t, bool forbid_empty) -> LandmarkSet
{
    VertexSet chosen;
    try {
        chosen = solve_multicover(m.vertex_count, m.distinguishers, t);
    }
    catch (const InfeasibleCover & e) {
        throw InfeasibleCover(e.row(), "pair " + m.pair(e.row()).to_string() + " has " + std::to_string(m.distinguishers[e.row()].count())
                + " distinguishers, fewer than the required " + std::to_string(t));
    }

    LandmarkSet result;
    for (auto v = chosen.find_first(); v != VertexSet::npos; v = chosen.find_next(v))
        result.push_back(static_cast<Vertex>(v));
    if (result.empty() && forbid_empty && m.vertex_count > 0)
        result.push_back(0);
    return result;
}

}
