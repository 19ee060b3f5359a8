#include <resolvelab/characterize.hpp>
#include <resolvelab/dimension.hpp>
#include <resolvelab/enumerate.hpp>
#include <resolvelab/errors.hpp>
#include <resolvelab/graph_io.hpp>
#include <resolvelab/resolve.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <queue>
#include <thread>

namespace resolvelab {

namespace {
    struct Component
    {
        std::size_t vertices = 0;
        std::size_t edges = 0;
        std::size_t max_degree = 0;
        bool bipartite = true;

        auto is_path() const -> bool { return edges + 1 == vertices && max_degree <= 2; }
    };

    auto components_of(const Graph & g) -> std::vector<Component>
    {
        const auto ids = connected_components(g);
        std::size_t count = 0;
        for (auto id : ids)
            count = std::max(count, id + 1);
        std::vector<Component> result(count);
        for (Vertex v = 0; v < g.order(); ++v) {
            auto & c = result[ids[v]];
            ++c.vertices;
            c.edges += g.degree(v);
            c.max_degree = std::max(c.max_degree, g.degree(v));
        }
        for (auto & c : result)
            c.edges /= 2;

        std::vector<int> side(g.order(), -1);
        for (Vertex start = 0; start < g.order(); ++start) {
            if (side[start] != -1)
                continue;
            side[start] = 0;
            std::queue<Vertex> queue;
            queue.push(start);
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop();
                const auto & around = g.neighbourhood(v);
                for (auto w = around.find_first(); w != VertexSet::npos; w = around.find_next(w)) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        queue.push(static_cast<Vertex>(w));
                    }
                    else if (side[w] == side[v])
                        result[ids[v]].bipartite = false;
                }
            }
        }
        return result;
    }

    auto twins(const Graph & g, Vertex u, Vertex v) -> bool
    {
        auto a = g.neighbourhood(u);
        auto b = g.neighbourhood(v);
        a.reset(v);
        b.reset(u);
        return a == b;
    }

    auto is_complete(const Graph & g) -> bool
    {
        const auto n = g.order();
        return g.size() == n * (n - (n > 0)) / 2;
    }
}

auto predicate_dim1(const Graph & g) -> bool
{
    if (g.order() < 2)
        return false;
    auto parts = components_of(g);
    auto big = std::count_if(parts.begin(), parts.end(), [](const Component & c) { return c.vertices >= 2; });
    return parts.size() <= 2 && big <= 1 && std::all_of(parts.begin(), parts.end(), [](const Component & c) { return c.is_path(); });
}

auto predicate_edim1(const Graph & g) -> bool
{
    if (g.size() < 2)
        return false;
    auto parts = components_of(g);
    auto edged = std::count_if(parts.begin(), parts.end(), [](const Component & c) { return c.edges >= 1; });
    auto multi = std::count_if(parts.begin(), parts.end(), [](const Component & c) { return c.edges >= 2; });
    return std::all_of(parts.begin(), parts.end(), [](const Component & c) { return c.is_path(); }) && edged <= 2 && multi <= 1;
}

auto predicate_adim1(const Graph & g) -> bool
{
    if (g.order() == 2)
        return true;
    return g.order() == 3 && g.size() >= 1 && ! is_complete(g);
}

auto predicate_dimk1(const Graph & g, unsigned k) -> bool
{
    auto parts = components_of(g);
    const auto n = g.order();
    if (parts.size() == 1)
        return parts[0].is_path() && n >= 2 && n <= k + 2;
    if (parts.size() == 2) {
        auto single = std::find_if(parts.begin(), parts.end(), [](const Component & c) { return c.vertices == 1; });
        if (single == parts.end())
            return false;
        const auto & other = parts[single == parts.begin() ? 1 : 0];
        return other.is_path() && other.vertices <= k + 1;
    }
    return false;
}

auto predicate_ldim1(const Graph & g) -> bool
{
    auto parts = components_of(g);
    std::size_t edged = 0;
    for (const auto & c : parts)
        if (c.edges >= 1) {
            ++edged;
            if (! c.bipartite)
                return false;
        }
    return edged == 1;
}

auto predicate_xdim1(const Graph & g, const Variant & v) -> bool
{
    switch (v.kind()) {
    case Variant::Kind::vertex_metric:
        return predicate_dim1(g);
    case Variant::Kind::edge_metric:
        return predicate_edim1(g);
    case Variant::Kind::truncated:
        return v.truncation() == 1 ? predicate_adim1(g) : predicate_dimk1(g, v.truncation());
    case Variant::Kind::local:
        return predicate_ldim1(g);
    }
    return false;
}

auto twin_condition(const Graph & g, const Variant & v) -> bool
{
    for (Vertex x = 0; x < g.order(); ++x) {
        bool found = false;
        for (Vertex u = 0; u < g.order() && ! found; ++u) {
            if (u == x || ! twins(g, x, u))
                continue;
            if (v.kind() == Variant::Kind::edge_metric)
                found = g.neighbourhood(x).intersects(g.neighbourhood(u));
            else if (v.kind() == Variant::Kind::local)
                found = g.adjacent(x, u);
            else
                found = true;
        }
        if (! found)
            return false;
    }
    return true;
}

auto worker_count() -> unsigned
{
    if (const char * text = std::getenv("RESOLVE_LAB_THREADS")) {
        char * end = nullptr;
        auto value = std::strtol(text, &end, 10);
        if (end != text && *end == '\0' && value > 0)
            return static_cast<unsigned>(std::min<long>(value, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

auto parallel_for(std::size_t count, const std::function<void(std::size_t)> & fn) -> void
{
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            while (! failed) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    break;
                try {
                    fn(i);
                }
                catch (...) {
                    std::lock_guard lock(error_lock);
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        });
    threads.clear();
    if (error)
        std::rethrow_exception(error);
}

auto equivalence_name(Equivalence e) -> std::string
{
    switch (e) {
    case Equivalence::dim1_ft2:
        return "DIM1_FT2";
    case Equivalence::ft_equals_n:
        return "FT_EQUALS_N";
    case Equivalence::dim_n_minus_1:
        return "DIM_N_MINUS_1";
    }
    return {};
}

auto parse_equivalence(const std::string & text) -> Equivalence
{
    for (auto e : {Equivalence::dim1_ft2, Equivalence::ft_equals_n, Equivalence::dim_n_minus_1})
        if (equivalence_name(e) == text)
            return e;
    throw UsageError("unknown equivalence " + text);
}

namespace {
    auto check_graph(const Graph & g, const Variant & v, Equivalence which) -> std::optional<Mismatch>
    {
        auto dm = all_pairs_distances(g);
        const auto n = g.order();
        switch (which) {
        case Equivalence::dim1_ft2: {
            bool structural = predicate_xdim1(g, v);
            auto xdim = min_resolving(g, dm, v).dimension;
            auto ft = min_fault_tolerant(g, dm, v).dimension;
            if (structural == (xdim == 1) && structural == (ft == 2))
                return std::nullopt;
            return Mismatch{graph_to_graph6(g), structural, ft == 2,
                "xdim = " + std::to_string(xdim) + ", ftxdim = " + std::to_string(ft)};
        }
        case Equivalence::ft_equals_n: {
            bool structural = twin_condition(g, v);
            auto ft = min_fault_tolerant(g, dm, v).dimension;
            if (structural == (ft == n))
                return std::nullopt;
            return Mismatch{graph_to_graph6(g), structural, ft == n, "n = " + std::to_string(n) + ", ftxdim = " + std::to_string(ft)};
        }
        case Equivalence::dim_n_minus_1: {
            bool structural = is_complete(g) || (v.kind() == Variant::Kind::vertex_metric && g.size() == 0);
            auto xdim = min_resolving(g, dm, v).dimension;
            if (structural == (xdim + 1 == n))
                return std::nullopt;
            return Mismatch{graph_to_graph6(g), structural, xdim + 1 == n, "n = " + std::to_string(n) + ", xdim = " + std::to_string(xdim)};
        }
        }
        return std::nullopt;
    }

    auto check_range(std::size_t n_max) -> void
    {
        if (n_max > 6)
            throw UsageError("suites run up to 6 vertices, got " + std::to_string(n_max));
    }

    auto by_graph6(const Mismatch & a, const Mismatch & b) -> bool
    {
        return std::pair{a.graph6.size(), a.graph6} < std::pair{b.graph6.size(), b.graph6};
    }
}

auto run_equivalence_suite(std::size_t n_max, const Variant & v, Equivalence which) -> CharacterizationReport
{
    check_range(n_max);
    if (which == Equivalence::dim_n_minus_1 && v.kind() != Variant::Kind::vertex_metric && v.kind() != Variant::Kind::local)
        throw UsageError("DIM_N_MINUS_1 is only stated for the metric and local variants");
    CharacterizationReport report;
    report.variant = v;
    report.which = which;
    report.n_max = n_max;

    std::mutex lock;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto count = labeled_graph_count(n);
        parallel_for(count, [&](std::size_t code) {
            auto found = check_graph(labeled_graph(n, code), v, which);
            if (found) {
                std::lock_guard guard(lock);
                report.mismatches.push_back(std::move(*found));
            }
        });
        report.graphs_checked += count;
    }
    std::sort(report.mismatches.begin(), report.mismatches.end(), by_graph6);
    return report;
}

auto run_degree_suite(std::size_t n_max, const Variant & v) -> DegreeReport
{
    check_range(n_max);
    if (v.kind() == Variant::Kind::local)
        throw UsageError("the local variant has no landmark degree bound");
    DegreeReport report;
    report.variant = v;
    report.n_max = n_max;

    std::mutex lock;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto count = labeled_graph_count(n);
        parallel_for(count, [&](std::size_t code) {
            auto g = labeled_graph(n, code);
            auto dm = all_pairs_distances(g);
            auto basis = min_resolving(g, dm, v).witness;
            std::vector<Mismatch> bad;
            if (! basis.empty())
                for (const auto & d : landmark_degree_report(g, dm, v, basis))
                    if (! d.ok)
                        bad.push_back({graph_to_graph6(g), false, true,
                            "landmark " + std::to_string(d.landmark) + " has degree " + std::to_string(d.degree) + " > " + std::to_string(d.bound)});
            std::lock_guard guard(lock);
            report.landmarks_checked += basis.size();
            for (auto & m : bad)
                report.violations.push_back(std::move(m));
        });
        report.graphs_checked += count;
    }
    std::sort(report.violations.begin(), report.violations.end(), by_graph6);
    return report;
}

}
