#include <resolvelab/errors.hpp>
#include <resolvelab/resolve.hpp>

#include <algorithm>
#include <numeric>

namespace resolvelab {

auto Item::to_string() const -> std::string
{
    if (is_edge)
        return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    return std::to_string(a);
}

auto ItemPair::to_string() const -> std::string
{
    return first.to_string() + " / " + second.to_string();
}

auto items_for(const Graph & g, const Variant & v) -> std::vector<Item>
{
    std::vector<Item> items;
    if (v.uses_edges()) {
        for (const auto & e : g.edges())
            items.push_back(Item::edge(e.first, e.second));
    }
    else {
        for (Vertex u = 0; u < g.order(); ++u)
            items.push_back(Item::vertex(u));
    }
    return items;
}

auto coordinate(const DistanceMatrix & dm, const Variant & v, const Item & it, Vertex landmark) -> std::uint32_t
{
    auto d = it.is_edge ? std::min(dm.raw(it.a, landmark), dm.raw(it.b, landmark)) : dm.raw(it.a, landmark);
    if (v.kind() == Variant::Kind::truncated)
        d = std::min(d, v.truncation() + 1);
    return d;
}

namespace {
    auto check_item(const Graph & g, const Variant & v, const Item & it) -> void
    {
        if (it.is_edge != v.uses_edges())
            throw UsageError("item " + it.to_string() + " is not valid under variant " + v.name());
        if (it.a >= g.order() || it.b >= g.order())
            throw UsageError("item " + it.to_string() + " out of range");
        if (it.is_edge && ! g.adjacent(it.a, it.b))
            throw UsageError("item " + it.to_string() + " is not an edge");
    }

    // Row-major table: coordinate of items[i] w.r.t. landmark s[j].
    auto coordinate_table(const DistanceMatrix & dm, const Variant & v, const std::vector<Item> & items, const LandmarkSet & s)
        -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> table(items.size() * s.size());
        for (std::size_t i = 0; i < items.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                table[i * s.size() + j] = coordinate(dm, v, items[i], s[j]);
        return table;
    }

    // First colliding pair of items under the landmark columns selected by
    // `use`, or nullopt. The local variant only compares adjacent vertices.
    auto find_collision(const Graph & g, const Variant & v, const std::vector<Item> & items,
        const std::vector<std::uint32_t> & table, std::size_t width, const std::vector<bool> & use) -> std::optional<ItemPair>
    {
        auto same = [&](std::size_t x, std::size_t y) {
            for (std::size_t j = 0; j < width; ++j)
                if (use[j] && table[x * width + j] != table[y * width + j])
                    return false;
            return true;
        };
        auto less = [&](std::size_t x, std::size_t y) {
            for (std::size_t j = 0; j < width; ++j)
                if (use[j] && table[x * width + j] != table[y * width + j])
                    return table[x * width + j] < table[y * width + j];
            return x < y;
        };

        if (v.kind() == Variant::Kind::local) {
            for (const auto & e : g.edges())
                if (same(e.first, e.second))
                    return ItemPair{items[e.first], items[e.second]};
            return std::nullopt;
        }

        std::vector<std::size_t> order(items.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), less);
        for (std::size_t i = 1; i < order.size(); ++i)
            if (same(order[i - 1], order[i]))
                return ItemPair{items[std::min(order[i - 1], order[i])], items[std::max(order[i - 1], order[i])]};
        return std::nullopt;
    }
}

auto item_vector(const Graph & g, const DistanceMatrix & dm, const Variant & v, const Item & it, const LandmarkSet & s) -> DistanceVector
{
    check_item(g, v, it);
    check_landmarks(g, s);
    DistanceVector result;
    result.reserve(s.size());
    for (auto landmark : s)
        result.emplace_back(coordinate(dm, v, it, landmark));
    return result;
}

auto distinguishes(const Graph & g, const DistanceMatrix & dm, const Variant & v, Vertex landmark, const ItemPair & pair) -> bool
{
    check_item(g, v, pair.first);
    check_item(g, v, pair.second);
    if (landmark >= g.order())
        throw UsageError("landmark out of range");
    return coordinate(dm, v, pair.first, landmark) != coordinate(dm, v, pair.second, landmark);
}

auto build_distinguish_matrix(const Graph & g, const DistanceMatrix & dm, const Variant & v) -> DistinguishMatrix
{
    DistinguishMatrix m;
    m.variant = v;
    m.vertex_count = g.order();
    m.items = items_for(g, v);

    const auto n = g.order();
    LandmarkSet everything(n);
    std::iota(everything.begin(), everything.end(), Vertex{0});
    auto table = coordinate_table(dm, v, m.items, everything);

    auto add_pair = [&](std::size_t x, std::size_t y) {
        VertexSet row(n);
        for (std::size_t w = 0; w < n; ++w)
            if (table[x * n + w] != table[y * n + w])
                row.set(w);
        m.pairs.emplace_back(x, y);
        m.distinguishers.push_back(std::move(row));
    };

    if (v.kind() == Variant::Kind::local) {
        for (const auto & e : g.edges())
            add_pair(e.first, e.second);
    }
    else {
        for (std::size_t x = 0; x < m.items.size(); ++x)
            for (std::size_t y = x + 1; y < m.items.size(); ++y)
                add_pair(x, y);
    }
    return m;
}

auto check_landmarks(const Graph & g, const LandmarkSet & s) -> void
{
    VertexSet seen(g.order());
    for (auto landmark : s) {
        if (landmark >= g.order())
            throw UsageError("landmark " + std::to_string(landmark) + " out of range for order " + std::to_string(g.order()));
        if (seen.test(landmark))
            throw UsageError("landmark " + std::to_string(landmark) + " listed twice");
        seen.set(landmark);
    }
}

auto is_resolving(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> Certificate
{
    check_landmarks(g, s);
    auto items = items_for(g, v);
    auto table = coordinate_table(dm, v, items, s);
    std::vector<bool> use(s.size(), true);
    if (auto collision = find_collision(g, v, items, table, s.size(), use))
        return Certificate{false, std::nullopt, collision};
    return {};
}

auto is_fault_tolerant(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> Certificate
{
    if (s.empty())
        throw UsageError("a fault-tolerant set must be nonempty");
    check_landmarks(g, s);
    auto items = items_for(g, v);
    auto table = coordinate_table(dm, v, items, s);
    std::vector<bool> use(s.size(), true);
    for (std::size_t j = 0; j < s.size(); ++j) {
        use[j] = false;
        if (auto collision = find_collision(g, v, items, table, s.size(), use))
            return Certificate{false, s[j], collision};
        use[j] = true;
    }
    return {};
}

auto count_within_distance(const DistanceMatrix & dm, Vertex v, std::uint32_t radius) -> std::size_t
{
    std::size_t count = 0;
    for (Vertex u = 0; u < dm.order(); ++u)
        if (u != v && dm.raw(u, v) <= radius)
            ++count;
    return count;
}

auto count_at_distance(const DistanceMatrix & dm, Vertex v, std::uint32_t radius) -> std::size_t
{
    std::size_t count = 0;
    for (Vertex u = 0; u < dm.order(); ++u)
        if (dm.raw(u, v) == radius)
            ++count;
    return count;
}

auto landmark_degree_bound(const Variant & v, std::size_t size) -> std::optional<std::size_t>
{
    if (size == 0)
        return 0;
    auto power = [](std::size_t base, std::size_t exponent) {
        std::size_t result = 1;
        while (exponent-- > 0)
            result *= base;
        return result;
    };
    switch (v.kind()) {
        case Variant::Kind::vertex_metric: return power(3, size - 1);
        case Variant::Kind::edge_metric: return power(2, size - 1);
        case Variant::Kind::truncated:
            if (v.truncation() == 1)
                return power(2, size - 1) + size - 1;
            return power(3, size - 1);
        case Variant::Kind::local: return std::nullopt;
    }
    return std::nullopt;
}

auto landmark_degree_report(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> std::vector<LandmarkDegree>
{
    auto bound = landmark_degree_bound(v, s.size());
    if (! bound)
        throw UsageError("no landmark degree bound exists for variant " + v.name());
    if (! is_resolving(g, dm, v, s))
        throw UsageError("landmark set does not resolve under " + v.name());

    std::vector<LandmarkDegree> report;
    for (auto landmark : s) {
        auto degree = g.degree(landmark);
        report.push_back({landmark, degree, *bound, degree <= *bound});
    }
    return report;
}

}
