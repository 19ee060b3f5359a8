#include <resolvelab/errors.hpp>
#include <resolvelab/graph.hpp>

#include <algorithm>
#include <numeric>

namespace resolvelab {

ParseError::ParseError(std::size_t line, const std::string & what) :
    std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
    _line(line)
{
}

auto Distance::to_string() const -> std::string
{
    return is_infinite() ? "inf" : std::to_string(_value);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) :
    _adjacency(n, VertexSet(n))
{
    for (const auto & e : edges) {
        if (e.first == e.second)
            throw UsageError("self-loop at vertex " + std::to_string(e.first));
        if (e.second >= n)
            throw UsageError("edge endpoint " + std::to_string(e.second) + " out of range");
        if (_adjacency[e.first].test(e.second))
            throw UsageError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
        _adjacency[e.first].set(e.second);
        _adjacency[e.second].set(e.first);
        ++_edge_count;
    }
}

auto Graph::max_degree() const -> std::size_t
{
    std::size_t best = 0;
    for (const auto & row : _adjacency)
        best = std::max(best, row.count());
    return best;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = _adjacency[u].find_next(u); v != VertexSet::npos; v = _adjacency[u].find_next(v))
            result.emplace_back(u, static_cast<Vertex>(v));
    return result;
}

GraphBuilder::GraphBuilder(std::size_t n) :
    _adjacency(n, VertexSet(n))
{
}

auto GraphBuilder::add_vertex() -> Vertex
{
    for (auto & row : _adjacency)
        row.push_back(false);
    _adjacency.emplace_back(_adjacency.size() + 1);
    return static_cast<Vertex>(_adjacency.size() - 1);
}

auto GraphBuilder::add_edge(Vertex a, Vertex b) -> void
{
    if (a == b)
        throw UsageError("self-loop at vertex " + std::to_string(a));
    if (a >= order() || b >= order())
        throw UsageError("edge endpoint out of range");
    _adjacency[a].set(b);
    _adjacency[b].set(a);
}

auto GraphBuilder::build() const -> Graph
{
    Graph g;
    g._adjacency = _adjacency;
    std::size_t degree_sum = 0;
    for (const auto & row : _adjacency)
        degree_sum += row.count();
    g._edge_count = degree_sum / 2;
    return g;
}

auto path_graph(std::size_t n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(v - 1, v);
    return b.build();
}

auto cycle_graph(std::size_t n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(v - 1, v);
    if (n >= 3)
        b.add_edge(static_cast<Vertex>(n - 1), 0);
    return b.build();
}

auto complete_graph(std::size_t n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

auto empty_graph(std::size_t n) -> Graph
{
    return GraphBuilder(n).build();
}

auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph
{
    GraphBuilder builder(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            builder.add_edge(u, static_cast<Vertex>(a + v));
    return builder.build();
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    GraphBuilder builder(a.order() + b.order());
    for (const auto & e : a.edges())
        builder.add_edge(e.first, e.second);
    auto shift = static_cast<Vertex>(a.order());
    for (const auto & e : b.edges())
        builder.add_edge(e.first + shift, e.second + shift);
    return builder.build();
}

auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph
{
    GraphBuilder builder(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return builder.build();
}

auto connected_components(const Graph & g) -> std::vector<std::size_t>
{
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> component(g.order(), unset);
    std::vector<Vertex> stack;
    std::size_t next_id = 0;
    for (Vertex start = 0; start < g.order(); ++start) {
        if (component[start] != unset)
            continue;
        component[start] = next_id;
        stack.push_back(start);
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            const auto & row = g.neighbourhood(u);
            for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v))
                if (component[v] == unset) {
                    component[v] = next_id;
                    stack.push_back(static_cast<Vertex>(v));
                }
        }
        ++next_id;
    }
    return component;
}

auto component_count(const Graph & g) -> std::size_t
{
    auto component = connected_components(g);
    return component.empty() ? 0 : *std::max_element(component.begin(), component.end()) + 1;
}

auto is_connected(const Graph & g) -> bool
{
    return component_count(g) <= 1;
}

DistanceMatrix::DistanceMatrix(std::size_t n) :
    _n(n),
    _d(n * n, Distance::inf_raw)
{
}

auto DistanceMatrix::diameter_of_components() const -> std::uint32_t
{
    std::uint32_t best = 0;
    for (auto d : _d)
        if (d != Distance::inf_raw)
            best = std::max(best, d);
    return best;
}

auto all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    const auto n = g.order();
    DistanceMatrix dm(n);
    VertexSet frontier(n), next(n), seen(n);
    for (Vertex source = 0; source < n; ++source) {
        frontier.reset();
        seen.reset();
        frontier.set(source);
        seen.set(source);
        std::uint32_t depth = 0;
        while (frontier.any()) {
            next.reset();
            for (auto u = frontier.find_first(); u != VertexSet::npos; u = frontier.find_next(u)) {
                dm.set(source, static_cast<Vertex>(u), depth);
                next |= g.neighbourhood(static_cast<Vertex>(u));
            }
            next -= seen;
            seen |= next;
            std::swap(frontier, next);
            ++depth;
        }
    }
    return dm;
}

}
