#include <resolvelab/clique.hpp>

#include <algorithm>
#include <numeric>

namespace resolvelab {

namespace {
    struct CliqueSearch
    {
        const Graph & graph;
        std::vector<Vertex> order;  // search position -> vertex
        std::vector<VertexSet> adjacency;  // in search positions
        std::vector<std::size_t> current;
        std::vector<std::size_t> best;

        explicit CliqueSearch(const Graph & g) :
            graph(g)
        {
            const auto n = g.order();
            order.resize(n);
            std::iota(order.begin(), order.end(), Vertex{0});
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

            adjacency.assign(n, VertexSet(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (g.adjacent(order[i], order[j]))
                        adjacency[i].set(j);
        }

        // Greedy sequential colouring of p; fills vertices in colour order and
        // the colour bound for each prefix.
        auto colour(const VertexSet & p, std::vector<std::size_t> & vertices, std::vector<std::size_t> & bounds) const -> void
        {
            vertices.clear();
            bounds.clear();
            VertexSet uncoloured = p;
            std::size_t colour_class = 0;
            while (uncoloured.any()) {
                ++colour_class;
                VertexSet candidates = uncoloured;
                while (candidates.any()) {
                    auto v = candidates.find_first();
                    candidates.reset(v);
                    candidates -= adjacency[v];
                    uncoloured.reset(v);
                    vertices.push_back(v);
                    bounds.push_back(colour_class);
                }
            }
        }

        auto expand(VertexSet p) -> void
        {
            std::vector<std::size_t> vertices, bounds;
            colour(p, vertices, bounds);
            for (auto i = vertices.size(); i-- > 0;) {
                if (current.size() + bounds[i] <= best.size())
                    return;
                auto v = vertices[i];
                current.push_back(v);
                VertexSet next = p & adjacency[v];
                if (next.none()) {
                    if (current.size() > best.size())
                        best = current;
                }
                else
                    expand(next);
                current.pop_back();
                p.reset(v);
            }
        }
    };
}

auto maximum_clique(const Graph & g) -> std::vector<Vertex>
{
    if (g.order() == 0)
        return {};
    CliqueSearch search(g);
    VertexSet all(g.order());
    all.set();
    search.expand(all);

    std::vector<Vertex> result;
    for (auto position : search.best)
        result.push_back(search.order[position]);
    std::sort(result.begin(), result.end());
    return result;
}

auto clique_number(const Graph & g) -> std::size_t
{
    return maximum_clique(g).size();
}

auto is_clique(const Graph & g, const std::vector<Vertex> & vertices) -> bool
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.order())
            return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || ! g.adjacent(vertices[i], vertices[j]))
                return false;
    }
    return true;
}

}
