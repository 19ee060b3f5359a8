#include <resolvelab/enumerate.hpp>
#include <resolvelab/errors.hpp>

namespace resolvelab {

auto labeled_graph_count(std::size_t n) -> std::uint64_t
{
    return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

auto labeled_graph(std::size_t n, std::uint64_t code) -> Graph
{
    GraphBuilder builder(n);
    unsigned bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
            if ((code >> bit) & 1)
                builder.add_edge(i, j);
    return builder.build();
}

LabeledGraphs::LabeledGraphs(std::size_t n) :
    _n(n)
{
    if (n > max_enumeration_order)
        throw UsageError("labeled enumeration is limited to n <= 7 (2^21 graphs); got n = " + std::to_string(n));
    _count = labeled_graph_count(n);
}

}
