#pragma once

#include <resolvelab/graph.hpp>

#include <cstdint>
#include <iterator>

namespace resolvelab {

inline constexpr std::size_t max_enumeration_order = 7;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
auto labeled_graph_count(std::size_t n) -> std::uint64_t;

/// The labeled graph whose edge indicator bits are `code`, vertex pairs
/// ordered as in graph6: (0,1), (0,2), (1,2), (0,3), ...
auto labeled_graph(std::size_t n, std::uint64_t code) -> Graph;

/// Every labeled graph on n vertices exactly once, in code order.
/// Construction throws UsageError for n > 7.
class LabeledGraphs
{
public:
    explicit LabeledGraphs(std::size_t n);

    class iterator
    {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        using pointer = const Graph *;
        using reference = const Graph &;

        iterator() = default;
        iterator(std::size_t n, std::uint64_t code) : _n(n), _code(code) {}

        auto operator*() const -> Graph { return labeled_graph(_n, _code); }
        auto operator++() -> iterator & { ++_code; return *this; }
        auto operator++(int) -> iterator { auto old = *this; ++_code; return old; }
        auto operator==(const iterator & other) const -> bool { return _code == other._code; }

        auto code() const -> std::uint64_t { return _code; }

    private:
        std::size_t _n = 0;
        std::uint64_t _code = 0;
    };

    auto begin() const -> iterator { return {_n, 0}; }
    auto end() const -> iterator { return {_n, _count}; }
    auto size() const -> std::uint64_t { return _count; }

private:
    std::size_t _n;
    std::uint64_t _count;
};

inline auto enumerate_labeled_graphs(std::size_t n) -> LabeledGraphs
{
    return LabeledGraphs(n);
}

}
