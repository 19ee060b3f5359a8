#include <resolvelab/errors.hpp>
#include <resolvelab/graph_io.hpp>

#include <istream>
#include <sstream>

namespace resolvelab {

namespace {
    constexpr std::size_t max_graph6_order = 62;

    auto strip_comment(std::string line) -> std::string
    {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        return line;
    }

    auto is_blank(const std::string & line) -> bool
    {
        return line.find_first_not_of(" \t\r") == std::string::npos;
    }

    // Exactly two non-negative integers and nothing else.
    auto parse_pair(const std::string & line, std::size_t & a, std::size_t & b) -> bool
    {
        std::istringstream fields(line);
        long long x = -1, y = -1;
        if (! (fields >> x >> y) || x < 0 || y < 0)
            return false;
        std::string rest;
        if (fields >> rest)
            return false;
        a = static_cast<std::size_t>(x);
        b = static_cast<std::size_t>(y);
        return true;
    }
}

auto graph_from_edge_list(std::istream & in) -> Graph
{
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::size_t header_line = 0;
    GraphBuilder builder;
    std::size_t edges_read = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        auto line = strip_comment(raw);
        if (is_blank(line))
            continue;

        std::size_t a = 0, b = 0;
        if (! have_header) {
            if (! parse_pair(line, n, m))
                throw ParseError(line_no, "malformed header, expected \"n m\"");
            have_header = true;
            header_line = line_no;
            builder = GraphBuilder(n);
            continue;
        }

        if (edges_read == m)
            throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
        if (! parse_pair(line, a, b))
            throw ParseError(line_no, "malformed edge, expected \"u v\"");
        if (a >= n || b >= n)
            throw ParseError(line_no, "vertex index out of range for n = " + std::to_string(n));
        if (a == b)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        if (builder.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)))
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        builder.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        ++edges_read;
    }

    if (! have_header)
        throw ParseError(line_no, "missing \"n m\" header");
    if (edges_read != m)
        throw ParseError(header_line, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges_read));
    return builder.build();
}

auto graph_from_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    return graph_from_edge_list(in);
}

auto graph_to_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto & e : g.edges())
        out << e.first << ' ' << e.second << '\n';
    return out.str();
}

auto graph_to_graph6(const Graph & g) -> std::string
{
    const auto n = g.order();
    if (n > max_graph6_order)
        throw UsageError("graph6 short form supports at most 62 vertices");

    std::string result(1, static_cast<char>(63 + n));
    int bits = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                result.push_back(static_cast<char>(63 + bits));
                bits = filled = 0;
            }
        }
    if (filled > 0)
        result.push_back(static_cast<char>(63 + (bits << (6 - filled))));
    return result;
}

auto graph_from_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError(0, "empty graph6 string");

    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError(0, "graph6 byte " + std::to_string(i) + " out of range");
    }

    const auto n = static_cast<std::size_t>(text[0] - 63);
    if (n > max_graph6_order)
        throw ParseError(0, "graph6 long form (n > 62) is not supported");

    const auto pair_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const auto expected = 1 + (pair_count + 5) / 6;
    if (text.size() != expected)
        throw ParseError(0, "graph6 length " + std::to_string(text.size()) + " does not match n = " + std::to_string(n));

    GraphBuilder builder(n);
    std::size_t bit = 0;
    auto next_bit = [&]() -> bool {
        auto byte = text[1 + bit / 6] - 63;
        auto value = (byte >> (5 - bit % 6)) & 1;
        ++bit;
        return value != 0;
    };
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (next_bit())
                builder.add_edge(i, j);
    while (bit % 6 != 0)
        if (next_bit())
            throw ParseError(0, "graph6 padding bits must be zero");
    return builder.build();
}

}
