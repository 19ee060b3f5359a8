#include <resolvelab/errors.hpp>
#include <resolvelab/variant.hpp>

#include <charconv>

namespace resolvelab {

auto Variant::truncated(unsigned k) -> Variant
{
    if (k == 0)
        throw UsageError("truncation parameter must be positive");
    return Variant{Kind::truncated, k};
}

auto Variant::parse(std::string_view text) -> Variant
{
    if (text == "metric")
        return metric();
    if (text == "edge")
        return edge();
    if (text == "local")
        return local();
    if (text == "adjacency")
        return adjacency();
    if (text.starts_with("trunc=")) {
        auto digits = text.substr(6);
        unsigned k = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && end == digits.data() + digits.size() && k > 0)
            return truncated(k);
    }
    throw UsageError("unknown variant '" + std::string(text) + "' (expected metric|edge|local|adjacency|trunc=K)");
}

auto Variant::name() const -> std::string
{
    switch (_kind) {
        case Kind::vertex_metric: return "metric";
        case Kind::edge_metric: return "edge";
        case Kind::truncated: return "trunc=" + std::to_string(_k);
        case Kind::local: return "local";
    }
    return "?";
}

}
