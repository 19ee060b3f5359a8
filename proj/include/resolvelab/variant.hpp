#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace resolvelab {

/// Which resolving notion is in force.
///
/// Truncation at k caps every distance at k+1 (infinity included), so
/// truncated(1) is the adjacency dimension. The local variant only has to
/// separate adjacent vertices.
class Variant
{
public:
    enum class Kind
    {
        vertex_metric,
        edge_metric,
        truncated,
        local
    };

    static auto metric() -> Variant { return Variant{Kind::vertex_metric, 0}; }
    static auto edge() -> Variant { return Variant{Kind::edge_metric, 0}; }
    static auto truncated(unsigned k) -> Variant;
    static auto adjacency() -> Variant { return truncated(1); }
    static auto local() -> Variant { return Variant{Kind::local, 0}; }

    /// "metric", "edge", "local", "adjacency" or "trunc=K"; throws UsageError otherwise.
    static auto parse(std::string_view text) -> Variant;

    auto kind() const -> Kind { return _kind; }
    auto truncation() const -> unsigned { return _k; }
    auto uses_edges() const -> bool { return _kind == Kind::edge_metric; }

    auto name() const -> std::string;

    auto operator<=>(const Variant &) const = default;

private:
    Variant(Kind kind, unsigned k) : _kind(kind), _k(k) {}

    Kind _kind;
    unsigned _k;
};

}
