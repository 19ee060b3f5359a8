#include <resolvelab/constructions.hpp>
#include <resolvelab/errors.hpp>

#include <algorithm>
#include <map>

namespace resolvelab {

namespace {
    constexpr unsigned max_star_k = 9;

    auto digit_strings(unsigned k, unsigned base) -> std::vector<std::string>
    {
        std::vector<std::string> result{""};
        for (unsigned i = 0; i < k; ++i) {
            std::vector<std::string> next;
            for (const auto & prefix : result)
                for (unsigned d = 0; d < base; ++d)
                    next.push_back(prefix + static_cast<char>('0' + d));
            result = std::move(next);
        }
        return result;
    }

    auto indexed(Role::Kind kind, unsigned i) -> Role
    {
        Role r;
        r.kind = kind;
        r.index = i;
        return r;
    }

    auto leaf_role(std::string digits) -> Role
    {
        Role r;
        r.kind = Role::Kind::leaf;
        r.leaf = std::move(digits);
        return r;
    }

    auto check_k(unsigned k) -> void
    {
        if (k == 0)
            throw UsageError("k must be positive");
        if (k > max_star_k)
            throw UsageError("k = " + std::to_string(k) + " is too large (at most " + std::to_string(max_star_k) + ")");
    }

    auto lattice_family(std::vector<std::vector<int>> points, unsigned k) -> LabeledFamily
    {
        std::sort(points.begin(), points.end());
        std::map<std::vector<int>, Vertex> index;
        for (Vertex v = 0; v < points.size(); ++v)
            index.emplace(points[v], v);

        GraphBuilder b(points.size());
        std::vector<int> offset(k, -1);
        for (Vertex v = 0; v < points.size(); ++v) {
            std::fill(offset.begin(), offset.end(), -1);
            while (true) {
                auto q = points[v];
                for (unsigned i = 0; i < k; ++i)
                    q[i] += offset[i];
                if (auto it = index.find(q); it != index.end() && it->second > v)
                    b.add_edge(v, it->second);
                unsigned i = 0;
                while (i < k && offset[i] == 1)
                    offset[i++] = -1;
                if (i == k)
                    break;
                ++offset[i];
            }
        }

        LabeledFamily f;
        f.graph = b.build();
        for (auto & p : points) {
            Role r;
            r.kind = Role::Kind::lattice;
            r.coords = std::move(p);
            f.labels.push_back(std::move(r));
        }
        return f;
    }

    auto closed_landmarks(const Graph & g, const LandmarkSet & s) -> VertexSet
    {
        VertexSet result(g.order());
        for (auto x : s) {
            result.set(x);
            result |= g.neighbourhood(x);
        }
        return result;
    }

    auto to_landmarks(const VertexSet & set) -> LandmarkSet
    {
        LandmarkSet result;
        for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
            result.push_back(static_cast<Vertex>(v));
        return result;
    }

    auto require_resolving(const Graph & g, const DistanceMatrix & dm, const Variant & v, const LandmarkSet & s) -> void
    {
        if (g.order() < 2)
            throw UsageError("graph must have at least 2 vertices");
        check_landmarks(g, s);
        auto cert = is_resolving(g, dm, v, s);
        if (! cert)
            throw UsageError("set does not resolve under " + v.name() + ": " + cert.unresolved->to_string());
    }

    // Vertex variants: S' plus, per landmark s, the vertex S'-{s} cannot tell from s.
    auto ft_construct_vertices(const Graph & g, const Variant & v, const LandmarkSet & s) -> LandmarkSet
    {
        auto dm = all_pairs_distances(g);
        require_resolving(g, dm, v, s);

        const auto closed = closed_landmarks(g, s);
        auto result = closed;
        for (auto landmark : s) {
            auto t = closed;
            t.reset(landmark);
            auto ts = to_landmarks(t);
            auto home = item_vector(g, dm, v, Item::vertex(landmark), ts);

            std::vector<Vertex> partners;
            for (Vertex u = 0; u < g.order(); ++u)
                if (u != landmark && item_vector(g, dm, v, Item::vertex(u), ts) == home)
                    partners.push_back(u);
            if (partners.size() > 1)
                throw TheoremViolation("landmark " + std::to_string(landmark) + " is unresolved from " + std::to_string(partners.size())
                        + " vertices after removal, expected at most one");
            if (! partners.empty())
                result.set(partners.front());
        }
        return to_landmarks(result);
    }
}

auto Role::to_string() const -> std::string
{
    switch (kind) {
    case Kind::center:
        return "c";
    case Kind::leaf:
        return "leaf " + leaf;
    case Kind::s:
        return "s" + std::to_string(index);
    case Kind::r:
        return "r" + std::to_string(index);
    case Kind::u:
        return "u" + std::to_string(index);
    case Kind::lattice: {
        std::string text = "(";
        for (std::size_t i = 0; i < coords.size(); ++i)
            text += (i ? "," : "") + std::to_string(coords[i]);
        return text + ")";
    }
    }
    return {};
}

auto LabeledFamily::vertex(std::string_view text) const -> Vertex
{
    for (Vertex v = 0; v < labels.size(); ++v)
        if (labels[v].to_string() == text)
            return v;
    throw UsageError("no vertex labelled " + std::string(text));
}

auto build_J(unsigned k) -> LabeledFamily
{
    check_k(k);
    std::vector<std::string> leaves;
    for (auto & digits : digit_strings(k, 3)) {
        auto zeros = std::count(digits.begin(), digits.end(), '0');
        auto ones = std::count(digits.begin(), digits.end(), '1');
        bool all_ones = ones == static_cast<long>(k);
        bool one_zero_rest_ones = zeros == 1 && ones == static_cast<long>(k) - 1;
        if (! all_ones && ! one_zero_rest_ones)
            leaves.push_back(std::move(digits));
    }

    const auto leaf_count = static_cast<Vertex>(leaves.size());
    const Vertex first_s = 1 + leaf_count;
    const Vertex first_r = first_s + k;
    GraphBuilder b(first_r + k);
    LabeledFamily f;
    f.variant = Variant::metric();
    f.labels.push_back(Role{});

    for (Vertex l = 0; l < leaf_count; ++l) {
        const Vertex v = 1 + l;
        b.add_edge(0, v);
        for (unsigned i = 0; i < k; ++i) {
            if (leaves[l][i] == '0') {
                b.add_edge(v, first_s + i);
                b.add_edge(v, first_r + i);
            }
            else if (leaves[l][i] == '1')
                b.add_edge(v, first_r + i);
        }
        f.labels.push_back(leaf_role(leaves[l]));
    }
    for (unsigned i = 0; i < k; ++i) {
        b.add_edge(first_s + i, first_r + i);
        f.designated_landmarks.push_back(first_s + i);
    }
    for (unsigned i = 1; i <= k; ++i)
        f.labels.push_back(indexed(Role::Kind::s, i));
    for (unsigned i = 1; i <= k; ++i)
        f.labels.push_back(indexed(Role::Kind::r, i));

    f.graph = b.build();
    return f;
}

auto build_H(unsigned k) -> LabeledFamily
{
    check_k(k);
    auto leaves = digit_strings(k, 2);
    const auto leaf_count = static_cast<Vertex>(leaves.size());
    const Vertex first_u = 1 + leaf_count;
    GraphBuilder b(first_u + k);
    LabeledFamily f;
    f.variant = Variant::edge();
    f.labels.push_back(Role{});

    for (Vertex l = 0; l < leaf_count; ++l) {
        b.add_edge(0, 1 + l);
        for (unsigned i = 0; i < k; ++i)
            if (leaves[l][i] == '0')
                b.add_edge(1 + l, first_u + i);
        f.labels.push_back(leaf_role(leaves[l]));
    }
    for (unsigned i = 0; i < k; ++i) {
        f.labels.push_back(indexed(Role::Kind::u, i + 1));
        f.designated_landmarks.push_back(first_u + i);
    }

    f.graph = b.build();
    return f;
}

auto build_A(unsigned k) -> LabeledFamily
{
    auto h = build_H(k);
    GraphBuilder b(h.graph.order());
    for (const auto & e : h.graph.edges())
        b.add_edge(e.first, e.second);
    for (auto a : h.designated_landmarks)
        for (auto c : h.designated_landmarks)
            if (a < c)
                b.add_edge(a, c);
    auto clique = b.build();

    const auto adjacency = Variant::adjacency();
    auto dm = all_pairs_distances(clique);
    auto center = item_vector(clique, dm, adjacency, Item::vertex(0), h.designated_landmarks);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < clique.order(); ++v)
        if (v == 0 || item_vector(clique, dm, adjacency, Item::vertex(v), h.designated_landmarks) != center)
            keep.push_back(v);

    LabeledFamily f;
    f.variant = adjacency;
    f.graph = induced_subgraph(clique, keep);
    for (Vertex i = 0; i < keep.size(); ++i) {
        f.labels.push_back(h.labels[keep[i]]);
        if (h.labels[keep[i]].kind == Role::Kind::u)
            f.designated_landmarks.push_back(i);
    }
    return f;
}

auto build_D_box(unsigned k, const std::vector<int> & lo, const std::vector<int> & hi) -> LabeledFamily
{
    if (k == 0)
        throw UsageError("k must be positive");
    if (lo.size() != k || hi.size() != k)
        throw UsageError("box corners must have " + std::to_string(k) + " coordinates");
    std::size_t volume = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (lo[i] < 0 || lo[i] > hi[i])
            throw UsageError("box needs 0 <= lo <= hi in every coordinate");
        volume *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
        if (volume > 200'000)
            throw UsageError("box has too many points");
    }

    std::vector<std::vector<int>> points;
    std::vector<int> p = lo;
    while (true) {
        points.push_back(p);
        unsigned i = k;
        while (i > 0 && p[i - 1] == hi[i - 1]) {
            p[i - 1] = lo[i - 1];
            --i;
        }
        if (i == 0)
            break;
        ++p[i - 1];
    }
    return lattice_family(std::move(points), k);
}

auto build_I(unsigned k, unsigned q) -> LabeledFamily
{
    if (k == 0 || q == 0)
        throw UsageError("k and q must be positive");
    const int qi = static_cast<int>(q);

    std::vector<int> lo(k, qi), hi(k, 3 * qi);
    auto box = build_D_box(k, lo, hi);
    std::vector<std::vector<int>> points;
    for (const auto & r : box.labels)
        points.push_back(r.coords);

    std::vector<std::vector<int>> landmarks;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<int> m(k, 2 * qi);
        m[i] = 0;
        landmarks.push_back(m);
    }

    // Each layer: points with some coordinate i+1 next to the previous layer.
    std::vector<std::vector<int>> layer = landmarks;
    std::vector<std::vector<int>> spikes = landmarks;
    for (int i = 0; i + 2 <= qi; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto & m : layer) {
            std::vector<int> offset(k, -1);
            while (true) {
                auto p = m;
                bool valid = true;
                for (unsigned c = 0; c < k; ++c) {
                    p[c] += offset[c];
                    valid = valid && p[c] >= 0;
                }
                if (valid && p != m && std::find(p.begin(), p.end(), i + 1) != p.end())
                    next.push_back(p);
                unsigned c = 0;
                while (c < k && offset[c] == 1)
                    offset[c++] = -1;
                if (c == k)
                    break;
                ++offset[c];
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        spikes.insert(spikes.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    points.insert(points.end(), spikes.begin(), spikes.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    auto f = lattice_family(std::move(points), k);
    f.variant = Variant::metric();
    for (const auto & m : landmarks) {
        Role r;
        r.kind = Role::Kind::lattice;
        r.coords = m;
        f.designated_landmarks.push_back(f.vertex(r.to_string()));
    }

    auto dm = all_pairs_distances(f.graph);
    for (Vertex v = 0; v < f.graph.order(); ++v)
        for (unsigned i = 0; i < k; ++i) {
            auto d = dm(v, f.designated_landmarks[i]);
            if (d.is_infinite() || d.value() != static_cast<std::uint32_t>(f.labels[v].coords[i]))
                throw ConstructionError("vertex " + f.labels[v].to_string() + " is at distance " + d.to_string() + " from landmark "
                        + std::to_string(i) + ", not its coordinate");
        }
    return f;
}

auto pendant_extend(const Graph & g, Vertex v, unsigned r) -> Graph
{
    if (v >= g.order())
        throw UsageError("vertex " + std::to_string(v) + " out of range");
    GraphBuilder b(g.order());
    for (const auto & e : g.edges())
        b.add_edge(e.first, e.second);
    for (unsigned i = 0; i < r; ++i)
        b.add_edge(v, b.add_vertex());
    return b.build();
}

auto ft_construct_metric(const Graph & g, const LandmarkSet & s) -> LandmarkSet
{
    return ft_construct_vertices(g, Variant::metric(), s);
}

auto ft_construct_truncated(const Graph & g, unsigned k, const LandmarkSet & s) -> LandmarkSet
{
    return ft_construct_vertices(g, Variant::truncated(k), s);
}

auto ft_construct_edge(const Graph & g, const LandmarkSet & s) -> LandmarkSet
{
    const auto v = Variant::edge();
    auto dm = all_pairs_distances(g);
    require_resolving(g, dm, v, s);

    const auto closed = closed_landmarks(g, s);
    auto result = closed;
    for (auto landmark : s) {
        auto t = closed;
        t.reset(landmark);
        auto ts = to_landmarks(t);
        const auto & around = g.neighbourhood(landmark);
        for (auto u = around.find_first(); u != VertexSet::npos; u = around.find_next(u)) {
            auto home = item_vector(g, dm, v, Item::edge(landmark, static_cast<Vertex>(u)), ts);
            std::vector<Vertex> partners;
            const auto & next = g.neighbourhood(u);
            for (auto w = next.find_first(); w != VertexSet::npos; w = next.find_next(w))
                if (w != landmark && item_vector(g, dm, v, Item::edge(static_cast<Vertex>(u), static_cast<Vertex>(w)), ts) == home)
                    partners.push_back(static_cast<Vertex>(w));
            if (partners.size() > 1)
                throw TheoremViolation("edge " + std::to_string(landmark) + "-" + std::to_string(u) + " is unresolved from "
                        + std::to_string(partners.size()) + " edges after removal, expected at most one");
            if (! partners.empty())
                result.set(partners.front());
        }
    }
    return to_landmarks(result);
}

auto ft_construct(const Graph & g, const Variant & v, const LandmarkSet & s) -> LandmarkSet
{
    switch (v.kind()) {
    case Variant::Kind::vertex_metric:
        return ft_construct_metric(g, s);
    case Variant::Kind::edge_metric:
        return ft_construct_edge(g, s);
    case Variant::Kind::truncated:
        return ft_construct_truncated(g, v.truncation(), s);
    case Variant::Kind::local:
        break;
    }
    throw UsageError("no fault-tolerant construction for the local variant");
}

auto ft_construct_bound(const Variant & v, std::size_t size) -> std::size_t
{
    if (size == 0)
        return 0;
    std::size_t power = 1;
    if (v.kind() == Variant::Kind::edge_metric) {
        for (std::size_t i = 0; i < size; ++i)
            power *= 2;
        return size * (1 + power);
    }
    if (v.kind() == Variant::Kind::local)
        throw UsageError("no fault-tolerant construction for the local variant");
    for (std::size_t i = 1; i < size; ++i)
        power *= 3;
    return size * (2 + power);
}

}
