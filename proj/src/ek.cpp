#include <resolvelab/characterize.hpp>
#include <resolvelab/clique.hpp>
#include <resolvelab/dimension.hpp>
#include <resolvelab/ek.hpp>
#include <resolvelab/enumerate.hpp>
#include <resolvelab/errors.hpp>
#include <resolvelab/graph_io.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace resolvelab {

namespace {
    auto better(const std::vector<std::uint32_t> & a, const std::vector<std::uint32_t> & b) -> bool
    {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    }

    // Depth-first over member lists in ascending order; prefixes of a
    // union-distinct family are union-distinct, so the first optimum reached
    // is the lexicographically least one.
    class EkSearch
    {
    public:
        EkSearch(unsigned k, bool strict, const std::atomic<std::size_t> & shared) :
            _universe(1u << k), _strict(strict), _shared(shared), _used(_universe, 0)
        {
        }

        auto run(std::uint32_t first) -> std::vector<std::uint32_t>
        {
            if (try_add(first)) {
                search(first + 1);
                remove_last();
            }
            return _best;
        }

        auto best() const -> const std::vector<std::uint32_t> & { return _best; }

    private:
        auto search(std::uint32_t next) -> void
        {
            if (_chosen.size() > _best.size())
                _best = _chosen;
            for (auto c = next; c < _universe; ++c) {
                const auto reachable = _chosen.size() + (_universe - c);
                if (reachable <= _best.size() || reachable < _shared.load(std::memory_order_relaxed))
                    return;
                if (try_add(c)) {
                    search(c + 1);
                    remove_last();
                }
            }
        }

        auto try_add(std::uint32_t c) -> bool
        {
            std::vector<std::uint32_t> fresh;
            for (auto m : _chosen)
                fresh.push_back(c | m);
            if (_strict)
                fresh.push_back(c);
            for (auto u : fresh)
                if (_used[u])
                    return false;
            std::sort(fresh.begin(), fresh.end());
            if (std::adjacent_find(fresh.begin(), fresh.end()) != fresh.end())
                return false;
            for (auto u : fresh)
                _used[u] = 1;
            _chosen.push_back(c);
            _added.push_back(std::move(fresh));
            return true;
        }

        auto remove_last() -> void
        {
            for (auto u : _added.back())
                _used[u] = 0;
            _added.pop_back();
            _chosen.pop_back();
        }

        std::uint32_t _universe;
        bool _strict;
        const std::atomic<std::size_t> & _shared;
        std::vector<char> _used;
        std::vector<std::uint32_t> _chosen;
        std::vector<std::vector<std::uint32_t>> _added;
        std::vector<std::uint32_t> _best;
    };

    auto ek_exhaustive(unsigned k, bool strict) -> std::vector<std::uint32_t>
    {
        const unsigned universe = 1u << k;
        std::vector<std::uint32_t> best;
        SubsetFamily f{k, {}};
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << universe); ++code) {
            f.members.clear();
            for (std::uint32_t s = 0; s < universe; ++s)
                if (code >> s & 1)
                    f.members.push_back(s);
            if (f.members.size() >= best.size() && better(f.members, best) && is_union_distinct(f, strict))
                best = f.members;
        }
        return best;
    }

    auto branch_and_bound(unsigned k, bool strict) -> std::vector<std::uint32_t>
    {
        const std::uint32_t universe = 1u << k;
        std::atomic<std::size_t> shared{0};
        std::vector<std::vector<std::uint32_t>> results(universe);
        parallel_for(universe, [&](std::size_t first) {
            EkSearch search(k, strict, shared);
            results[first] = search.run(static_cast<std::uint32_t>(first));
            auto size = results[first].size();
            auto seen = shared.load();
            while (size > seen && ! shared.compare_exchange_weak(seen, size)) {
            }
        });
        std::vector<std::uint32_t> best;
        for (auto & r : results)
            if (better(r, best))
                best = std::move(r);
        return best;
    }

    auto parse_member(std::string_view text, std::size_t line) -> std::uint32_t
    {
        if (text == "-")
            return 0;
        std::uint32_t mask = 0;
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            unsigned value = 0;
            if (piece.empty() || piece.size() > 2 || ! std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError(line, "malformed member '" + std::string(text) + "'");
            for (char c : piece)
                value = value * 10 + static_cast<unsigned>(c - '0');
            if (value == 0 || value > 31)
                throw ParseError(line, "element " + std::to_string(value) + " out of range");
            if (mask >> (value - 1) & 1)
                throw ParseError(line, "element " + std::to_string(value) + " repeated");
            mask |= 1u << (value - 1);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return mask;
    }
}

auto SubsetFamily::validate() const -> void
{
    if (ground_k > 31)
        throw UsageError("ground set too large");
    const std::uint64_t limit = std::uint64_t{1} << ground_k;
    std::vector<std::uint32_t> seen;
    for (auto m : members) {
        if (m >= limit)
            throw UsageError("member " + subset_to_string(m) + " is not a subset of {1.." + std::to_string(ground_k) + "}");
        seen.push_back(m);
    }
    std::sort(seen.begin(), seen.end());
    if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end())
        throw UsageError("member " + subset_to_string(*it) + " appears twice");
}

auto subset_to_string(std::uint32_t mask) -> std::string
{
    std::string text = "{";
    for (unsigned i = 0; i < 32; ++i)
        if (mask >> i & 1)
            text += (text.size() > 1 ? "," : "") + std::to_string(i + 1);
    return text + "}";
}

auto family_to_string(const SubsetFamily & f) -> std::string
{
    std::string text = "{";
    for (std::size_t i = 0; i < f.members.size(); ++i)
        text += (i ? ", " : "") + subset_to_string(f.members[i]);
    return text + "}";
}

auto is_union_distinct(const SubsetFamily & f, bool strict) -> UnionCheck
{
    f.validate();
    std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> unions;
    const auto & m = f.members;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = strict ? i : i + 1; j < m.size(); ++j) {
            auto [it, fresh] = unions.emplace(m[i] | m[j], std::pair{i, j});
            if (! fresh)
                return UnionCheck{false, UnionCollision{it->second, {i, j}, m[i] | m[j]}};
        }
    return {};
}

auto ek_bruteforce(unsigned k, bool strict) -> EkResult
{
    if (k == 0)
        throw UsageError("k must be positive");
    if (k > max_ek_k)
        throw UsageError("ek search is limited to k <= " + std::to_string(max_ek_k));
    EkResult result;
    result.k = k;
    result.witness.ground_k = k;
    result.witness.members = k <= 4 ? ek_exhaustive(k, strict) : branch_and_bound(k, strict);
    result.value = result.witness.members.size();
    return result;
}

auto ek_branch_and_bound(unsigned k, bool strict) -> EkResult
{
    if (k == 0 || k > max_ek_k)
        throw UsageError("ek search needs 1 <= k <= " + std::to_string(max_ek_k));
    EkResult result;
    result.k = k;
    result.witness.ground_k = k;
    result.witness.members = branch_and_bound(k, strict);
    result.value = result.witness.members.size();
    return result;
}

auto family_to_graph(const SubsetFamily & f) -> FamilyGraph
{
    if (auto check = is_union_distinct(f); ! check)
        throw UsageError("family is not union-distinct: " + subset_to_string(check.collision->shared_union) + " arises twice");
    const auto k = f.ground_k;
    GraphBuilder b(k + f.members.size());
    FamilyGraph result;
    for (Vertex i = 0; i < k; ++i)
        result.landmarks.push_back(i);
    for (std::size_t j = 0; j < f.members.size(); ++j) {
        const auto v = static_cast<Vertex>(k + j);
        result.clique.push_back(v);
        for (auto w : result.clique)
            if (w != v)
                b.add_edge(w, v);
        for (Vertex i = 0; i < k; ++i)
            if (f.members[j] >> i & 1)
                b.add_edge(i, v);
    }
    result.graph = b.build();
    return result;
}

auto clique_to_family(const Graph & g, const std::vector<Vertex> & clique, const LandmarkSet & landmarks) -> SubsetFamily
{
    for (auto v : clique)
        if (v >= g.order())
            throw UsageError("clique vertex " + std::to_string(v) + " out of range");
    if (! is_clique(g, clique))
        throw UsageError("given vertices do not form a clique");
    if (landmarks.size() > 31)
        throw UsageError("too many landmarks");
    auto dm = all_pairs_distances(g);
    check_landmarks(g, landmarks);
    if (auto cert = is_resolving(g, dm, Variant::edge(), landmarks); ! cert)
        throw UsageError("landmarks do not resolve the edges: " + cert.unresolved->to_string());

    SubsetFamily f;
    f.ground_k = static_cast<unsigned>(landmarks.size());
    std::vector<Distance> nearest(landmarks.size(), Distance::infinity());
    for (std::size_t i = 0; i < landmarks.size(); ++i)
        for (auto v : clique)
            nearest[i] = std::min(nearest[i], dm(v, landmarks[i]));
    for (auto v : clique) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < landmarks.size(); ++i)
            if (dm(v, landmarks[i]) == nearest[i])
                mask |= 1u << i;
        f.members.push_back(mask);
    }

    auto sorted = f.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw TheoremViolation("two clique vertices received the same subset");
    if (auto check = is_union_distinct(f); ! check)
        throw TheoremViolation("clique family is not union-distinct: " + subset_to_string(check.collision->shared_union) + " arises twice");
    return f;
}

auto verify_mc_ek(unsigned k, std::size_t n_max) -> McEkReport
{
    if (k == 0 || k > 3)
        throw UsageError("verify_mc_ek needs 1 <= k <= 3");
    if (n_max > max_enumeration_order)
        throw UsageError("verify_mc_ek scans at most " + std::to_string(max_enumeration_order) + " vertices");

    McEkReport report;
    report.k = k;
    auto ek = ek_bruteforce(k);
    report.ek = ek.value;
    report.witness = ek.witness;

    auto fg = family_to_graph(ek.witness);
    report.witness_order = fg.graph.order();
    report.witness_edim = min_resolving(fg.graph, Variant::edge()).dimension;
    report.witness_clique = clique_number(fg.graph);
    report.construction_ok = report.witness_edim <= k && report.witness_clique >= report.ek;

    report.n_max = n_max;
    std::mutex lock;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto count = labeled_graph_count(n);
        parallel_for(count, [&](std::size_t code) {
            auto g = labeled_graph(n, code);
            if (clique_number(g) <= report.ek)
                return;
            bool bad = min_resolving(g, Variant::edge()).dimension <= k;
            std::lock_guard guard(lock);
            ++report.large_cliques;
            if (bad)
                report.counterexamples.push_back(graph_to_graph6(g));
        });
        report.graphs_scanned += count;
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    return report;
}

auto write_family(std::ostream & out, const SubsetFamily & f) -> void
{
    for (auto m : f.members) {
        if (m == 0) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (unsigned i = 0; i < 32; ++i)
            if (m >> i & 1) {
                out << (first ? "" : ",") << i + 1;
                first = false;
            }
        out << '\n';
    }
}

auto read_family(std::istream & in, std::optional<unsigned> ground_k) -> SubsetFamily
{
    SubsetFamily f;
    std::string line;
    std::size_t number = 0;
    std::uint32_t all = 0;
    std::map<std::uint32_t, std::size_t> seen;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto last = line.find_last_not_of(" \t\r");
        auto mask = parse_member(std::string_view(line).substr(first, last - first + 1), number);
        if (auto [it, fresh] = seen.emplace(mask, number); ! fresh)
            throw ParseError(number, "member repeats line " + std::to_string(it->second));
        all |= mask;
        f.members.push_back(mask);
    }
    const auto needed = static_cast<unsigned>(std::bit_width(all));
    if (ground_k && *ground_k < needed)
        throw ParseError(0, "element " + std::to_string(needed) + " exceeds ground set size " + std::to_string(*ground_k));
    f.ground_k = ground_k ? *ground_k : needed;
    return f;
}

}
