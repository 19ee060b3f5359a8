#include "oracles.hpp"

#include <resolvelab/constructions.hpp>
#include <resolvelab/dimension.hpp>
#include <resolvelab/enumerate.hpp>
#include <resolvelab/errors.hpp>
#include <resolvelab/graph_io.hpp>

#include <doctest.h>

#include <cmath>

using namespace resolvelab;

namespace {
    auto distinguishers_of(const LabeledFamily & f, const Item & a, const Item & b) -> LandmarkSet
    {
        auto dm = all_pairs_distances(f.graph);
        LandmarkSet result;
        for (Vertex x = 0; x < f.graph.order(); ++x)
            if (distinguishes(f.graph, dm, f.variant, x, {a, b}))
                result.push_back(x);
        return result;
    }

    auto sorted(LandmarkSet s) -> LandmarkSet
    {
        std::sort(s.begin(), s.end());
        return s;
    }

    auto ternary(unsigned k, unsigned code) -> std::string
    {
        std::string digits(k, '0');
        for (unsigned i = k; i-- > 0; code /= 3)
            digits[i] = static_cast<char>('0' + code % 3);
        return digits;
    }
}

TEST_CASE("J family shape")
{
    auto j2 = build_J(2);
    CHECK(j2.graph.order() == 11);
    CHECK(build_J(3).graph.order() == 30);
    CHECK(j2.labels[0].to_string() == "c");
    CHECK(j2.labels[1].to_string() == "leaf 00");
    CHECK(j2.labels[7].to_string() == "s1");
    CHECK(j2.labels[10].to_string() == "r2");
    CHECK(j2.designated_landmarks == LandmarkSet{7, 8});
    CHECK_THROWS_AS(j2.vertex("leaf 11"), UsageError);
    CHECK_THROWS_AS(j2.vertex("leaf 01"), UsageError);

    auto dm = all_pairs_distances(j2.graph);
    auto leaf = j2.vertex("leaf 02");
    CHECK(dm(leaf, j2.vertex("s1")) == Distance{1});
    CHECK(dm(leaf, j2.vertex("s2")) == Distance{3});

    // Distance to s_i is one more than digit i for every leaf.
    for (unsigned k = 2; k <= 3; ++k) {
        auto j = build_J(k);
        auto jdm = all_pairs_distances(j.graph);
        for (Vertex v = 0; v < j.graph.order(); ++v) {
            if (j.labels[v].kind != Role::Kind::leaf)
                continue;
            for (unsigned i = 0; i < k; ++i)
                CHECK(jdm(v, j.designated_landmarks[i]).value() == static_cast<unsigned>(j.labels[v].leaf[i] - '0') + 1);
        }
    }
}

TEST_CASE("J_1 taken literally is disconnected")
{
    auto j1 = build_J(1);
    CHECK(j1.graph.order() == 4);
    CHECK_FALSE(is_connected(j1.graph));
    CHECK_FALSE(is_resolving(j1.graph, all_pairs_distances(j1.graph), Variant::metric(), j1.designated_landmarks).ok);
}

TEST_CASE("designated landmarks resolve and dimensions are exact")
{
    for (unsigned k = 1; k <= 3; ++k) {
        INFO("k = ", k);
        if (k >= 2) {
            auto j = build_J(k);
            CHECK(is_resolving(j.graph, all_pairs_distances(j.graph), j.variant, j.designated_landmarks).ok);
            CHECK(min_resolving(j.graph, j.variant).dimension == k);
            CHECK(is_connected(j.graph));
        }

        auto h = build_H(k);
        CHECK(h.graph.order() == 1 + (1u << k) + k);
        CHECK(is_resolving(h.graph, all_pairs_distances(h.graph), h.variant, h.designated_landmarks).ok);
        CHECK(min_resolving(h.graph, h.variant).dimension == k);

        auto a = build_A(k);
        CHECK(a.graph.order() == k + (1u << k));
        CHECK_THROWS_AS(a.vertex("leaf " + std::string(k, '1')), UsageError);
        CHECK(is_resolving(a.graph, all_pairs_distances(a.graph), a.variant, a.designated_landmarks).ok);
        CHECK(min_resolving(a.graph, a.variant).dimension == k);
    }
}

TEST_CASE("H and A landmark degrees")
{
    auto h1 = build_H(1);
    CHECK(h1.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});

    for (unsigned k = 2; k <= 3; ++k) {
        auto h = build_H(k);
        auto a = build_A(k);
        for (auto u : h.designated_landmarks)
            CHECK(h.graph.degree(u) == (1u << (k - 1)));
        for (auto u : a.designated_landmarks)
            CHECK(a.graph.degree(u) == (1u << (k - 1)) + k - 1);
    }
    CHECK(build_H(2).designated_landmarks == LandmarkSet{5, 6});
}

TEST_CASE("sibling pairs have exactly three distinguishers")
{
    auto h2 = build_H(2);
    for (const auto & [x, y] : {std::pair{"00", "10"}, std::pair{"01", "11"}}) {
        auto v = h2.vertex(std::string("leaf ") + x);
        auto w = h2.vertex(std::string("leaf ") + y);
        CHECK(distinguishers_of(h2, Item::edge(v, 0), Item::edge(w, 0)) == sorted({v, w, h2.vertex("u1")}));
    }

    for (unsigned k = 2; k <= 3; ++k) {
        auto j = build_J(k);
        unsigned checked = 0;
        for (unsigned code = 0; code < std::pow(3, k - 1); ++code) {
            auto tail = ternary(k - 1, code);
            std::vector<Vertex> triple;
            for (char first : {'0', '1', '2'})
                for (Vertex x = 0; x < j.graph.order(); ++x)
                    if (j.labels[x].kind == Role::Kind::leaf && j.labels[x].leaf == first + tail)
                        triple.push_back(x);
            if (triple.size() < 3)
                continue;
            ++checked;
            CHECK(distinguishers_of(j, Item::vertex(triple[0]), Item::vertex(triple[1])) == sorted({triple[0], triple[1], j.vertex("s1")}));
        }
        CHECK(checked >= std::pow(3, k - 1) - k - 1);
    }

    auto a3 = build_A(3);
    auto v = a3.vertex("leaf 001");
    auto w = a3.vertex("leaf 101");
    CHECK(distinguishers_of(a3, Item::vertex(v), Item::vertex(w)) == sorted({v, w, a3.vertex("u1")}));
}

TEST_CASE("lattice boxes")
{
    auto line = build_D_box(1, {0}, {3});
    CHECK(line.graph == path_graph(4));

    auto square = build_D_box(2, {0, 0}, {2, 2});
    CHECK(square.graph.order() == 9);
    auto center = square.vertex("(1,1)");
    CHECK(square.graph.degree(center) == 8);
    CHECK(count_within_distance(all_pairs_distances(square.graph), center, 1) == 8);

    for (unsigned k = 2; k <= 3; ++k)
        for (int j = 1; j <= 2; ++j) {
            auto box = build_D_box(k, std::vector<int>(k, 0), std::vector<int>(k, 2 * j));
            auto mid = box.vertex(Role{Role::Kind::lattice, "", 0, std::vector<int>(k, j)}.to_string());
            CHECK(count_within_distance(all_pairs_distances(box.graph), mid, j) == std::pow(2 * j + 1, k) - 1);
        }

    CHECK_THROWS_AS(build_D_box(2, {0, 3}, {2, 2}), UsageError);
    CHECK_THROWS_AS(build_D_box(2, {0}, {2, 2}), UsageError);
}

TEST_CASE("I lattices realise coordinates as distances")
{
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned q = 1; q <= (k == 3 ? 2u : 4u); ++q) {
            INFO("k = ", k, " q = ", q);
            auto f = build_I(k, q);
            auto dm = all_pairs_distances(f.graph);
            REQUIRE(f.designated_landmarks.size() == k);
            for (Vertex v = 0; v < f.graph.order(); ++v)
                for (unsigned i = 0; i < k; ++i)
                    REQUIRE(dm(v, f.designated_landmarks[i]).value() == static_cast<unsigned>(f.labels[v].coords[i]));
            CHECK(is_resolving(f.graph, dm, f.variant, f.designated_landmarks).ok);
        }

    auto i21 = build_I(2, 1);
    for (auto m : i21.designated_landmarks)
        CHECK(i21.graph.degree(m) == 3);
    auto i31 = build_I(3, 1);
    for (auto m : i31.designated_landmarks)
        CHECK(i31.graph.degree(m) == 9);

    auto i23 = build_I(2, 3);
    auto dm = all_pairs_distances(i23.graph);
    CHECK(i23.graph.order() == 49 + 2 * (1 + 3 + 5));
    for (auto m : i23.designated_landmarks)
        for (unsigned j = 1; j <= 2; ++j)
            CHECK(count_at_distance(dm, m, j) == 2 * j + 1);

    CHECK(min_resolving(build_I(2, 2).graph, Variant::metric()).dimension == 2);
    CHECK_THROWS_AS(build_I(2, 0), UsageError);
}

TEST_CASE("pendant extension")
{
    auto k3 = complete_graph(3);
    auto big = pendant_extend(k3, 1, 5);
    CHECK(big.order() == 8);
    CHECK(big.max_degree() >= 5);
    CHECK(min_resolving(k3, Variant::local()).dimension == 2);
    CHECK(min_resolving(big, Variant::local()).dimension == 2);

    auto c4 = cycle_graph(4);
    CHECK(min_resolving(pendant_extend(c4, 0, 3), Variant::local()).dimension == 1);

    auto p3 = path_graph(3);
    auto one = pendant_extend(p3, 2, 1);
    CHECK(one.order() == 4);
    CHECK(one.size() == 3);
    CHECK_THROWS_AS(pendant_extend(p3, 3, 1), UsageError);
}

TEST_CASE("fault-tolerant construction examples")
{
    CHECK(ft_construct_metric(path_graph(4), {0}) == LandmarkSet{0, 1, 2});
    CHECK(ft_construct_bound(Variant::metric(), 1) == 3);
    CHECK(ft_construct_metric(complete_graph(2), {0}) == LandmarkSet{0, 1});
    CHECK(ft_construct_edge(complete_graph(2), {0}) == LandmarkSet{0, 1});
    CHECK(ft_construct_truncated(path_graph(4), 3, {0}) == ft_construct_metric(path_graph(4), {0}));
    CHECK_THROWS_AS(ft_construct_truncated(path_graph(3), 1, {1}), UsageError);
    CHECK_THROWS_AS(ft_construct_metric(path_graph(3), {1}), UsageError);
    CHECK_THROWS_AS(ft_construct_metric(empty_graph(1), {}), UsageError);
    CHECK_THROWS_AS(ft_construct(path_graph(3), Variant::local(), {0}), UsageError);

    auto p3 = path_graph(3);
    auto p3_edge = ft_construct_edge(p3, {0});
    CHECK(p3_edge.size() <= 3);
    CHECK(is_fault_tolerant(p3, all_pairs_distances(p3), Variant::edge(), p3_edge).ok);

    auto j2 = build_J(2);
    auto jdm = all_pairs_distances(j2.graph);
    auto j_metric = ft_construct_metric(j2.graph, j2.designated_landmarks);
    CHECK(j_metric.size() <= 10);
    CHECK(is_fault_tolerant(j2.graph, jdm, Variant::metric(), j_metric).ok);
    auto j_trunc = ft_construct_truncated(j2.graph, 2, j2.designated_landmarks);
    CHECK(j_trunc.size() <= 10);
    CHECK(is_fault_tolerant(j2.graph, jdm, Variant::truncated(2), j_trunc).ok);

    auto h2 = build_H(2);
    auto h_edge = ft_construct_edge(h2.graph, h2.designated_landmarks);
    CHECK(h_edge.size() <= 10);
    CHECK(is_fault_tolerant(h2.graph, all_pairs_distances(h2.graph), Variant::edge(), h_edge).ok);

    CHECK(ft_construct_bound(Variant::edge(), 2) == 10);
    CHECK(ft_construct_bound(Variant::truncated(2), 3) == 33);
}

TEST_CASE("fault-tolerant constructions on connected graphs up to 6 vertices")
{
    const std::vector<Variant> variants{Variant::metric(), Variant::edge(), Variant::truncated(1), Variant::truncated(2)};
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_labeled_graphs(n)) {
            if (! is_connected(g) || g.size() < 2)
                continue;
            auto dm = all_pairs_distances(g);
            for (const auto & v : variants) {
                auto s = min_resolving(g, dm, v).witness;
                auto built = ft_construct(g, v, s);
                INFO(graph_to_graph6(g), " ", v.name());
                REQUIRE(is_fault_tolerant(g, dm, v, built).ok);
                REQUIRE(oracle::fault_tolerant(g, v, built));
                REQUIRE(built.size() <= ft_construct_bound(v, s.size()));
            }
        }
}

TEST_CASE("a single edge has an empty edge basis, so the construction returns nothing")
{
    auto k2 = complete_graph(2);
    auto s = min_resolving(k2, Variant::edge()).witness;
    CHECK(s.empty());
    CHECK(ft_construct_edge(k2, s).empty());
    CHECK(min_fault_tolerant(k2, Variant::edge()).dimension == 1);
}
