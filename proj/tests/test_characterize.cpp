#include <resolvelab/characterize.hpp>
#include <resolvelab/dimension.hpp>
#include <resolvelab/enumerate.hpp>
#include <resolvelab/errors.hpp>
#include <resolvelab/graph_io.hpp>

#include <doctest.h>

#include <atomic>
#include <cstdlib>

using namespace resolvelab;

namespace {
    const std::vector<Variant> five_variants{
        Variant::metric(), Variant::edge(), Variant::truncated(1), Variant::truncated(2), Variant::local()};

    auto k1_plus(const Graph & g) -> Graph { return disjoint_union(g, empty_graph(1)); }

    struct ThreadsOverride
    {
        explicit ThreadsOverride(const char * value) { setenv("RESOLVE_LAB_THREADS", value, 1); }
        ~ThreadsOverride() { unsetenv("RESOLVE_LAB_THREADS"); }
    };
}

TEST_CASE("dim 1 structure")
{
    CHECK(predicate_dim1(path_graph(5)));
    CHECK(predicate_dim1(k1_plus(path_graph(3))));
    CHECK_FALSE(predicate_dim1(disjoint_union(path_graph(3), path_graph(3))));
    CHECK_FALSE(predicate_dim1(empty_graph(1)));
    CHECK(predicate_dim1(empty_graph(2)));
    CHECK_FALSE(predicate_dim1(empty_graph(3)));
    CHECK_FALSE(predicate_dim1(cycle_graph(4)));
}

TEST_CASE("edim 1 structure")
{
    CHECK(predicate_edim1(path_graph(4)));
    auto two_edges = disjoint_union(path_graph(2), path_graph(2));
    CHECK(predicate_edim1(two_edges));
    CHECK_FALSE(predicate_edim1(disjoint_union(two_edges, path_graph(2))));
    CHECK_FALSE(predicate_edim1(complete_graph(2)));
    CHECK_FALSE(predicate_edim1(disjoint_union(path_graph(3), path_graph(3))));
    CHECK(predicate_edim1(disjoint_union(path_graph(3), path_graph(2))));
}

TEST_CASE("adim, dim_k and ldim 1 structure")
{
    CHECK(predicate_adim1(path_graph(3)));
    CHECK(predicate_adim1(k1_plus(path_graph(2))));
    CHECK(predicate_adim1(complete_graph(2)));
    CHECK(predicate_adim1(empty_graph(2)));
    CHECK_FALSE(predicate_adim1(complete_graph(3)));
    CHECK_FALSE(predicate_adim1(path_graph(4)));
    CHECK_FALSE(predicate_adim1(empty_graph(1)));

    CHECK(predicate_dimk1(path_graph(5), 3));
    CHECK_FALSE(predicate_dimk1(path_graph(6), 3));
    CHECK(predicate_dimk1(k1_plus(path_graph(4)), 3));
    CHECK_FALSE(predicate_dimk1(k1_plus(path_graph(5)), 3));
    CHECK(predicate_dimk1(empty_graph(2), 1));

    CHECK_FALSE(predicate_ldim1(cycle_graph(5)));
    CHECK(predicate_ldim1(cycle_graph(6)));
    CHECK(predicate_ldim1(k1_plus(complete_bipartite_graph(2, 3))));
    CHECK_FALSE(predicate_ldim1(disjoint_union(path_graph(2), path_graph(2))));
    CHECK_FALSE(predicate_ldim1(empty_graph(3)));
}

TEST_CASE("twin conditions")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        CHECK(twin_condition(complete_graph(n), Variant::metric()));
        CHECK(twin_condition(complete_graph(n), Variant::local()));
        CHECK(twin_condition(complete_graph(n), Variant::edge()) == (n >= 3));
    }
    CHECK(twin_condition(complete_bipartite_graph(2, 2), Variant::metric()));
    CHECK(twin_condition(complete_bipartite_graph(2, 3), Variant::edge()));
    CHECK_FALSE(twin_condition(complete_bipartite_graph(2, 3), Variant::local()));
    CHECK_FALSE(twin_condition(path_graph(3), Variant::metric()));
    CHECK(twin_condition(empty_graph(3), Variant::metric()));
    CHECK_FALSE(twin_condition(empty_graph(3), Variant::edge()));
    CHECK_FALSE(twin_condition(empty_graph(1), Variant::metric()));
}

TEST_CASE("structure predicts xdim = 1 on every graph up to 6 vertices")
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_labeled_graphs(n)) {
            auto dm = all_pairs_distances(g);
            for (const auto & v : five_variants) {
                INFO(graph_to_graph6(g), " ", v.name());
                REQUIRE(predicate_xdim1(g, v) == (min_resolving(g, dm, v).dimension == 1));
            }
            REQUIRE(predicate_dimk1(g, 1) == predicate_adim1(g));
        }
}

TEST_CASE("ftxdim = 2 exactly when xdim = 1, up to 6 vertices")
{
    for (const auto & v : five_variants) {
        auto report = run_equivalence_suite(6, v, Equivalence::dim1_ft2);
        INFO(v.name());
        CHECK(report.graphs_checked == 1 + 2 + 8 + 64 + 1024 + 32768);
        CHECK(report.holds());
    }
}

TEST_CASE("dim = n - 1 and ldim = n - 1, up to 6 vertices")
{
    CHECK(run_equivalence_suite(6, Variant::metric(), Equivalence::dim_n_minus_1).holds());
    CHECK(run_equivalence_suite(6, Variant::local(), Equivalence::dim_n_minus_1).holds());
    CHECK_THROWS_AS(run_equivalence_suite(3, Variant::edge(), Equivalence::dim_n_minus_1), UsageError);
    CHECK_THROWS_AS(run_equivalence_suite(7, Variant::metric(), Equivalence::dim1_ft2), UsageError);
}

TEST_CASE("twin characterisation of ftxdim = n fails only on one vertex for vertex variants")
{
    for (const auto & v : {Variant::metric(), Variant::truncated(1), Variant::truncated(2), Variant::local()}) {
        auto report = run_equivalence_suite(5, v, Equivalence::ft_equals_n);
        INFO(v.name());
        REQUIRE(report.mismatches.size() == 1);
        CHECK(report.mismatches[0].graph6 == "@");
        CHECK_FALSE(report.mismatches[0].structural);
        CHECK(report.mismatches[0].solver);
    }
}

TEST_CASE("edge twin characterisation of ftedim = n has counterexamples")
{
    auto report = run_equivalence_suite(5, Variant::edge(), Equivalence::ft_equals_n);
    CHECK(report.mismatches.size() == 136);
    bool has_dl = false;
    for (const auto & m : report.mismatches) {
        CHECK_FALSE(m.structural);
        CHECK(m.solver);
        has_dl = has_dl || m.graph6 == "DL{";
    }
    CHECK(has_dl);

    auto g = graph_from_graph6("DL{");
    CHECK(min_fault_tolerant(g, Variant::edge()).dimension == 5);
    CHECK_FALSE(twin_condition(g, Variant::edge()));
    CHECK_FALSE(twin_condition(g, Variant::metric()));
}

TEST_CASE("landmark degree bounds hold up to 6 vertices")
{
    for (const auto & v : {Variant::metric(), Variant::edge(), Variant::truncated(1), Variant::truncated(2), Variant::truncated(3)}) {
        auto report = run_degree_suite(6, v);
        INFO(v.name());
        CHECK(report.violations.empty());
        CHECK(report.landmarks_checked > 0);
    }
    CHECK_THROWS_AS(run_degree_suite(4, Variant::local()), UsageError);
}

TEST_CASE("thread cap and parallel loop")
{
    {
        ThreadsOverride cap("3");
        CHECK(worker_count() == 3);
    }
    {
        ThreadsOverride junk("lots");
        CHECK(worker_count() >= 1);
    }

    ThreadsOverride cap("4");
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto & h : hits)
        REQUIRE(h == 1);

    CHECK_THROWS_AS(parallel_for(100, [](std::size_t i) {
        if (i == 42)
            throw UsageError("boom");
    }), UsageError);
}

TEST_CASE("reports do not depend on the thread count")
{
    CharacterizationReport one, many;
    {
        ThreadsOverride cap("1");
        one = run_equivalence_suite(5, Variant::edge(), Equivalence::ft_equals_n);
    }
    {
        ThreadsOverride cap("4");
        many = run_equivalence_suite(5, Variant::edge(), Equivalence::ft_equals_n);
    }
    REQUIRE(one.mismatches.size() == many.mismatches.size());
    for (std::size_t i = 0; i < one.mismatches.size(); ++i)
        CHECK(one.mismatches[i].graph6 == many.mismatches[i].graph6);
}
