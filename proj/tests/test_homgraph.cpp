#include <doctest.h>

#include <homlab/constructions.hpp>
#include <homlab/corpus.hpp>
#include <homlab/homgraph.hpp>
#include <homlab/rng.hpp>
#include <homlab/solvers.hpp>

#include <cstdlib>
#include <set>

using namespace homlab;

TEST_CASE("plain approximation of K2")
{
    // ball homs into K2 alternate by level, so the root image pins
    // everything: two homs, shift-adjacent along every generator
    auto a = build_hom_approx(3, 2, complete_graph(2));
    CHECK(a.vertex_count() == 2);
    CHECK(a.edges.size() == 3);
    std::set<int> labels;
    for (const auto & e : a.edges) {
        CHECK(((e.a == 0 && e.b == 1)));
        labels.insert(e.label);
    }
    CHECK(labels == std::set<int>{1, 2, 3});

    auto rep = analyze(a, complete_graph(2));
    CHECK(rep.root_map_edge_preserving);
    REQUIRE(rep.shortest_cycle.has_value());
    CHECK(*rep.shortest_cycle == 2);  // parallel edges
    CHECK(rep.degree_histogram.at(3) == 2);
}

TEST_CASE("plain approximation of K3 at depth 1")
{
    // root image free (3), each of the three leaves free over the two
    // neighbours: 3 * 2^3 homs
    auto a = build_hom_approx(3, 1, complete_graph(3));
    CHECK(a.vertex_count() == 24);
    auto rep = analyze(a, complete_graph(3));
    CHECK(rep.root_map_edge_preserving);
    CHECK(!rep.root_map_injective_per_component.has_value());  // plain variant
}

TEST_CASE("labeled approximation of a rigid target")
{
    // a properly edge-coloured delta-regular target admits exactly one
    // ball hom per root image, and shifts mirror the target itself
    EdgeLabeledGraph k4{4, 3,
        {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}}};
    for (int depth : {1, 2, 3}) {
        auto a = build_hom_approx_labeled(3, depth, k4);
        CHECK(a.vertex_count() == 4);
        CHECK(a.edges.size() == 6);
        std::set<int> roots(a.root_image.begin(), a.root_image.end());
        CHECK(roots.size() == 4);
        for (const auto & e : a.edges)
            CHECK(k4.label_of(a.root_image[static_cast<std::size_t>(e.a)],
                      a.root_image[static_cast<std::size_t>(e.b)])
                == e.label);
        auto rep = analyze_labeled(a, k4);
        CHECK(rep.root_map_edge_preserving);
        REQUIRE(rep.root_map_injective_per_component.has_value());
        CHECK(*rep.root_map_injective_per_component);
    }
}

TEST_CASE("labeled approximation of acyclic truncations")
{
    // proper acyclic targets keep the finite shadow of acyclicity:
    // no cycle of length <= 2 * depth
    Rng rng{31};
    int nonempty = 0;
    for (int t = 0; t < 30 && nonempty < 3; ++t) {
        auto trunc = g0_truncation(3, random_g0_seq(3, 3 + rng.below(6), rng));
        if (trunc.graph.vertex_count() == 0)
            continue;
        auto a = build_hom_approx_labeled(3, 2, trunc.graph);
        if (a.vertex_count() == 0)
            continue;
        ++nonempty;
        auto rep = analyze_labeled(a, trunc.graph);
        CHECK(rep.root_map_edge_preserving);
        if (rep.shortest_cycle.has_value())
            CHECK(*rep.shortest_cycle > 4);
        REQUIRE(rep.root_map_injective_per_component.has_value());
        CHECK(*rep.root_map_injective_per_component);
    }
    CHECK(nonempty >= 1);
}

TEST_CASE("guards and validation")
{
    CHECK_THROWS_AS((void)build_hom_approx(3, 0, complete_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS((void)build_hom_approx(3, 1, FiniteGraph{0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)build_hom_approx_labeled(4, 1, EdgeLabeledGraph{2, 3, {{0, 1, 1}}}),
        std::invalid_argument);
    // > 2^20 ball homs: depth-2 ball has 10 vertices, K8 admits 8*7^9
    CHECK_THROWS_AS((void)build_hom_approx(3, 2, complete_graph(8)), SizeGuardError);
}

TEST_CASE("thread count does not change the output")
{
    auto trunc = g0_truncation(3, {{{}, 1}, {{0}, 2}, {{0, 0}, 3}, {{0, 0, 0}, 1}});
    auto run = [&](const char * threads) {
        setenv("HOMLAB_THREADS", threads, 1);
        auto a = build_hom_approx_labeled(3, 2, trunc.graph);
        unsetenv("HOMLAB_THREADS");
        return a;
    };
    auto a1 = run("1");
    auto a3 = run("3");
    CHECK(a1.homs == a3.homs);
    REQUIRE(a1.edges.size() == a3.edges.size());
    for (std::size_t i = 0; i < a1.edges.size(); ++i) {
        CHECK(a1.edges[i].a == a3.edges[i].a);
        CHECK(a1.edges[i].b == a3.edges[i].b);
        CHECK(a1.edges[i].label == a3.edges[i].label);
    }

    auto kb = build_hom_approx(3, 1, complete_graph(3));
    setenv("HOMLAB_THREADS", "4", 1);
    auto kb4 = build_hom_approx(3, 1, complete_graph(3));
    unsetenv("HOMLAB_THREADS");
    CHECK(kb.homs == kb4.homs);
}
