#include <doctest.h>

#include <homlab/constructions.hpp>
#include <homlab/corpus.hpp>
#include <homlab/rng.hpp>
#include <homlab/solvers.hpp>

#include <functional>

using namespace homlab;

namespace {

// exhaustive k-colourability, independent of the solver under test
bool colourable(const FiniteGraph & g, int k)
{
    std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == g.vertex_count())
            return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (u < v && col[static_cast<std::size_t>(u)] == c)
                    ok = false;
            if (!ok)
                continue;
            col[static_cast<std::size_t>(v)] = c;
            if (go(v + 1))
                return true;
            col[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return go(0);
}

int chromatic_oracle(const FiniteGraph & g)
{
    for (int k = 1;; ++k)
        if (colourable(g, k))
            return k;
}

}

TEST_CASE("hom search")
{
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    auto c5 = cycle_graph(5);
    auto h3 = h_delta(3);

    CHECK(!find_hom(k3, k2).map.has_value());

    auto r = find_hom(c5, k3);
    REQUIRE(r.map.has_value());
    CHECK(is_homomorphism(c5, k3, *r.map));

    CHECK(!find_hom(complete_graph(5), h3.graph()).map.has_value());
    auto r2 = find_hom(k3, h3.graph());
    REQUIRE(r2.map.has_value());
    CHECK(is_homomorphism(k3, h3.graph(), *r2.map));

    // pins are honoured
    auto rp = find_hom(c5, k3, {{0, 2}});
    REQUIRE(rp.map.has_value());
    CHECK((*rp.map)[0] == 2);
    CHECK(!find_hom(k2, k2, {{0, 0}, {1, 0}}).map.has_value());
}

TEST_CASE("labeled hom search")
{
    EdgeLabeledGraph edge1{2, 3, {{0, 1, 1}}};
    EdgeLabeledGraph edge2{2, 3, {{0, 1, 2}}};
    EdgeLabeledGraph path{3, 3, {{0, 1, 1}, {1, 2, 2}}};

    CHECK(find_hom_labeled(edge1, path).map.has_value());
    CHECK(!find_hom_labeled(EdgeLabeledGraph{2, 3, {{0, 1, 3}}}, path).map.has_value());
    CHECK(!find_hom_labeled(edge1, edge2).map.has_value());
    auto r = find_hom_labeled(path, path);
    REQUIRE(r.map.has_value());
    CHECK(is_homomorphism_labeled(path, path, *r.map));
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(FiniteGraph{3, {}}).chi == 1);
    CHECK(chromatic_number(complete_graph(4)).chi == 4);
    CHECK(chromatic_number(cycle_graph(5)).chi == 3);
    CHECK(chromatic_number(named_graph("grotzsch")).chi == 4);
    CHECK(chromatic_number(named_graph("chvatal")).chi == 4);
    CHECK(chromatic_number(h_delta(3).graph()).chi == 4);

    Rng rng{21};
    for (int t = 0; t < 30; ++t) {
        auto g = random_graph(3 + rng.below(4), 1 + rng.below(3), 4, rng);
        auto res = chromatic_number(g);
        CHECK(res.chi == chromatic_oracle(g));
        // the witness is a proper colouring with res.chi colours
        for (const auto & [u, v] : g.edges())
            CHECK(res.colouring[static_cast<std::size_t>(u)] != res.colouring[static_cast<std::size_t>(v)]);
        // chi(g) <= n iff g -> K_n
        for (int n = 1; n <= 4; ++n)
            CHECK((res.chi <= n) == find_hom(g, complete_graph(n)).map.has_value());
    }
}

TEST_CASE("greedy clique")
{
    auto g = named_graph("petersen");
    auto cl = greedy_clique(g);
    CHECK(cl.size() == 2);
    for (std::size_t i = 0; i < cl.size(); ++i)
        for (std::size_t j = i + 1; j < cl.size(); ++j)
            CHECK(g.has_edge(cl[i], cl[j]));
    CHECK(greedy_clique(complete_graph(5)).size() == 5);
}

TEST_CASE("edge labeled chromatic number")
{
    // single vertex, no edges
    CHECK(edge_labeled_chromatic_number(EdgeLabeledGraph{1, 3, {}}).chi == 1);
    // fewer than delta labels present: one class already misses a label
    CHECK(edge_labeled_chromatic_number(EdgeLabeledGraph{3, 3, {{0, 1, 1}, {1, 2, 2}}}).chi == 1);
    // delta-star: the single class sees every label, two suffice
    EdgeLabeledGraph star{4, 3, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}}};
    auto sres = edge_labeled_chromatic_number(star);
    CHECK(sres.chi == 2);

    // lab-chromatic never exceeds the ordinary chromatic number
    Rng rng{22};
    for (int t = 0; t < 20; ++t) {
        auto g = random_graph(4 + rng.below(4), 1, 2, rng);
        std::vector<LabeledEdge> les;
        for (const auto & [u, v] : g.edges())
            les.push_back({u, v, 1 + rng.below(3)});
        EdgeLabeledGraph lg{g.vertex_count(), 3, les};
        auto lr = edge_labeled_chromatic_number(lg);
        CHECK(lr.chi <= chromatic_number(g).chi);
        // witness check: every class misses some label
        for (int c = 0; c < lr.chi; ++c) {
            unsigned seen = 0;
            for (const auto & e : lg.labeled_edges())
                if (lr.classes[static_cast<std::size_t>(e.u)] == c
                    && lr.classes[static_cast<std::size_t>(e.v)] == c)
                    seen |= 1u << e.label;
            CHECK(seen != 0b1110u);
        }
    }
}

TEST_CASE("delta star and theta")
{
    auto w3 = delta_star(complete_graph(3), 3);
    REQUIRE(w3.has_value());
    CHECK(verify_delta_star(complete_graph(3), 3, *w3));
    CHECK(!delta_star(complete_graph(4), 3).has_value());

    auto h3 = h_delta(3);
    auto wh = delta_star(h3.graph(), 3);
    REQUIRE(wh.has_value());
    CHECK(verify_delta_star(h3.graph(), 3, *wh));
    auto th = theta_hom(h3.graph(), *wh, 3);
    CHECK(is_homomorphism(h3.graph(), h3.graph(), th));

    // hand-made witness with empty removed sets on a single edge
    DeltaStarWitness w;
    w.c0 = {0, 1};
    w.c1 = {1, 0};
    auto k2 = complete_graph(2);
    CHECK(verify_delta_star(k2, 3, w));
    auto tk = theta_hom(k2, w, 3);
    CHECK(is_homomorphism(k2, h3.graph(), tk));
    for (int v : tk)
        CHECK(h3.is_p(v));

    // broken witness: R0 touches R1
    DeltaStarWitness bad = w;
    bad.r0 = {0};
    bad.r1 = {1};
    bad.c0 = {-1, 0};
    bad.c1 = {0, -1};
    CHECK(!verify_delta_star(k2, 3, bad));
}

TEST_CASE("anti game labellings")
{
    EdgeLabeledGraph e{2, 3, {{0, 1, 1}}};
    CHECK(!check_anti_game(e, {1, 1}));
    CHECK(check_anti_game(e, {1, 2}));
    CHECK(check_anti_game(e, {2, 2}));
}

TEST_CASE("sinkless orientation")
{
    auto c4 = cycle_graph(4);
    auto o = sinkless_orientation(c4);
    REQUIRE(o.has_value());
    std::vector<int> outdeg(4, 0);
    const auto & es = c4.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        ++outdeg[static_cast<std::size_t>(o->dir[i] ? es[i].first : es[i].second)];
    for (int v = 0; v < 4; ++v)
        CHECK(outdeg[static_cast<std::size_t>(v)] >= 1);

    CHECK(!sinkless_orientation(complete_graph(2)).has_value());
    CHECK(!sinkless_orientation(FiniteGraph{4, {{0, 1}, {1, 2}, {2, 3}}}).has_value());
    CHECK(sinkless_orientation(complete_graph(4)).has_value());
    // isolated vertices are fine
    CHECK(sinkless_orientation(FiniteGraph{4, {{0, 1}, {1, 2}, {0, 2}}}).has_value());
}

TEST_CASE("edge grabbing")
{
    // K4 with a proper 3-edge-colouring by perfect matchings
    EdgeLabeledGraph k4{4, 3,
        {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 2}, {0, 3, 3}, {1, 2, 3}}};
    auto o = sinkless_orientation(k4.graph());
    REQUIRE(o.has_value());
    auto lab = edge_grabbing_from_orientation(k4, *o);
    CHECK(check_anti_game(k4, lab));

    EdgeLabeledGraph tiny{2, 3, {{0, 1, 1}}};
    CHECK_THROWS(edge_grabbing_from_orientation(tiny, Orientation{{true}}));

    Rng rng{23};
    for (int t = 0; t < 10; ++t) {
        auto g = random_regular_edge_coloured(6 + 2 * rng.below(5), 3, rng);
        auto og = sinkless_orientation(g.graph());
        REQUIRE(og.has_value());
        CHECK(check_anti_game(g, edge_grabbing_from_orientation(g, *og)));
    }
}

TEST_CASE("hedetniemi gaps")
{
    auto g1 = hedetniemi_gap(complete_graph(3), complete_graph(3));
    CHECK(g1.chi_g == 3);
    CHECK(g1.chi_h == 3);
    CHECK(g1.chi_product == 3);

    auto g2 = hedetniemi_gap(complete_graph(2), cycle_graph(5));
    CHECK(g2.chi_g == 2);
    CHECK(g2.chi_h == 3);
    CHECK(g2.chi_product == 2);

    auto g3 = hedetniemi_gap(named_graph("grotzsch"), complete_graph(1));
    CHECK(g3.chi_g == 4);
    CHECK(g3.chi_h == 1);
    CHECK(g3.chi_product == 1);

    Rng rng{24};
    for (int t = 0; t < 20; ++t) {
        auto g = random_graph(2 + rng.below(5), 1, 2, rng);
        auto h = random_graph(2 + rng.below(5), 1, 2, rng);
        auto gap = hedetniemi_gap(g, h);
        CHECK(gap.chi_product <= std::min(gap.chi_g, gap.chi_h));
    }
}

TEST_CASE("size guards")
{
    FiniteGraph big{65, {}};
    CHECK_THROWS_AS((void)chromatic_number(big), SizeGuardError);
    CHECK(chromatic_number(big, true).chi == 1);

    FiniteGraph mid{25, {}};
    CHECK_THROWS_AS((void)delta_star(mid, 3), SizeGuardError);

    CHECK_THROWS_AS((void)hedetniemi_gap(complete_graph(9), complete_graph(9)), SizeGuardError);
}
