// Acceptance suite: one line per criterion, nonzero exit on failure.
#include <homlab/verify.hpp>

#include <cstdio>
#include <functional>
#include <vector>

int main()
{
    using homlab::ClaimResult;

    struct Criterion {
        const char * title;
        std::function<ClaimResult()> run;
    };

    const std::uint64_t seed = 2026;
    std::vector<Criterion> criteria{
        {"1 chromatic number of the maximal delta-(*) graphs (4, 6, 8)",
            [] { return homlab::claim_hdelta_chromatic(); }},
        {"2 canonical delta-(*) witness accepted for delta 3..5",
            [] { return homlab::claim_hdelta_witness(); }},
        {"3 delta-(*) vs hom-into-H3 oracle over all 6-vertex graphs",
            [] { return homlab::claim_delta_star_oracle(homlab::Budget::Large); }},
        {"4 sandwich chi<=delta => delta-(*) => chi<=2delta-2, 200 graphs",
            [=] { return homlab::claim_sandwich(seed, 200); }},
        {"5 chvatal and grotzsch: 3-(*) plus verified homomorphism",
            [] { return homlab::claim_named_graphs(); }},
        {"6 labeled hom approximations: girth > 4, root map checks, 20 targets",
            [=] { return homlab::claim_homgraph_shadow(seed, 20); }},
        {"7 game minimax vs play-enumeration oracle, 100 labelings",
            [=] { return homlab::claim_game_suite(seed, 100); }},
        {"8 sinkless orientation -> edge grabbing -> anti-game, 50 graphs",
            [=] { return homlab::claim_orientation_chain(seed, 50); }},
        {"9 chi(GxH) <= min(chi(G), chi(H)), 100 pairs",
            [=] { return homlab::claim_hedetniemi(seed, 100); }},
    };

    bool ok = true;
    for (const auto & c : criteria) {
        auto res = c.run();
        ok = ok && res.passed;
        std::printf("[%s] %s — %s\n", res.passed ? "PASS" : "FAIL", c.title, res.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("[INFO] 10 infinitary results are covered by the finite suites above, "
                "not by direct computation\n");
    return ok ? 0 : 1;
}
