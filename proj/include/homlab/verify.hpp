#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homlab {

// One checked claim of the verification suite. `detail` summarizes
// what was checked (counts, parameters) or names the first violation.
struct ClaimResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<ClaimResult> claims;

    bool all_passed() const
    {
        for (const auto & c : claims)
            if (!c.passed)
                return false;
        return true;
    }
};

enum class Budget { Small, Medium, Large };

Budget budget_from_string(const std::string & s);

// chi(h_delta(d)) == 2d-2 for d in {3,4,5}
ClaimResult claim_hdelta_chromatic();
// the canonical witness R0 = V0 + apex, R1 = V1 + apex passes the
// delta-(*) verifier for d in {3,4,5}
ClaimResult claim_hdelta_witness();
// over every labelled graph on 6 vertices (all 2^15 edge sets),
// delta-(*) with delta=3 holds iff the graph maps into h_delta(3);
// small budget restricts to 5 vertices
ClaimResult claim_delta_star_oracle(Budget budget = Budget::Large);
// chi <= delta implies delta-(*) implies chi <= 2*delta-2 on seeded
// random graphs, n <= 10, delta in {3,4}
ClaimResult claim_sandwich(std::uint64_t seed, int count = 200);
// Chvatal and Grotzsch satisfy 3-(*) and their explicit
// homomorphisms into h_delta(3) verify
ClaimResult claim_named_graphs();
// label-preserving depth-2 approximations over seeded acyclic
// edge-labelled targets: girth > 4, root map edge-preserving and
// injective per component
ClaimResult claim_homgraph_shadow(std::uint64_t seed, int count = 20);
// games on all small targets against a play-enumeration oracle,
// plus per-vertex Bob-win coverage and payoff monotonicity
ClaimResult claim_game_suite(std::uint64_t seed, int tables = 100);
// sinkless orientation and edge grabbing on seeded 3-regular
// properly edge-coloured graphs, checked as anti-game labellings
ClaimResult claim_orientation_chain(std::uint64_t seed, int count = 50);
// chi(G x H) <= min(chi(G), chi(H)) on seeded random pairs
ClaimResult claim_hedetniemi(std::uint64_t seed, int pairs = 100);

// suite in {prop53, sandwich, homgraph, games, all}
SuiteReport run_suite(const std::string & suite, std::uint64_t seed, Budget budget);

}
