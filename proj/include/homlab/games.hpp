#pragma once

#include <homlab/labeled_graph.hpp>
#include <homlab/tree_ball.hpp>

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlab {

struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Player { Alice, Bob };

std::string to_string(Player p);

// One finite-depth game: players alternately extend a partial ball
// homomorphism rooted at `root_vertex` level by level. In round k
// Alice labels the level-k words starting with the generator, Bob the
// rest. Alice wins iff the labelling value of the completed depth-d
// homomorphism avoids `payoff`.
struct GameSpec {
    // exactly one of the two targets is set; the labelled target adds
    // the edge-label-preservation move constraint (e-variant)
    std::optional<FiniteGraph> plain_target;
    std::optional<EdgeLabeledGraph> labeled_target;

    int delta = 3;
    int root_vertex = 0;
    int generator = 1;         // 1..delta
    std::vector<int> payoff;   // R; Alice wins iff c(h) not in R
    int depth = 1;

    // total on every complete depth-d ball homomorphism with root
    // image root_vertex (images indexed in ball vertex order)
    std::function<int(const std::vector<int> &)> labeling;
    // optional explicit form of `labeling`, used for serialization
    std::map<std::vector<int>, int> labeling_table;

    const FiniteGraph & target_graph() const
    {
        return plain_target ? *plain_target : labeled_target->graph();
    }
    bool label_preserving() const { return labeled_target.has_value(); }
};

// installs `labeling` from `labeling_table`
void use_table_labeling(GameSpec & spec);

// A move-selection table: position key -> move. A position key is the
// concatenation of all images played so far, in block order
// (Alice round 1, Bob round 1, Alice round 2, ...); a move lists the
// images of the mover's next block in ball vertex order.
struct Strategy {
    Player player = Player::Alice;
    std::map<std::vector<int>, std::vector<int>> table;
};

struct GameResult {
    Player winner = Player::Alice;
    Strategy strategy;
    std::uint64_t positions = 0;
};

// exact minimax winner by backward induction, plus a strategy that
// wins every play for the winner
GameResult solve_game(const GameSpec & spec);

struct TraceEntry {
    int round;
    Player mover;
    std::vector<int> vertices;  // ball vertex ids labelled this move
    std::vector<int> images;
};

struct PlayResult {
    std::vector<int> hom;  // completed ball homomorphism
    std::vector<TraceEntry> trace;
};

// Composes Alice-winning strategies, one per generator, into a single
// depth-d ball homomorphism rooted at the shared start vertex: the
// strategy for generator i controls the alpha_i side. Asserts
// c(h) not in payoff_i for every i and throws (naming the failing
// index) otherwise.
PlayResult stitch_alice(const std::vector<GameSpec> & specs, const std::vector<Strategy> & strategies);

struct CrossPlayResult {
    std::vector<int> hom_a, hom_b;
    std::vector<TraceEntry> trace_a, trace_b;
};

// Plays two Bob-winning strategies against each other across a target
// edge (x, x'), feeding each side's moves to the other as Alice's
// moves. Yields shift-compatible homomorphisms with c(h) in payoff_a
// and c(h') in payoff_b; asserted before return.
CrossPlayResult bob_vs_bob(const GameSpec & spec_a, const GameSpec & spec_b,
    const Strategy & strategy_a, const Strategy & strategy_b);

inline constexpr int kDerivedColouringUndefined = 0;

// d(x) = least i with Bob winning the game at x with payoff {i}, or
// kDerivedColouringUndefined when no such i exists at this depth.
// The labeling receives complete ball homomorphisms as usual.
std::vector<int> derived_colouring(const FiniteGraph & target, int delta, int depth,
    const std::function<int(const std::vector<int> &)> & labeling);
std::vector<int> derived_colouring_labeled(const EdgeLabeledGraph & target, int depth,
    const std::function<int(const std::vector<int> &)> & labeling);

nlohmann::json game_spec_to_json(const GameSpec & spec);
nlohmann::json strategy_to_json(const Strategy & s);
Strategy strategy_from_json(const nlohmann::json & j);
nlohmann::json trace_to_json(const std::vector<TraceEntry> & trace);

}
