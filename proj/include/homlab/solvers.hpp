#pragma once

#include <homlab/constructions.hpp>
#include <homlab/labeled_graph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace homlab {

// thrown by exponential procedures when an instance exceeds its size
// guard and no override was given
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
};

struct HomResult {
    std::optional<std::vector<int>> map;  // image per pattern vertex
    SearchStats stats;
};

bool is_homomorphism(const FiniteGraph & g, const FiniteGraph & h, const std::vector<int> & map);
bool is_homomorphism_labeled(const EdgeLabeledGraph & g, const EdgeLabeledGraph & h,
    const std::vector<int> & map);

// Backtracking search for an edge-preserving map g -> h. Vertices are
// assigned in descending-degree order (ties by index); candidate sets
// are bitsets narrowed by forward checking. `pins` are (pattern
// vertex, target vertex) pre-assignments. Deterministic.
HomResult find_hom(const FiniteGraph & g, const FiniteGraph & h,
    const std::vector<std::pair<int, int>> & pins = {});

// label-preserving variant; requires g.delta() == h.delta()
HomResult find_hom_labeled(const EdgeLabeledGraph & g, const EdgeLabeledGraph & h);

struct ChromaticResult {
    int chi = 0;
    std::vector<int> colouring;  // witness, colours 0..chi-1
    SearchStats stats;
};

inline constexpr int kChromaticGuard = 64;
inline constexpr int kDeltaStarGuard = 24;
inline constexpr int kHedetniemiGuard = 64;  // on |V(G)| * |V(H)|

// exact chromatic number; iterative deepening via find_hom(g, K_n)
// with a greedy clique pinned to distinct colours
ChromaticResult chromatic_number(const FiniteGraph & g, bool override_guard = false);

// greedy clique, vertices tried in descending-degree order
std::vector<int> greedy_clique(const FiniteGraph & g);

struct EdgeLabeledChromaticResult {
    int chi = 0;
    std::vector<int> classes;  // witness, classes 0..chi-1
};

// least n such that some c: V -> n leaves every class missing at
// least one edge label
EdgeLabeledChromaticResult edge_labeled_chromatic_number(const EdgeLabeledGraph & h);

struct DeltaStarWitness {
    std::vector<int> r0, r1;  // sorted vertex sets, no edge between them
    // proper (delta-1)-colourings of V \ r0 and V \ r1; entries for
    // vertices inside the removed set are -1
    std::vector<int> c0, c1;
};

// exhaustive search for a delta-(*) witness: R0 ranges over all
// vertex subsets with chi(V \ R0) <= delta-1; for each, R1 is taken
// maximal (all vertices with no neighbour in R0), which is optimal
// since enlarging R1 only shrinks the set that must stay colourable.
std::optional<DeltaStarWitness> delta_star(const FiniteGraph & h, int delta,
    bool override_guard = false);

bool verify_delta_star(const FiniteGraph & h, int delta, const DeltaStarWitness & w);

// the explicit homomorphism into h_delta(delta) built from a witness:
// apex on R0 n R1, V0-vertex c0(v) on R1 \ R0, V1-vertex c1(v) on
// R0 \ R1, P-vertex (c0(v), c1(v)) elsewhere; verified before return
std::vector<int> theta_hom(const FiniteGraph & h, const DeltaStarWitness & w, int delta);

// true iff no edge labelled i has both endpoints labelled i
bool check_anti_game(const EdgeLabeledGraph & g, const std::vector<int> & label);

struct Orientation {
    // dir[e] = true: edges()[e] oriented u -> v, else v -> u
    std::vector<bool> dir;
};

// orientation with out-degree >= 1 at every vertex of degree >= 1;
// nullopt iff some component with an edge is a tree
std::optional<Orientation> sinkless_orientation(const FiniteGraph & g);

// every vertex grabs its outgoing edge of minimal label; the grabbed
// labels form an anti-game labelling. Requires a delta-regular graph
// with a proper edge delta-colouring and a sinkless orientation.
std::vector<int> edge_grabbing_from_orientation(const EdgeLabeledGraph & g, const Orientation & orient);

struct HedetniemiGap {
    int chi_g, chi_h, chi_product;
};

HedetniemiGap hedetniemi_gap(const FiniteGraph & g, const FiniteGraph & h, bool override_guard = false);

}
