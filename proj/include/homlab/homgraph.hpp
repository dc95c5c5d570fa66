#pragma once

#include <homlab/labeled_graph.hpp>
#include <homlab/tree_ball.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace homlab {

struct HomApproxEdge {
    int a, b;   // hom indices, a < b
    int label;  // generator 1..delta inducing the shift
};

// Finite-depth approximation of the homomorphism graph: vertices are
// all homomorphisms from the depth-r ball into the target (label
// preserving in the e-variant), edges connect shift-compatible pairs
// that pass the one-step extension certificate.
struct HomGraphApprox {
    int delta = 0;
    int depth = 0;
    bool label_preserving = false;
    TreeBall ball;
    std::vector<std::vector<int>> homs;  // image per ball vertex, lexicographic order
    std::vector<HomApproxEdge> edges;    // parallel edges with distinct labels possible
    std::vector<int> root_image;         // homs[i][0]

    int vertex_count() const { return static_cast<int>(homs.size()); }
};

inline constexpr std::size_t kHomApproxGuard = 1u << 20;

// plain variant: ball homomorphisms into an unlabelled target
HomGraphApprox build_hom_approx(int delta, int depth, const FiniteGraph & target);

// e-variant: ball homomorphisms preserving edge labels
HomGraphApprox build_hom_approx_labeled(int delta, int depth, const EdgeLabeledGraph & target);

struct HomGraphReport {
    std::map<int, std::int64_t> degree_histogram;
    std::optional<int> shortest_cycle;       // parallel edges count as 2-cycles
    bool root_map_edge_preserving = false;
    std::optional<bool> root_map_injective_per_component;  // e-variant only
};

HomGraphReport analyze(const HomGraphApprox & approx, const FiniteGraph & target);
HomGraphReport analyze_labeled(const HomGraphApprox & approx, const EdgeLabeledGraph & target);

}
