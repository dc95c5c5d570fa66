#pragma once

#include <homlab/constructions.hpp>
#include <homlab/rng.hpp>

namespace homlab {

// Erdos-Renyi style graph, each pair an edge with probability num/den.
FiniteGraph random_graph(int n, int num, int den, Rng & rng);

// Random G0 level sequence of depth n over delta labels; guarantees
// every label appears when n >= delta.
std::vector<G0Level> random_g0_seq(int delta, int n, Rng & rng);

// delta-regular simple graph with a proper edge delta-colouring,
// built as a union of delta random perfect matchings (n must be even).
// Retries matchings that would duplicate an edge.
EdgeLabeledGraph random_regular_edge_coloured(int n, int delta, Rng & rng);

}
