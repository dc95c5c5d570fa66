#pragma once

#include <homlab/labeled_graph.hpp>
#include <homlab/tree_ball.hpp>

#include <string>
#include <vector>

namespace homlab {

FiniteGraph complete_graph(int n);
FiniteGraph cycle_graph(int n);

// categorical (tensor) product: (g,h) ~ (g',h') iff g~g' and h~h';
// vertex (g,h) has id g * |V(H)| + h
FiniteGraph categorical_product(const FiniteGraph & g, const FiniteGraph & h);

// The maximal graph with property delta-(*): two disjoint copies of
// K_{delta-1}, their categorical product P, and an apex joined to all
// of P. Vertex layout (documented in the README):
//   V0 copy of K_{delta-1}:  0 .. delta-2           (label i = id)
//   V1 copy of K_{delta-1}:  delta-1 .. 2delta-3
//   P = K_{delta-1} x K_{delta-1}: 2(delta-1) + i*(delta-1) + j
//   apex: last vertex
class HDeltaGraph {
public:
    explicit HDeltaGraph(int delta);

    int delta() const { return delta_; }
    const FiniteGraph & graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }

    int v0_vertex(int i) const { return i; }
    int v1_vertex(int j) const { return delta_ - 1 + j; }
    int p_vertex(int i, int j) const { return 2 * (delta_ - 1) + i * (delta_ - 1) + j; }
    int apex() const { return graph_.vertex_count() - 1; }

    bool is_v0(int v) const { return v < delta_ - 1; }
    bool is_v1(int v) const { return v >= delta_ - 1 && v < 2 * (delta_ - 1); }
    bool is_p(int v) const { return v >= 2 * (delta_ - 1) && v < apex(); }

private:
    int delta_;
    FiniteGraph graph_;
};

HDeltaGraph h_delta(int delta);

// One level of a finite G0-style truncation: prefix s_k (|s_k| = k)
// and the generator label e(k) of the edges it spawns.
struct G0Level {
    std::vector<int> prefix;  // bits
    int label;                // 1..delta
};

struct G0Truncation {
    EdgeLabeledGraph graph;
    // original vertex of each kept vertex: the binary string of length
    // n read as a number, first character most significant
    std::vector<int> original_vertex;
};

// Vertices are all binary strings of length n = seq.size(); level k
// contributes the edges (s_k 0 c, s_k 1 c) labelled e(k). The result
// is restricted to vertices whose connected component spans at least
// one edge of every label in 1..delta, then reindexed.
G0Truncation g0_truncation(int delta, const std::vector<G0Level> & seq);

// chvatal | grotzsch | petersen | cycle(n)
FiniteGraph named_graph(const std::string & name);

// Finite slice of the shift graph: vertices are the k-subsets of
// {1..n}; S = {a1<...<ak} is adjacent to (S \ {a1}) + {b} for each
// b > ak. Corpus generator only.
FiniteGraph shift_graph_slice(int n, int k);

}
