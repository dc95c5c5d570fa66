#pragma once

#include <homlab/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace homlab {

struct LabeledEdge {
    int u, v;   // u < v
    int label;  // generator index, 1..delta
};

// FiniteGraph plus one label per edge from {1..delta}. The labels need
// not form a proper edge colouring.
class EdgeLabeledGraph {
public:
    EdgeLabeledGraph() = default;

    EdgeLabeledGraph(int n, int delta, std::vector<LabeledEdge> edges) : delta_(delta)
    {
        if (delta < 2)
            throw std::invalid_argument{"delta must be at least 2"};
        std::vector<std::pair<int, int>> plain;
        plain.reserve(edges.size());
        for (auto & e : edges) {
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.label < 1 || e.label > delta)
                throw std::invalid_argument{"edge label out of range"};
            plain.emplace_back(e.u, e.v);
        }
        graph_ = FiniteGraph{n, plain};
        if (graph_.edge_count() != static_cast<int>(edges.size()))
            throw std::invalid_argument{"duplicate edges in labelled graph"};

        edges_ = std::move(edges);
        std::sort(edges_.begin(), edges_.end(), [](const LabeledEdge & a, const LabeledEdge & b) {
            return std::pair{a.u, a.v} < std::pair{b.u, b.v};
        });

        inc_.assign(static_cast<std::size_t>(n), {});
        label_adj_.assign(static_cast<std::size_t>(delta + 1),
            std::vector<Bitset>(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))));
        labels_at_.assign(static_cast<std::size_t>(n), 0u);
        for (const auto & e : edges_) {
            inc_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.label);
            inc_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.label);
            label_adj_[static_cast<std::size_t>(e.label)][static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
            label_adj_[static_cast<std::size_t>(e.label)][static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(e.u));
            labels_at_[static_cast<std::size_t>(e.u)] |= 1u << e.label;
            labels_at_[static_cast<std::size_t>(e.v)] |= 1u << e.label;
        }
    }

    int delta() const { return delta_; }
    const FiniteGraph & graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

    const std::vector<LabeledEdge> & labeled_edges() const { return edges_; }

    // (neighbour, label) pairs
    const std::vector<std::pair<int, int>> & incident(int v) const
    {
        return inc_[static_cast<std::size_t>(v)];
    }

    // vertices reachable from v along a label-l edge
    const Bitset & label_adj_row(int label, int v) const
    {
        return label_adj_[static_cast<std::size_t>(label)][static_cast<std::size_t>(v)];
    }

    // label of edge (u, v); throws if the edge is absent
    int label_of(int u, int v) const
    {
        for (auto & [w, l] : inc_[static_cast<std::size_t>(u)])
            if (w == v)
                return l;
        throw std::invalid_argument{"label_of: no such edge"};
    }

    // bit l set iff some label-l edge is incident to v
    unsigned labels_present(int v) const { return labels_at_[static_cast<std::size_t>(v)]; }

    bool has_label_edge(int v, int label) const
    {
        return (labels_at_[static_cast<std::size_t>(v)] >> label) & 1u;
    }

    // true iff each vertex has exactly one incident edge per label,
    // i.e. the graph is delta-regular and the labelling is a proper
    // edge delta-colouring
    bool is_properly_edge_coloured() const
    {
        for (int v = 0; v < vertex_count(); ++v) {
            if (graph_.degree(v) != delta_)
                return false;
            unsigned seen = 0;
            for (auto & [u, l] : incident(v)) {
                (void)u;
                if (seen & (1u << l))
                    return false;
                seen |= 1u << l;
            }
        }
        return true;
    }

private:
    FiniteGraph graph_;
    int delta_ = 2;
    std::vector<LabeledEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
    std::vector<std::vector<Bitset>> label_adj_;
    std::vector<unsigned> labels_at_;
};

}
