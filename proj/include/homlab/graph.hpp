#pragma once

#include <homlab/bitset.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace homlab {

// Simple undirected loopless graph on vertices 0..n-1. Immutable after
// construction. Adjacency is kept both as sorted neighbour lists and as
// one bitset row per vertex; the bitset rows are the solver-facing
// representation.
class FiniteGraph {
public:
    FiniteGraph() = default;

    FiniteGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument{"vertex count must be nonnegative"};
        adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (auto & [u, v] : edges) {
            if (u > v)
                std::swap(u, v);
            if (u < 0 || v >= n)
                throw std::invalid_argument{"edge endpoint out of range"};
            if (u == v)
                throw std::invalid_argument{"loops are not allowed"};
            if (adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)))
                continue;
            adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
            adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        }
        neigh_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const auto & row = adj_[static_cast<std::size_t>(v)];
            for (auto u = row.first(); u < row.size(); u = row.next(u + 1)) {
                neigh_[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
                if (v < static_cast<int>(u))
                    edges_.emplace_back(v, static_cast<int>(u));
            }
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const
    {
        return u != v && adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    const std::vector<int> & neighbours(int v) const { return neigh_[static_cast<std::size_t>(v)]; }
    const Bitset & adj_row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(neigh_[static_cast<std::size_t>(v)].size()); }

    int max_degree() const
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    // edges as (u, v) with u < v, sorted lexicographically
    const std::vector<std::pair<int, int>> & edges() const { return edges_; }

    // induced subgraph on the given sorted vertex list; returns the
    // subgraph and keeps the caller responsible for the index map
    // (position in `verts` = new id).
    FiniteGraph induced(const std::vector<int> & verts) const
    {
        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> es;
        for (auto & [u, v] : edges_)
            if (pos[static_cast<std::size_t>(u)] >= 0 && pos[static_cast<std::size_t>(v)] >= 0)
                es.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
        return FiniteGraph{static_cast<int>(verts.size()), std::move(es)};
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::vector<int>> neigh_;
    std::vector<std::pair<int, int>> edges_;
};

}
