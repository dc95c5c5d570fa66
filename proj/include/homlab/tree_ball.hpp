#pragma once

#include <homlab/labeled_graph.hpp>

#include <map>
#include <vector>

namespace homlab {

// Radius-r ball of the Cayley graph of the free product of delta
// involutions. Vertices are reduced words over generators 1..delta
// (no letter repeats consecutively), generated level by level in
// lexicographic order, so vertex 0 is the root (empty word) and ids
// are stable. The edge w -- w+g carries label g; the labelling is a
// proper edge delta-colouring.
class TreeBall {
public:
    TreeBall(int delta, int radius);

    int delta() const { return delta_; }
    int radius() const { return radius_; }
    int vertex_count() const { return static_cast<int>(words_.size()); }

    const std::vector<int> & word(int v) const { return words_[static_cast<std::size_t>(v)]; }
    int depth_of(int v) const { return static_cast<int>(words_[static_cast<std::size_t>(v)].size()); }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }       // -1 for root
    int parent_label(int v) const { return parent_label_[static_cast<std::size_t>(v)]; }
    int first_letter(int v) const { return words_[static_cast<std::size_t>(v)].empty() ? 0 : words_[static_cast<std::size_t>(v)][0]; }

    // child of v along generator g, or -1 if outside the ball / equal to parent
    int child(int v, int g) const;

    // vertex with the given reduced word, or -1
    int index_of(const std::vector<int> & word) const;

    // ids of all depth-k vertices (contiguous range)
    int level_begin(int k) const { return level_begin_[static_cast<std::size_t>(k)]; }
    int level_end(int k) const { return level_begin_[static_cast<std::size_t>(k) + 1]; }

    // left multiplication by generator g: the id of g * word(v), or -1
    // if the result lies outside the ball
    int left_mul(int g, int v) const;

    const EdgeLabeledGraph & as_labeled_graph() const { return labeled_; }

private:
    int delta_, radius_;
    std::vector<std::vector<int>> words_;
    std::vector<int> parent_, parent_label_;
    std::vector<std::vector<int>> child_;  // vertex * (delta+1) flattened via child_[v][g]
    std::vector<int> level_begin_;
    std::map<std::vector<int>, int> index_;
    EdgeLabeledGraph labeled_;
};

TreeBall tree_ball(int delta, int radius);

}
