#include <homlab/tree_ball.hpp>

#include <stdexcept>

namespace homlab {

TreeBall::TreeBall(int delta, int radius) : delta_(delta), radius_(radius)
{
    if (delta < 3)
        throw std::invalid_argument{"tree ball requires delta >= 3"};
    if (radius < 0)
        throw std::invalid_argument{"tree ball radius must be nonnegative"};

    words_.push_back({});
    parent_.push_back(-1);
    parent_label_.push_back(0);
    level_begin_ = {0, 1};

    for (int k = 1; k <= radius; ++k) {
        int lo = level_begin_[static_cast<std::size_t>(k - 1)];
        int hi = level_begin_[static_cast<std::size_t>(k)];
        for (int v = lo; v < hi; ++v)
            for (int g = 1; g <= delta; ++g) {
                if (parent_label_[static_cast<std::size_t>(v)] == g)
                    continue;
                auto w = words_[static_cast<std::size_t>(v)];
                w.push_back(g);
                words_.push_back(std::move(w));
                parent_.push_back(v);
                parent_label_.push_back(g);
            }
        level_begin_.push_back(static_cast<int>(words_.size()));
    }

    for (int v = 0; v < vertex_count(); ++v)
        index_[words_[static_cast<std::size_t>(v)]] = v;

    child_.assign(static_cast<std::size_t>(vertex_count()), std::vector<int>(static_cast<std::size_t>(delta + 1), -1));
    std::vector<LabeledEdge> edges;
    for (int v = 1; v < vertex_count(); ++v) {
        child_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])][static_cast<std::size_t>(parent_label_[static_cast<std::size_t>(v)])] = v;
        edges.push_back({parent_[static_cast<std::size_t>(v)], v, parent_label_[static_cast<std::size_t>(v)]});
    }
    labeled_ = EdgeLabeledGraph{vertex_count(), delta, std::move(edges)};
}

int TreeBall::child(int v, int g) const
{
    return child_[static_cast<std::size_t>(v)][static_cast<std::size_t>(g)];
}

int TreeBall::index_of(const std::vector<int> & word) const
{
    auto it = index_.find(word);
    return it == index_.end() ? -1 : it->second;
}

int TreeBall::left_mul(int g, int v) const
{
    const auto & w = words_[static_cast<std::size_t>(v)];
    std::vector<int> r;
    if (!w.empty() && w[0] == g)
        r.assign(w.begin() + 1, w.end());
    else {
        r.reserve(w.size() + 1);
        r.push_back(g);
        r.insert(r.end(), w.begin(), w.end());
    }
    return index_of(r);
}

TreeBall tree_ball(int delta, int radius)
{
    return TreeBall{delta, radius};
}

}
