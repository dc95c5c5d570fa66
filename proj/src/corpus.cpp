#include <homlab/corpus.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace homlab {

FiniteGraph random_graph(int n, int num, int den, Rng & rng)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                edges.emplace_back(u, v);
    return FiniteGraph{n, std::move(edges)};
}

std::vector<G0Level> random_g0_seq(int delta, int n, Rng & rng)
{
    // The prefixes of any vertex form a chain, so the edge labelling
    // is proper at every vertex exactly when comparable level prefixes
    // carry distinct labels. Properness keeps the generator shifts on
    // the truncation functional, which is what the finite depth
    // analysis relies on; we enforce it by rejection. Prefixes are
    // biased towards extending earlier ones, since only vertices above
    // a full chain of delta distinct labels meet every label.
    auto is_prefix = [](const std::vector<int> & a, const std::vector<int> & b) {
        return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
    };
    std::vector<G0Level> seq;
    for (int k = 0; k < n; ++k) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000)
                throw std::runtime_error{"random_g0_seq: could not sample a proper level sequence"};
            G0Level lv;
            if (k > 0 && !rng.chance(1, 4)) {
                const auto & parent = seq[static_cast<std::size_t>(rng.below(k))].prefix;
                if (static_cast<int>(parent.size()) < k)
                    lv.prefix = parent;
            }
            while (static_cast<int>(lv.prefix.size()) < k)
                lv.prefix.push_back(rng.below(2));
            unsigned used = 0;
            int chain = 0;
            for (int j = 0; j < k; ++j)
                if (is_prefix(seq[static_cast<std::size_t>(j)].prefix, lv.prefix)) {
                    used |= 1u << seq[static_cast<std::size_t>(j)].label;
                    ++chain;
                }
            if (chain >= delta)
                continue;
            // first delta levels cycle through the labels so every
            // label occurs at least once
            if (k < delta) {
                lv.label = k + 1;
                if (used >> lv.label & 1)
                    continue;
            }
            else {
                std::vector<int> free;
                for (int l = 1; l <= delta; ++l)
                    if (!(used >> l & 1))
                        free.push_back(l);
                lv.label = free[static_cast<std::size_t>(rng.below(static_cast<int>(free.size())))];
            }
            seq.push_back(std::move(lv));
            break;
        }
    }
    return seq;
}

EdgeLabeledGraph random_regular_edge_coloured(int n, int delta, Rng & rng)
{
    if (n % 2 != 0 || n < 2 * delta)
        throw std::invalid_argument{"random_regular_edge_coloured: n must be even and >= 2*delta"};
    std::vector<LabeledEdge> edges;
    std::set<std::pair<int, int>> used;
    for (int label = 1; label <= delta; ++label) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 10000)
                throw std::runtime_error{"random_regular_edge_coloured: could not sample matching"};
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
            std::vector<std::pair<int, int>> matching;
            bool ok = true;
            for (int i = 0; i < n && ok; i += 2) {
                int u = perm[static_cast<std::size_t>(i)], v = perm[static_cast<std::size_t>(i + 1)];
                if (u > v)
                    std::swap(u, v);
                if (used.count({u, v}))
                    ok = false;
                else
                    matching.emplace_back(u, v);
            }
            if (!ok)
                continue;
            for (auto & [u, v] : matching) {
                used.insert({u, v});
                edges.push_back({u, v, label});
            }
            break;
        }
    }
    return EdgeLabeledGraph{n, delta, std::move(edges)};
}

}
