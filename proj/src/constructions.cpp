#include <homlab/constructions.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homlab {

FiniteGraph complete_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument{"complete_graph: n must be positive"};
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return FiniteGraph{n, std::move(edges)};
}

FiniteGraph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument{"cycle_graph: n must be at least 3"};
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return FiniteGraph{n, std::move(edges)};
}

FiniteGraph categorical_product(const FiniteGraph & g, const FiniteGraph & h)
{
    const int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const auto & [gu, gv] : g.edges())
        for (const auto & [hu, hv] : h.edges()) {
            edges.emplace_back(gu * nh + hu, gv * nh + hv);
            edges.emplace_back(gu * nh + hv, gv * nh + hu);
        }
    return FiniteGraph{g.vertex_count() * nh, std::move(edges)};
}

HDeltaGraph::HDeltaGraph(int delta) : delta_(delta)
{
    if (delta < 3)
        throw std::invalid_argument{"h_delta: delta must be at least 3"};
    const int m = delta - 1;
    const int n = 2 * m + m * m + 1;
    std::vector<std::pair<int, int>> edges;
    auto v0 = [&](int i) { return i; };
    auto v1 = [&](int j) { return m + j; };
    auto p = [&](int i, int j) { return 2 * m + i * m + j; };
    const int dagger = n - 1;

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            edges.emplace_back(v0(i), v0(j));
            edges.emplace_back(v1(i), v1(j));
        }
    // P is the categorical product of the two cliques
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < m; ++j2)
                    if (i != i2 && j != j2 && p(i, j) < p(i2, j2))
                        edges.emplace_back(p(i, j), p(i2, j2));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            edges.emplace_back(dagger, p(i, j));
            for (int i2 = 0; i2 < m; ++i2)
                if (i2 != i)
                    edges.emplace_back(v0(i), p(i2, j));
            // vertex j of V1 is adjacent to (i, j2) for every j2 != j
            for (int j2 = 0; j2 < m; ++j2)
                if (j2 != j)
                    edges.emplace_back(v1(j), p(i, j2));
        }
    graph_ = FiniteGraph{n, std::move(edges)};
}

HDeltaGraph h_delta(int delta)
{
    return HDeltaGraph{delta};
}

namespace {
    struct UnionFind {
        std::vector<int> p;
        explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
        int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
        void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
    };
}

G0Truncation g0_truncation(int delta, const std::vector<G0Level> & seq)
{
    if (delta < 3)
        throw std::invalid_argument{"g0_truncation: delta must be at least 3"};
    const int n = static_cast<int>(seq.size());
    for (int k = 0; k < n; ++k) {
        if (static_cast<int>(seq[static_cast<std::size_t>(k)].prefix.size()) != k)
            throw std::invalid_argument{"g0_truncation: |s_k| must equal k"};
        for (int b : seq[static_cast<std::size_t>(k)].prefix)
            if (b != 0 && b != 1)
                throw std::invalid_argument{"g0_truncation: prefixes are binary"};
        if (seq[static_cast<std::size_t>(k)].label < 1 || seq[static_cast<std::size_t>(k)].label > delta)
            throw std::invalid_argument{"g0_truncation: label out of range"};
    }

    const int total = 1 << n;
    std::vector<LabeledEdge> edges;
    for (int k = 0; k < n; ++k) {
        const auto & lv = seq[static_cast<std::size_t>(k)];
        int head = 0;  // prefix bits, first character most significant
        for (int b : lv.prefix)
            head = head * 2 + b;
        const int tail_bits = n - k - 1;
        for (int c = 0; c < (1 << tail_bits); ++c) {
            int u = ((head * 2 + 0) << tail_bits) | c;
            int v = ((head * 2 + 1) << tail_bits) | c;
            edges.push_back({u, v, lv.label});
        }
    }

    // component filter: keep components spanning every label
    UnionFind uf{total};
    for (const auto & e : edges)
        uf.unite(e.u, e.v);
    std::vector<unsigned> comp_labels(static_cast<std::size_t>(total), 0u);
    for (const auto & e : edges)
        comp_labels[static_cast<std::size_t>(uf.find(e.u))] |= 1u << e.label;
    const unsigned all = ((1u << delta) - 1u) << 1;

    std::vector<int> keep, pos(static_cast<std::size_t>(total), -1);
    for (int v = 0; v < total; ++v)
        if ((comp_labels[static_cast<std::size_t>(uf.find(v))] & all) == all) {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<LabeledEdge> kept_edges;
    for (const auto & e : edges)
        if (pos[static_cast<std::size_t>(e.u)] >= 0)
            kept_edges.push_back({pos[static_cast<std::size_t>(e.u)], pos[static_cast<std::size_t>(e.v)], e.label});

    return G0Truncation{EdgeLabeledGraph{static_cast<int>(keep.size()), delta, std::move(kept_edges)}, std::move(keep)};
}

FiniteGraph named_graph(const std::string & name)
{
    if (name == "petersen") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);          // outer cycle
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
            edges.emplace_back(i, 5 + i);                // spokes
        }
        return FiniteGraph{10, std::move(edges)};
    }
    if (name == "grotzsch") {
        // Mycielski construction over C5: 0..4 the cycle, 5..9 the
        // twins (i+5 adjacent to the neighbours of i), 10 the apex
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, (i + 1) % 5);
            edges.emplace_back(5 + i, (i + 4) % 5);
            edges.emplace_back(10, 5 + i);
        }
        return FiniteGraph{11, std::move(edges)};
    }
    if (name == "chvatal") {
        std::vector<std::pair<int, int>> edges = {
            {0, 1}, {0, 4}, {0, 6}, {0, 9}, {1, 2}, {1, 5}, {1, 7}, {2, 3},
            {2, 6}, {2, 8}, {3, 4}, {3, 7}, {3, 9}, {4, 5}, {4, 8}, {5, 10},
            {5, 11}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10}, {9, 10}, {9, 11}};
        return FiniteGraph{12, std::move(edges)};
    }
    if (name.rfind("cycle(", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(6, name.size() - 7));
        return cycle_graph(n);
    }
    throw std::invalid_argument{"unknown named graph: " + name};
}

FiniteGraph shift_graph_slice(int n, int k)
{
    if (k < 1 || k > n)
        throw std::invalid_argument{"shift_graph_slice: need 1 <= k <= n"};
    // enumerate k-subsets in lexicographic order
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto && self, int start, int depth) -> void {
        if (depth == k) {
            subsets.push_back(cur);
            return;
        }
        for (int x = start; x <= n; ++x) {
            cur[static_cast<std::size_t>(depth)] = x;
            self(self, x + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);

    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        idx[subsets[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto & s = subsets[i];
        for (int b = s.back() + 1; b <= n; ++b) {
            std::vector<int> t(s.begin() + 1, s.end());
            t.push_back(b);
            edges.emplace_back(static_cast<int>(i), idx.at(t));
        }
    }
    return FiniteGraph{static_cast<int>(subsets.size()), std::move(edges)};
}

}
