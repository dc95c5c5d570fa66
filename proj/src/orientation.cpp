#include <homlab/solvers.hpp>

#include <algorithm>
#include <deque>
#include <map>

namespace homlab {

namespace {

    // edge index lookup for (u, v), u < v
    std::map<std::pair<int, int>, int> edge_index(const FiniteGraph & g)
    {
        std::map<std::pair<int, int>, int> idx;
        for (std::size_t e = 0; e < g.edges().size(); ++e)
            idx[g.edges()[e]] = static_cast<int>(e);
        return idx;
    }

}

std::optional<Orientation> sinkless_orientation(const FiniteGraph & g)
{
    const int n = g.vertex_count();
    Orientation orient;
    orient.dir.assign(g.edges().size(), false);
    auto eidx = edge_index(g);

    auto set_dir = [&](int from, int to) {
        int u = std::min(from, to), v = std::max(from, to);
        orient.dir[static_cast<std::size_t>(eidx.at({u, v}))] = (from == u);
    };

    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<bool> edge_done(g.edges().size(), false);

    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0)
            continue;
        // collect the component
        std::vector<int> verts;
        std::deque<int> queue{start};
        comp[static_cast<std::size_t>(start)] = start;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            verts.push_back(v);
            for (int u : g.neighbours(v))
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = start;
                    queue.push_back(u);
                }
        }
        if (verts.size() == 1 && g.degree(start) == 0)
            continue;  // isolated vertex, nothing to orient

        // find a cycle via a BFS spanning tree and its first non-tree
        // edge; a tree component admits no sinkless orientation (leaf
        // argument)
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::vector<int> depth(static_cast<std::size_t>(n), 0);
        std::vector<bool> tree_edge(g.edges().size(), false);
        parent[static_cast<std::size_t>(start)] = -1;
        for (std::deque<int> q{start}; !q.empty();) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbours(v))
                if (parent[static_cast<std::size_t>(u)] == -2) {
                    parent[static_cast<std::size_t>(u)] = v;
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    tree_edge[static_cast<std::size_t>(eidx.at({std::min(u, v), std::max(u, v)}))] = true;
                    q.push_back(u);
                }
        }
        std::vector<int> cycle;
        for (std::size_t e = 0; e < g.edges().size() && cycle.empty(); ++e) {
            auto [u, v] = g.edges()[e];
            if (tree_edge[e] || comp[static_cast<std::size_t>(u)] != start)
                continue;
            // close the cycle through the lowest common ancestor
            std::vector<int> left{u}, right{v};
            int a = u, b = v;
            while (a != b) {
                if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                    a = parent[static_cast<std::size_t>(a)];
                    left.push_back(a);
                }
                else {
                    b = parent[static_cast<std::size_t>(b)];
                    right.push_back(b);
                }
            }
            cycle.assign(left.begin(), left.end());
            for (auto it = right.rbegin() + 1; it != right.rend(); ++it)
                cycle.push_back(*it);
        }
        if (cycle.empty())
            return std::nullopt;

        // orient the cycle cyclically
        std::vector<bool> on_cycle(static_cast<std::size_t>(n), false);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            on_cycle[static_cast<std::size_t>(cycle[i])] = true;
            set_dir(cycle[i], cycle[(i + 1) % cycle.size()]);
            int a = std::min(cycle[i], cycle[(i + 1) % cycle.size()]);
            int b = std::max(cycle[i], cycle[(i + 1) % cycle.size()]);
            edge_done[static_cast<std::size_t>(eidx.at({a, b}))] = true;
        }

        // BFS from the cycle; each vertex orients its tree edge toward
        // the cycle, giving it an out-edge
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::deque<int> bfs;
        for (int v : cycle) {
            dist[static_cast<std::size_t>(v)] = 0;
            bfs.push_back(v);
        }
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int u : g.neighbours(v))
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    set_dir(u, v);
                    edge_done[static_cast<std::size_t>(eidx.at({std::min(u, v), std::max(u, v)}))] = true;
                    bfs.push_back(u);
                }
        }

        // remaining edges: farther-from-cycle endpoint outward, ties
        // from the higher index
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            auto [u, v] = g.edges()[e];
            if (comp[static_cast<std::size_t>(u)] != start || edge_done[e])
                continue;
            edge_done[e] = true;
            if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(v)])
                set_dir(u, v);
            else if (dist[static_cast<std::size_t>(u)] < dist[static_cast<std::size_t>(v)])
                set_dir(v, u);
            else
                set_dir(v, u);  // u < v, orient from the higher index
        }
    }
    return orient;
}

std::vector<int> edge_grabbing_from_orientation(const EdgeLabeledGraph & g, const Orientation & orient)
{
    if (!g.is_properly_edge_coloured())
        throw std::invalid_argument{
            "edge_grabbing_from_orientation: graph must be delta-regular with a proper edge colouring"};
    if (orient.dir.size() != g.graph().edges().size())
        throw std::invalid_argument{"edge_grabbing_from_orientation: orientation size mismatch"};

    const int n = g.vertex_count();
    std::vector<int> grabbed(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < g.labeled_edges().size(); ++e) {
        const auto & le = g.labeled_edges()[e];
        int from = orient.dir[e] ? le.u : le.v;
        auto & slot = grabbed[static_cast<std::size_t>(from)];
        if (slot == 0 || le.label < slot)
            slot = le.label;  // grab the outgoing edge of minimal label
    }
    for (int v = 0; v < n; ++v)
        if (grabbed[static_cast<std::size_t>(v)] == 0)
            throw std::invalid_argument{"edge_grabbing_from_orientation: orientation is not sinkless"};
    if (!check_anti_game(g, grabbed))
        throw std::logic_error{"edge_grabbing_from_orientation: output failed anti-game check"};
    return grabbed;
}

}
