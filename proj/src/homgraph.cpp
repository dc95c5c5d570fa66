#include <homlab/homgraph.hpp>

#include <homlab/solvers.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace homlab {

namespace {

    int worker_count()
    {
        if (const char * env = std::getenv("HOMLAB_THREADS")) {
            int n = std::atoi(env);
            if (n >= 1)
                return std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency()));
        }
        return 1;
    }

    struct TargetView {
        const FiniteGraph * plain = nullptr;
        const EdgeLabeledGraph * labeled = nullptr;

        int vertex_count() const { return plain ? plain->vertex_count() : labeled->vertex_count(); }

        // candidate images for a ball vertex whose parent maps to w,
        // connected by edge label g (ignored in the plain variant)
        const Bitset & row(int g, int w) const
        {
            return plain ? plain->adj_row(w) : labeled->label_adj_row(g, w);
        }
    };

    // all ball homomorphisms with the given root image, in
    // lexicographic order of the image vector
    void enumerate_from_root(const TreeBall & ball, const TargetView & target, int root,
        std::vector<std::vector<int>> & out)
    {
        const int nb = ball.vertex_count();
        std::vector<int> img(static_cast<std::size_t>(nb), -1);
        img[0] = root;
        // ball vertices are in BFS order, so the parent is always
        // assigned before the child
        auto rec = [&](auto && self, int v) -> void {
            if (v == nb) {
                out.push_back(img);
                if (out.size() > kHomApproxGuard)
                    throw SizeGuardError{"build_hom_approx: too many ball homomorphisms"};
                return;
            }
            const Bitset & cand = target.row(ball.parent_label(v), img[static_cast<std::size_t>(ball.parent(v))]);
            for (auto w = cand.first(); w < cand.size(); w = cand.next(w + 1)) {
                img[static_cast<std::size_t>(v)] = static_cast<int>(w);
                self(self, v + 1);
            }
            img[static_cast<std::size_t>(v)] = -1;
        };
        rec(rec, 1);
    }

    struct VecHash {
        std::size_t operator()(const std::vector<int> & v) const
        {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    HomGraphApprox build(int delta, int depth, const TargetView & target, bool label_preserving)
    {
        if (depth < 1)
            throw std::invalid_argument{"build_hom_approx: depth must be at least 1"};
        if (target.vertex_count() == 0)
            throw std::invalid_argument{"build_hom_approx: empty target"};

        HomGraphApprox approx{delta, depth, label_preserving, tree_ball(delta, depth), {}, {}, {}};
        const TreeBall & ball = approx.ball;

        // enumeration parallelises over root images; concatenation in
        // root order keeps vertex ids deterministic
        const int nt = target.vertex_count();
        std::vector<std::vector<std::vector<int>>> per_root(static_cast<std::size_t>(nt));
        int workers = std::min(worker_count(), nt);
        if (workers <= 1) {
            for (int x = 0; x < nt; ++x)
                enumerate_from_root(ball, target, x, per_root[static_cast<std::size_t>(x)]);
        }
        else {
            std::vector<std::thread> pool;
            std::atomic<bool> overflow{false};
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        for (int x = w; x < nt; x += workers)
                            enumerate_from_root(ball, target, x, per_root[static_cast<std::size_t>(x)]);
                    }
                    catch (const SizeGuardError &) {
                        overflow = true;
                    }
                });
            for (auto & t : pool)
                t.join();
            if (overflow)
                throw SizeGuardError{"build_hom_approx: too many ball homomorphisms"};
        }
        std::size_t total = 0;
        for (const auto & v : per_root)
            total += v.size();
        if (total > kHomApproxGuard)
            throw SizeGuardError{"build_hom_approx: too many ball homomorphisms"};
        approx.homs.reserve(total);
        for (auto & v : per_root)
            for (auto & h : v)
                approx.homs.push_back(std::move(h));
        for (const auto & h : approx.homs)
            approx.root_image.push_back(h[0]);

        // Extension certificate (e-variant): every depth-r word u off
        // the alpha_i side must allow fresh children, i.e. the image
        // of u must have a j-labelled edge for every j != last(u). In
        // the plain variant the parent edge already witnesses degree
        // >= 1, so the certificate is automatic.
        auto cert = [&](const std::vector<int> & h, int gen) -> bool {
            if (!label_preserving)
                return true;
            for (int v = ball.level_begin(depth); v < ball.level_end(depth); ++v) {
                if (ball.first_letter(v) == gen)
                    continue;
                unsigned present = target.labeled->labels_present(h[static_cast<std::size_t>(v)]);
                unsigned needed = (((1u << delta) - 1u) << 1) & ~(1u << ball.parent_label(v));
                if ((present & needed) != needed)
                    return false;
            }
            return true;
        };

        // shift adjacency per generator: h' must agree with the shift
        // of h on every position constrained by the overlap
        const int nb = ball.vertex_count();
        std::vector<std::vector<int>> constrained(static_cast<std::size_t>(delta + 1));
        std::vector<std::vector<int>> shifted(static_cast<std::size_t>(delta + 1));
        for (int g = 1; g <= delta; ++g)
            for (int v = 0; v < nb; ++v) {
                int lm = ball.left_mul(g, v);
                if (lm >= 0) {
                    constrained[static_cast<std::size_t>(g)].push_back(v);   // position of h'
                    shifted[static_cast<std::size_t>(g)].push_back(lm);      // position of h
                }
            }

        for (int g = 1; g <= delta; ++g) {
            const auto & cpos = constrained[static_cast<std::size_t>(g)];
            const auto & spos = shifted[static_cast<std::size_t>(g)];
            // bucket homs by their constrained signature
            std::unordered_map<std::vector<int>, std::vector<int>, VecHash> buckets;
            std::vector<char> certs(approx.homs.size());
            for (std::size_t i = 0; i < approx.homs.size(); ++i) {
                certs[i] = cert(approx.homs[i], g) ? 1 : 0;
                std::vector<int> sig;
                sig.reserve(cpos.size());
                for (int p : cpos)
                    sig.push_back(approx.homs[i][static_cast<std::size_t>(p)]);
                buckets[std::move(sig)].push_back(static_cast<int>(i));
            }
            for (std::size_t i = 0; i < approx.homs.size(); ++i) {
                if (!certs[i])
                    continue;
                std::vector<int> key;
                key.reserve(spos.size());
                for (int p : spos)
                    key.push_back(approx.homs[i][static_cast<std::size_t>(p)]);
                auto it = buckets.find(key);
                if (it == buckets.end())
                    continue;
                for (int j : it->second)
                    if (static_cast<int>(i) < j && certs[static_cast<std::size_t>(j)])
                        approx.edges.push_back({static_cast<int>(i), j, g});
            }
        }
        std::sort(approx.edges.begin(), approx.edges.end(), [](const HomApproxEdge & a, const HomApproxEdge & b) {
            return std::tuple{a.a, a.b, a.label} < std::tuple{b.a, b.b, b.label};
        });

        // finite shadow of "Root is a homomorphism": adjacent homs
        // must have adjacent root images
        for (const auto & e : approx.edges) {
            int ra = approx.root_image[static_cast<std::size_t>(e.a)];
            int rb = approx.root_image[static_cast<std::size_t>(e.b)];
            bool adj = target.plain ? target.plain->has_edge(ra, rb)
                                    : target.labeled->graph().has_edge(ra, rb);
            if (!adj)
                throw std::logic_error{"build_hom_approx: root map not edge-preserving"};
        }
        return approx;
    }

}

HomGraphApprox build_hom_approx(int delta, int depth, const FiniteGraph & target)
{
    TargetView view;
    view.plain = &target;
    return build(delta, depth, view, false);
}

HomGraphApprox build_hom_approx_labeled(int delta, int depth, const EdgeLabeledGraph & target)
{
    if (target.delta() != delta)
        throw std::invalid_argument{"build_hom_approx_labeled: delta mismatch"};
    TargetView view;
    view.labeled = &target;
    return build(delta, depth, view, true);
}

namespace {

    HomGraphReport analyze_impl(const HomGraphApprox & approx, const FiniteGraph & target_graph)
    {
        HomGraphReport report;
        const int n = approx.vertex_count();

        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));  // (other, edge id)
        for (std::size_t e = 0; e < approx.edges.size(); ++e) {
            adj[static_cast<std::size_t>(approx.edges[e].a)].emplace_back(approx.edges[e].b, static_cast<int>(e));
            adj[static_cast<std::size_t>(approx.edges[e].b)].emplace_back(approx.edges[e].a, static_cast<int>(e));
        }

        for (int v = 0; v < n; ++v)
            ++report.degree_histogram[static_cast<int>(adj[static_cast<std::size_t>(v)].size())];

        // girth search on the multigraph: BFS from every vertex, an
        // edge closing back (other than the one we arrived on) closes
        // a cycle; parallel edges give length 2
        std::optional<int> best;
        for (int s = 0; s < n; ++s) {
            std::vector<int> dist(static_cast<std::size_t>(n), -1);
            std::vector<int> via(static_cast<std::size_t>(n), -1);
            std::deque<int> q{s};
            dist[static_cast<std::size_t>(s)] = 0;
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (auto & [u, e] : adj[static_cast<std::size_t>(v)]) {
                    if (e == via[static_cast<std::size_t>(v)])
                        continue;
                    if (dist[static_cast<std::size_t>(u)] < 0) {
                        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                        via[static_cast<std::size_t>(u)] = e;
                        q.push_back(u);
                    }
                    else {
                        int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(u)] + 1;
                        if (!best || len < *best)
                            best = len;
                    }
                }
            }
        }
        report.shortest_cycle = best;

        report.root_map_edge_preserving = true;
        for (const auto & e : approx.edges)
            if (!target_graph.has_edge(approx.root_image[static_cast<std::size_t>(e.a)],
                    approx.root_image[static_cast<std::size_t>(e.b)]))
                report.root_map_edge_preserving = false;

        if (approx.label_preserving) {
            // injectivity of the root map on each connected component
            std::vector<int> comp(static_cast<std::size_t>(n), -1);
            bool injective = true;
            for (int s = 0; s < n && injective; ++s) {
                if (comp[static_cast<std::size_t>(s)] >= 0)
                    continue;
                std::vector<bool> seen(static_cast<std::size_t>(target_graph.vertex_count()), false);
                std::deque<int> q{s};
                comp[static_cast<std::size_t>(s)] = s;
                while (!q.empty() && injective) {
                    int v = q.front();
                    q.pop_front();
                    int r = approx.root_image[static_cast<std::size_t>(v)];
                    if (seen[static_cast<std::size_t>(r)])
                        injective = false;
                    seen[static_cast<std::size_t>(r)] = true;
                    for (auto & [u, e] : adj[static_cast<std::size_t>(v)]) {
                        (void)e;
                        if (comp[static_cast<std::size_t>(u)] < 0) {
                            comp[static_cast<std::size_t>(u)] = s;
                            q.push_back(u);
                        }
                    }
                }
            }
            report.root_map_injective_per_component = injective;
        }
        return report;
    }

}

HomGraphReport analyze(const HomGraphApprox & approx, const FiniteGraph & target)
{
    return analyze_impl(approx, target);
}

HomGraphReport analyze_labeled(const HomGraphApprox & approx, const EdgeLabeledGraph & target)
{
    return analyze_impl(approx, target.graph());
}

}
