#include <homlab/solvers.hpp>

#include <algorithm>
#include <numeric>

namespace homlab {

bool is_homomorphism(const FiniteGraph & g, const FiniteGraph & h, const std::vector<int> & map)
{
    if (static_cast<int>(map.size()) != g.vertex_count())
        return false;
    for (int im : map)
        if (im < 0 || im >= h.vertex_count())
            return false;
    for (const auto & [u, v] : g.edges())
        if (!h.has_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

bool is_homomorphism_labeled(const EdgeLabeledGraph & g, const EdgeLabeledGraph & h,
    const std::vector<int> & map)
{
    if (!is_homomorphism(g.graph(), h.graph(), map))
        return false;
    for (const auto & e : g.labeled_edges())
        if (!h.label_adj_row(e.label, map[static_cast<std::size_t>(e.u)]).test(static_cast<std::size_t>(map[static_cast<std::size_t>(e.v)])))
            return false;
    return true;
}

namespace {

    // shared backtracking core: `row` yields the candidate-narrowing
    // bitset for mapping across a pattern edge with a given label
    // (label 0 in the unlabelled case).
    struct HomSearch {
        const FiniteGraph & g;
        int target_n;
        // (neighbour, label) pairs per pattern vertex
        std::vector<std::vector<std::pair<int, int>>> pattern_inc;
        const Bitset * (*row_fn)(const void *, int, int);
        const void * target;
        SearchStats stats;

        std::vector<int> order;       // pattern vertices, descending degree
        std::vector<int> assignment;  // image or -1

        bool run(std::vector<Bitset> & dom)
        {
            assignment.assign(static_cast<std::size_t>(g.vertex_count()), -1);
            return rec(0, dom);
        }

        bool rec(std::size_t pos, std::vector<Bitset> & dom)
        {
            if (pos == order.size())
                return true;
            int v = order[pos];
            const Bitset & cand = dom[static_cast<std::size_t>(v)];
            for (auto w = cand.first(); w < cand.size(); w = cand.next(w + 1)) {
                ++stats.nodes_expanded;
                assignment[static_cast<std::size_t>(v)] = static_cast<int>(w);
                // forward checking: narrow unassigned neighbours
                std::vector<Bitset> next = dom;
                bool dead = false;
                for (auto & [u, label] : pattern_inc[static_cast<std::size_t>(v)]) {
                    if (assignment[static_cast<std::size_t>(u)] >= 0)
                        continue;
                    next[static_cast<std::size_t>(u)] &= *row_fn(target, label, static_cast<int>(w));
                    if (next[static_cast<std::size_t>(u)].none()) {
                        dead = true;
                        break;
                    }
                }
                if (!dead && rec(pos + 1, next))
                    return true;
                assignment[static_cast<std::size_t>(v)] = -1;
            }
            return false;
        }
    };

    std::vector<int> degree_order(const FiniteGraph & g)
    {
        std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
        return order;
    }

}

HomResult find_hom(const FiniteGraph & g, const FiniteGraph & h,
    const std::vector<std::pair<int, int>> & pins)
{
    HomResult result;
    if (g.vertex_count() == 0) {
        result.map = std::vector<int>{};
        return result;
    }
    if (h.vertex_count() == 0)
        return result;

    std::vector<Bitset> dom(static_cast<std::size_t>(g.vertex_count()),
        Bitset(static_cast<std::size_t>(h.vertex_count()), true));
    for (auto & [v, w] : pins) {
        Bitset single{static_cast<std::size_t>(h.vertex_count())};
        single.set(static_cast<std::size_t>(w));
        dom[static_cast<std::size_t>(v)] = single;
    }
    // pins constrain their neighbours up front
    for (auto & [v, w] : pins)
        for (int u : g.neighbours(v))
            dom[static_cast<std::size_t>(u)] &= h.adj_row(w);

    HomSearch search{
        .g = g,
        .target_n = h.vertex_count(),
        .pattern_inc = {},
        .row_fn = [](const void * t, int, int w) {
            return &static_cast<const FiniteGraph *>(t)->adj_row(w);
        },
        .target = &h,
        .stats = {},
        .order = degree_order(g),
        .assignment = {}};
    search.pattern_inc.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbours(v))
            search.pattern_inc[static_cast<std::size_t>(v)].emplace_back(u, 0);

    if (search.run(dom)) {
        result.map = search.assignment;
        if (!is_homomorphism(g, h, *result.map))
            throw std::logic_error{"find_hom produced an invalid map"};
    }
    result.stats = search.stats;
    return result;
}

HomResult find_hom_labeled(const EdgeLabeledGraph & g, const EdgeLabeledGraph & h)
{
    if (g.delta() != h.delta())
        throw std::invalid_argument{"find_hom_labeled: delta mismatch"};
    HomResult result;
    if (g.vertex_count() == 0) {
        result.map = std::vector<int>{};
        return result;
    }
    if (h.vertex_count() == 0)
        return result;

    std::vector<Bitset> dom(static_cast<std::size_t>(g.vertex_count()),
        Bitset(static_cast<std::size_t>(h.vertex_count()), true));

    HomSearch search{
        .g = g.graph(),
        .target_n = h.vertex_count(),
        .pattern_inc = {},
        .row_fn = [](const void * t, int label, int w) {
            return &static_cast<const EdgeLabeledGraph *>(t)->label_adj_row(label, w);
        },
        .target = &h,
        .stats = {},
        .order = degree_order(g.graph()),
        .assignment = {}};
    search.pattern_inc.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (auto & [u, label] : g.incident(v))
            search.pattern_inc[static_cast<std::size_t>(v)].emplace_back(u, label);

    if (search.run(dom)) {
        result.map = search.assignment;
        if (!is_homomorphism_labeled(g, h, *result.map))
            throw std::logic_error{"find_hom_labeled produced an invalid map"};
    }
    result.stats = search.stats;
    return result;
}

std::vector<int> greedy_clique(const FiniteGraph & g)
{
    std::vector<int> clique;
    for (int v : degree_order(g)) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok)
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

ChromaticResult chromatic_number(const FiniteGraph & g, bool override_guard)
{
    ChromaticResult result;
    if (g.vertex_count() == 0)
        return result;
    if (g.vertex_count() > kChromaticGuard && !override_guard)
        throw SizeGuardError{"chromatic_number: graph exceeds size guard"};
    if (g.edge_count() == 0) {
        result.chi = 1;
        result.colouring.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        return result;
    }

    auto clique = greedy_clique(g);
    for (int k = std::max<int>(2, static_cast<int>(clique.size()));; ++k) {
        std::vector<std::pair<int, int>> pins;
        for (std::size_t i = 0; i < clique.size(); ++i)
            pins.emplace_back(clique[i], static_cast<int>(i));
        auto hom = find_hom(g, complete_graph(k), pins);
        result.stats.nodes_expanded += hom.stats.nodes_expanded;
        if (hom.map) {
            result.chi = k;
            result.colouring = *hom.map;
            return result;
        }
    }
}

EdgeLabeledChromaticResult edge_labeled_chromatic_number(const EdgeLabeledGraph & h)
{
    const int n = h.vertex_count();
    if (n < 1)
        throw std::invalid_argument{"edge_labeled_chromatic_number: empty vertex set"};
    const int delta = h.delta();
    const unsigned all_labels = ((1u << delta) - 1u) << 1;

    // backtracking: assign classes in vertex order, tracking the label
    // set spanned inside each class; a class spanning every label is
    // rejected. Classes are interchangeable, so vertex v may only open
    // class (max used + 1).
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<unsigned> spanned;

    auto rec = [&](auto && self, int v, int k) -> bool {
        if (v == n)
            return true;
        int used = 0;
        for (int u = 0; u < v; ++u)
            used = std::max(used, cls[static_cast<std::size_t>(u)] + 1);
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            unsigned added = 0;
            bool ok = true;
            for (auto & [u, label] : h.incident(v))
                if (u < v && cls[static_cast<std::size_t>(u)] == c)
                    added |= 1u << label;
            if (((spanned[static_cast<std::size_t>(c)] | added) & all_labels) == all_labels)
                ok = false;
            if (!ok)
                continue;
            unsigned before = spanned[static_cast<std::size_t>(c)];
            spanned[static_cast<std::size_t>(c)] |= added;
            cls[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1, k))
                return true;
            cls[static_cast<std::size_t>(v)] = -1;
            spanned[static_cast<std::size_t>(c)] = before;
        }
        return false;
    };

    for (int k = 1;; ++k) {
        cls.assign(static_cast<std::size_t>(n), -1);
        spanned.assign(static_cast<std::size_t>(k), 0u);
        if (rec(rec, 0, k))
            return {k, cls};
    }
}

namespace {

    // proper (delta-1)-colouring of the graph induced on V \ removed,
    // or nullopt; `removed` is a bitmask
    std::optional<std::vector<int>> colour_complement(const FiniteGraph & h, std::uint32_t removed, int colours)
    {
        std::vector<int> verts;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (!((removed >> v) & 1u))
                verts.push_back(v);
        auto sub = h.induced(verts);
        std::optional<std::vector<int>> out;
        if (sub.edge_count() == 0) {
            out.emplace(static_cast<std::size_t>(h.vertex_count()), -1);
            for (int v : verts)
                (*out)[static_cast<std::size_t>(v)] = 0;
            return out;
        }
        if (colours == 0)
            return std::nullopt;
        auto hom = find_hom(sub, complete_graph(colours));
        if (!hom.map)
            return std::nullopt;
        out.emplace(static_cast<std::size_t>(h.vertex_count()), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            (*out)[static_cast<std::size_t>(verts[i])] = (*hom.map)[i];
        return out;
    }

    std::vector<int> mask_to_set(std::uint32_t mask, int n)
    {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u)
                out.push_back(v);
        return out;
    }

}

std::optional<DeltaStarWitness> delta_star(const FiniteGraph & h, int delta, bool override_guard)
{
    if (delta < 3)
        throw std::invalid_argument{"delta_star: delta must be at least 3"};
    const int n = h.vertex_count();
    if (n > kDeltaStarGuard && !override_guard)
        throw SizeGuardError{"delta_star: graph exceeds size guard"};
    if (n > 32)
        throw std::invalid_argument{"delta_star: subset enumeration limited to 32 vertices"};
    if (n == 0)
        return DeltaStarWitness{};

    for (std::uint64_t r0 = 0; r0 < (1ull << n); ++r0) {
        auto c0 = colour_complement(h, static_cast<std::uint32_t>(r0), delta - 1);
        if (!c0)
            continue;
        // maximal legal R1: vertices with no neighbour in R0
        std::uint32_t r1 = 0;
        for (int v = 0; v < n; ++v) {
            bool clash = false;
            for (int u : h.neighbours(v))
                if ((r0 >> u) & 1u) {
                    clash = true;
                    break;
                }
            if (!clash)
                r1 |= 1u << v;
        }
        auto c1 = colour_complement(h, r1, delta - 1);
        if (!c1)
            continue;
        DeltaStarWitness w{mask_to_set(static_cast<std::uint32_t>(r0), n), mask_to_set(r1, n), *c0, *c1};
        if (!verify_delta_star(h, delta, w))
            throw std::logic_error{"delta_star produced an invalid witness"};
        return w;
    }
    return std::nullopt;
}

bool verify_delta_star(const FiniteGraph & h, int delta, const DeltaStarWitness & w)
{
    const int n = h.vertex_count();
    std::vector<bool> in0(static_cast<std::size_t>(n)), in1(static_cast<std::size_t>(n));
    for (int v : w.r0)
        in0[static_cast<std::size_t>(v)] = true;
    for (int v : w.r1)
        in1[static_cast<std::size_t>(v)] = true;

    auto check_colouring = [&](const std::vector<bool> & removed, const std::vector<int> & c) {
        if (static_cast<int>(c.size()) != n)
            return false;
        for (int v = 0; v < n; ++v) {
            if (removed[static_cast<std::size_t>(v)])
                continue;
            if (c[static_cast<std::size_t>(v)] < 0 || c[static_cast<std::size_t>(v)] >= delta - 1)
                return false;
        }
        for (const auto & [u, v] : h.edges())
            if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)] &&
                c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)])
                return false;
        return true;
    };

    for (const auto & [u, v] : h.edges()) {
        if ((in0[static_cast<std::size_t>(u)] && in1[static_cast<std::size_t>(v)]) ||
            (in0[static_cast<std::size_t>(v)] && in1[static_cast<std::size_t>(u)]))
            return false;
        // forced consequence: R0 n R1 is independent
        if (in0[static_cast<std::size_t>(u)] && in1[static_cast<std::size_t>(u)] &&
            in0[static_cast<std::size_t>(v)] && in1[static_cast<std::size_t>(v)])
            return false;
    }
    return check_colouring(in0, w.c0) && check_colouring(in1, w.c1);
}

std::vector<int> theta_hom(const FiniteGraph & h, const DeltaStarWitness & w, int delta)
{
    if (!verify_delta_star(h, delta, w))
        throw std::invalid_argument{"theta_hom: invalid witness"};
    const int n = h.vertex_count();
    std::vector<bool> in0(static_cast<std::size_t>(n)), in1(static_cast<std::size_t>(n));
    for (int v : w.r0)
        in0[static_cast<std::size_t>(v)] = true;
    for (int v : w.r1)
        in1[static_cast<std::size_t>(v)] = true;

    auto hd = h_delta(delta);
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        bool r0 = in0[static_cast<std::size_t>(v)], r1 = in1[static_cast<std::size_t>(v)];
        if (r0 && r1)
            map[static_cast<std::size_t>(v)] = hd.apex();
        else if (r1)
            map[static_cast<std::size_t>(v)] = hd.v0_vertex(w.c0[static_cast<std::size_t>(v)]);
        else if (r0)
            map[static_cast<std::size_t>(v)] = hd.v1_vertex(w.c1[static_cast<std::size_t>(v)]);
        else
            map[static_cast<std::size_t>(v)] = hd.p_vertex(w.c0[static_cast<std::size_t>(v)], w.c1[static_cast<std::size_t>(v)]);
    }
    if (!is_homomorphism(h, hd.graph(), map))
        throw std::logic_error{"theta_hom: constructed map is not a homomorphism"};
    return map;
}

bool check_anti_game(const EdgeLabeledGraph & g, const std::vector<int> & label)
{
    if (static_cast<int>(label.size()) != g.vertex_count())
        throw std::invalid_argument{"check_anti_game: labelling not total"};
    for (const auto & e : g.labeled_edges())
        if (label[static_cast<std::size_t>(e.u)] == e.label && label[static_cast<std::size_t>(e.v)] == e.label)
            return false;
    return true;
}

HedetniemiGap hedetniemi_gap(const FiniteGraph & g, const FiniteGraph & h, bool override_guard)
{
    if (g.vertex_count() * h.vertex_count() > kHedetniemiGuard && !override_guard)
        throw SizeGuardError{"hedetniemi_gap: product exceeds size guard"};
    auto prod = categorical_product(g, h);
    HedetniemiGap gap{
        chromatic_number(g, override_guard).chi,
        chromatic_number(h, override_guard).chi,
        chromatic_number(prod, override_guard).chi};
    return gap;
}

}
