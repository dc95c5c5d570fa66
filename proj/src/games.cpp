#include <homlab/games.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <unordered_map>

namespace homlab {

std::string to_string(Player p)
{
    return p == Player::Alice ? "alice" : "bob";
}

void use_table_labeling(GameSpec & spec)
{
    spec.labeling = [&spec](const std::vector<int> & h) {
        auto it = spec.labeling_table.find(h);
        if (it == spec.labeling_table.end())
            throw GameError{"labeling table is not total"};
        return it->second;
    };
}

namespace {

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

    void validate_spec(const GameSpec & spec)
    {
        if (!spec.plain_target && !spec.labeled_target)
            throw GameError{"game spec has no target"};
        if (spec.plain_target && spec.labeled_target)
            throw GameError{"game spec has two targets"};
        if (spec.labeled_target && spec.labeled_target->delta() != spec.delta)
            throw GameError{"game spec delta mismatch"};
        const auto & tg = spec.target_graph();
        if (spec.root_vertex < 0 || spec.root_vertex >= tg.vertex_count())
            throw GameError{"game spec start vertex out of range"};
        if (spec.generator < 1 || spec.generator > spec.delta)
            throw GameError{"game spec generator out of range"};
        if (spec.depth < 1)
            throw GameError{"game spec depth must be at least 1"};
        if (!spec.labeling)
            throw GameError{"game spec has no labeling"};
        // continuation guarantee: every position must admit a move
        for (int v = 0; v < tg.vertex_count(); ++v) {
            if (spec.labeled_target) {
                for (int l = 1; l <= spec.delta; ++l)
                    if (!spec.labeled_target->has_label_edge(v, l))
                        throw GameError{"dead position reachable: target vertex lacks a label-" +
                            std::to_string(l) + " edge"};
            }
            else if (tg.degree(v) == 0)
                throw GameError{"dead position reachable: isolated target vertex"};
        }
    }

    // Shared machinery: ball, per-round move blocks, legal-move
    // enumeration, minimax with transposition caching on the
    // canonical position key (images in block order).
    struct GameEngine {
        const GameSpec & spec;
        TreeBall ball;
        std::vector<std::vector<int>> blocks;  // A1, B1, A2, B2, ...
        std::vector<int> img;                  // per ball vertex, -1 unassigned
        std::unordered_map<std::vector<int>, bool, VecHash> memo;
        std::uint64_t positions = 0;

        explicit GameEngine(const GameSpec & s) : spec(s), ball(s.delta, s.depth)
        {
            for (int k = 1; k <= spec.depth; ++k) {
                std::vector<int> alice, bob;
                for (int v = ball.level_begin(k); v < ball.level_end(k); ++v)
                    (ball.first_letter(v) == spec.generator ? alice : bob).push_back(v);
                blocks.push_back(std::move(alice));
                blocks.push_back(std::move(bob));
            }
            img.assign(static_cast<std::size_t>(ball.vertex_count()), -1);
            img[0] = spec.root_vertex;
        }

        static Player mover_of(std::size_t block) { return block % 2 == 0 ? Player::Alice : Player::Bob; }

        // candidate images of ball vertex v given its parent's image
        std::vector<int> candidates(int v) const
        {
            int parent_img = img[static_cast<std::size_t>(ball.parent(v))];
            if (spec.labeled_target) {
                std::vector<int> out;
                const auto & row = spec.labeled_target->label_adj_row(ball.parent_label(v), parent_img);
                for (auto w = row.first(); w < row.size(); w = row.next(w + 1))
                    out.push_back(static_cast<int>(w));
                return out;
            }
            return spec.plain_target->neighbours(parent_img);
        }

        // enumerates legal block assignments in lexicographic order;
        // returns false once exhausted. `state` holds per-vertex
        // candidate indices.
        struct MoveIter {
            std::vector<std::vector<int>> cand;
            std::vector<std::size_t> pos;
            bool first = true;

            bool next(std::vector<int> & move)
            {
                if (first) {
                    first = false;
                    for (const auto & c : cand)
                        if (c.empty())
                            return false;
                    pos.assign(cand.size(), 0);
                }
                else {
                    std::size_t i = cand.size();
                    while (i > 0) {
                        --i;
                        if (++pos[i] < cand[i].size())
                            break;
                        pos[i] = 0;
                        if (i == 0)
                            return false;
                    }
                    if (pos == std::vector<std::size_t>(cand.size(), 0))
                        return false;
                }
                move.resize(cand.size());
                for (std::size_t i = 0; i < cand.size(); ++i)
                    move[i] = cand[i][pos[i]];
                return true;
            }
        };

        MoveIter moves(std::size_t block)
        {
            MoveIter it;
            for (int v : blocks[block])
                it.cand.push_back(candidates(v));
            return it;
        }

        void apply(std::size_t block, const std::vector<int> & move, std::vector<int> & key)
        {
            for (std::size_t i = 0; i < move.size(); ++i)
                img[static_cast<std::size_t>(blocks[block][i])] = move[i];
            key.insert(key.end(), move.begin(), move.end());
        }

        void unapply(std::size_t block, std::size_t key_len, std::vector<int> & key)
        {
            for (int v : blocks[block])
                img[static_cast<std::size_t>(v)] = -1;
            key.resize(key_len);
        }

        bool alice_wins_terminal()
        {
            int value = spec.labeling(img);
            return std::find(spec.payoff.begin(), spec.payoff.end(), value) == spec.payoff.end();
        }

        bool alice_wins(std::size_t block, std::vector<int> & key)
        {
            if (block == blocks.size())
                return alice_wins_terminal();
            auto found = memo.find(key);
            if (found != memo.end())
                return found->second;
            ++positions;
            auto memo_key = key;

            bool alice_to_move = mover_of(block) == Player::Alice;
            auto it = moves(block);
            std::vector<int> move;
            bool any = false, result = !alice_to_move;
            std::size_t len = key.size();
            while (it.next(move)) {
                any = true;
                apply(block, move, key);
                bool w = alice_wins(block + 1, key);
                unapply(block, len, key);
                if (w == alice_to_move) {
                    result = w;
                    break;
                }
            }
            if (!any)
                throw GameError{"dead position reached during search"};
            memo[std::move(memo_key)] = result;
            return result;
        }
    };

}

GameResult solve_game(const GameSpec & spec)
{
    validate_spec(spec);
    GameEngine eng{spec};
    std::vector<int> key;
    bool alice = eng.alice_wins(0, key);

    GameResult result;
    result.winner = alice ? Player::Alice : Player::Bob;
    result.strategy.player = result.winner;

    // collect the winner's moves over every position reachable while
    // the winner follows the table and the opponent plays anything
    auto collect = [&](auto && self, std::size_t block, std::vector<int> & k) -> void {
        if (block == eng.blocks.size())
            return;
        bool winners_turn = GameEngine::mover_of(block) == result.winner;
        auto it = eng.moves(block);
        std::vector<int> move;
        std::size_t len = k.size();
        while (it.next(move)) {
            eng.apply(block, move, k);
            bool w = eng.alice_wins(block + 1, k);
            if (!winners_turn) {
                self(self, block + 1, k);
                eng.unapply(block, len, k);
                continue;
            }
            if (w == alice) {
                result.strategy.table[std::vector<int>(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(len))] = move;
                self(self, block + 1, k);
                eng.unapply(block, len, k);
                return;
            }
            eng.unapply(block, len, k);
        }
    };
    key.clear();
    collect(collect, 0, key);
    result.positions = eng.positions;
    return result;
}

namespace {

    void check_move_legal(const GameSpec & spec, const TreeBall & ball, const std::vector<int> & img,
        int v, int value)
    {
        int parent_img = img[static_cast<std::size_t>(ball.parent(v))];
        bool ok = spec.labeled_target
            ? spec.labeled_target->label_adj_row(ball.parent_label(v), parent_img).test(static_cast<std::size_t>(value))
            : spec.plain_target->has_edge(parent_img, value);
        if (!ok)
            throw GameError{"illegal move during composed play"};
    }

    // position key of a game after the first `rounds` full rounds,
    // rebuilt from a globally assembled ball labelling
    std::vector<int> key_after_rounds(const GameEngine & eng, const std::vector<int> & img, int rounds)
    {
        std::vector<int> key;
        for (int k = 0; k < rounds; ++k)
            for (std::size_t b = 2 * static_cast<std::size_t>(k); b <= 2 * static_cast<std::size_t>(k) + 1; ++b)
                for (int v : eng.blocks[b])
                    key.push_back(img[static_cast<std::size_t>(v)]);
        return key;
    }

    const std::vector<int> & lookup(const Strategy & s, const std::vector<int> & key, const char * who)
    {
        auto it = s.table.find(key);
        if (it == s.table.end())
            throw GameError{std::string{who} + ": strategy has no entry for reached position"};
        return it->second;
    }

    int eval_labeling(const GameSpec & spec, const std::vector<int> & img)
    {
        return spec.labeling(img);
    }

    bool in_payoff(const GameSpec & spec, int value)
    {
        return std::find(spec.payoff.begin(), spec.payoff.end(), value) != spec.payoff.end();
    }

    void verify_ball_hom(const GameSpec & spec, const TreeBall & ball, const std::vector<int> & img,
        const char * who)
    {
        for (int v = 1; v < ball.vertex_count(); ++v) {
            if (img[static_cast<std::size_t>(v)] < 0)
                throw GameError{std::string{who} + ": incomplete play"};
            check_move_legal(spec, ball, img, v, img[static_cast<std::size_t>(v)]);
        }
    }

}

PlayResult stitch_alice(const std::vector<GameSpec> & specs, const std::vector<Strategy> & strategies)
{
    if (specs.empty() || specs.size() != strategies.size())
        throw GameError{"stitch_alice: need one strategy per spec"};
    const int delta = specs[0].delta;
    if (static_cast<int>(specs.size()) != delta)
        throw GameError{"stitch_alice: need one spec per generator"};
    for (int i = 0; i < delta; ++i) {
        validate_spec(specs[static_cast<std::size_t>(i)]);
        if (specs[static_cast<std::size_t>(i)].generator != i + 1)
            throw GameError{"stitch_alice: spec " + std::to_string(i) + " must use generator " + std::to_string(i + 1)};
        if (specs[static_cast<std::size_t>(i)].root_vertex != specs[0].root_vertex ||
            specs[static_cast<std::size_t>(i)].depth != specs[0].depth ||
            specs[static_cast<std::size_t>(i)].delta != delta)
            throw GameError{"stitch_alice: specs must share start vertex, depth and delta"};
        if (strategies[static_cast<std::size_t>(i)].player != Player::Alice)
            throw GameError{"stitch_alice: strategies must be Alice strategies"};
    }

    std::vector<GameEngine> engines;
    engines.reserve(specs.size());
    for (const auto & s : specs)
        engines.emplace_back(s);
    const TreeBall & ball = engines[0].ball;

    std::vector<int> img(static_cast<std::size_t>(ball.vertex_count()), -1);
    img[0] = specs[0].root_vertex;
    PlayResult out;

    for (int k = 1; k <= specs[0].depth; ++k) {
        for (int i = 0; i < delta; ++i) {
            const auto & eng = engines[static_cast<std::size_t>(i)];
            auto key = key_after_rounds(eng, img, k - 1);
            const auto & move = lookup(strategies[static_cast<std::size_t>(i)], key, "stitch_alice");
            const auto & block = eng.blocks[2 * static_cast<std::size_t>(k) - 2];
            if (move.size() != block.size())
                throw GameError{"stitch_alice: move arity mismatch"};
            for (std::size_t t = 0; t < block.size(); ++t) {
                check_move_legal(specs[static_cast<std::size_t>(i)], ball, img, block[t], move[t]);
                img[static_cast<std::size_t>(block[t])] = move[t];
            }
            out.trace.push_back({k, Player::Alice, block, move});
        }
    }

    verify_ball_hom(specs[0], ball, img, "stitch_alice");
    for (int i = 0; i < delta; ++i) {
        int value = eval_labeling(specs[static_cast<std::size_t>(i)], img);
        if (in_payoff(specs[static_cast<std::size_t>(i)], value))
            throw GameError{"stitch_alice: strategy for generator " + std::to_string(i + 1) +
                " did not win (labeling value " + std::to_string(value) + " lies in its payoff)"};
    }
    out.hom = std::move(img);
    return out;
}

CrossPlayResult bob_vs_bob(const GameSpec & spec_a, const GameSpec & spec_b,
    const Strategy & strategy_a, const Strategy & strategy_b)
{
    validate_spec(spec_a);
    validate_spec(spec_b);
    if (spec_a.generator != spec_b.generator || spec_a.depth != spec_b.depth || spec_a.delta != spec_b.delta)
        throw GameError{"bob_vs_bob: specs must share generator, depth and delta"};
    if (strategy_a.player != Player::Bob || strategy_b.player != Player::Bob)
        throw GameError{"bob_vs_bob: strategies must be Bob strategies"};
    const int gen = spec_a.generator;
    const int x = spec_a.root_vertex, xp = spec_b.root_vertex;
    if (spec_a.label_preserving()) {
        if (!spec_a.labeled_target->label_adj_row(gen, x).test(static_cast<std::size_t>(xp)))
            throw GameError{"bob_vs_bob: start vertices need a generator-labelled edge"};
    }
    else if (!spec_a.target_graph().has_edge(x, xp))
        throw GameError{"bob_vs_bob: start vertices must be adjacent"};

    GameEngine eng_a{spec_a}, eng_b{spec_b};
    const TreeBall & ball = eng_a.ball;
    std::vector<int> img_a(static_cast<std::size_t>(ball.vertex_count()), -1);
    std::vector<int> img_b(static_cast<std::size_t>(ball.vertex_count()), -1);
    img_a[0] = x;
    img_b[0] = xp;
    CrossPlayResult out;

    // alpha_i w in one ball corresponds to w in the other; Alice's
    // round-k move in each game is read off the opposite game's
    // round-(k-1) position
    auto alice_move = [&](const GameEngine & eng, const std::vector<int> & other, int k) {
        std::vector<int> move;
        for (int v : eng.blocks[2 * static_cast<std::size_t>(k) - 2]) {
            int w = ball.left_mul(gen, v);  // strips the leading generator
            move.push_back(other[static_cast<std::size_t>(w)]);
        }
        return move;
    };

    auto play_round = [&](const GameSpec & spec, GameEngine & eng, const Strategy & strat,
                          std::vector<int> & img, const std::vector<int> & other,
                          std::vector<TraceEntry> & trace, int k, const char * who) {
        auto amove = alice_move(eng, other, k);
        const auto & ablock = eng.blocks[2 * static_cast<std::size_t>(k) - 2];
        for (std::size_t t = 0; t < ablock.size(); ++t) {
            check_move_legal(spec, ball, img, ablock[t], amove[t]);
            img[static_cast<std::size_t>(ablock[t])] = amove[t];
        }
        trace.push_back({k, Player::Alice, ablock, amove});

        auto key = key_after_rounds(eng, img, k - 1);
        for (int v : ablock)
            key.push_back(img[static_cast<std::size_t>(v)]);
        const auto & bmove = lookup(strat, key, who);
        const auto & bblock = eng.blocks[2 * static_cast<std::size_t>(k) - 1];
        if (bmove.size() != bblock.size())
            throw GameError{"bob_vs_bob: move arity mismatch"};
        for (std::size_t t = 0; t < bblock.size(); ++t) {
            check_move_legal(spec, ball, img, bblock[t], bmove[t]);
            img[static_cast<std::size_t>(bblock[t])] = bmove[t];
        }
        trace.push_back({k, Player::Bob, bblock, bmove});
    };

    for (int k = 1; k <= spec_a.depth; ++k) {
        play_round(spec_a, eng_a, strategy_a, img_a, img_b, out.trace_a, k, "bob_vs_bob(a)");
        play_round(spec_b, eng_b, strategy_b, img_b, img_a, out.trace_b, k, "bob_vs_bob(b)");
    }

    verify_ball_hom(spec_a, ball, img_a, "bob_vs_bob(a)");
    verify_ball_hom(spec_b, ball, img_b, "bob_vs_bob(b)");
    // shift compatibility at depth d-1
    for (int v = 0; v < ball.vertex_count(); ++v) {
        int lm = ball.left_mul(gen, v);
        if (lm >= 0 && ball.depth_of(v) <= spec_a.depth - 1 && ball.depth_of(lm) <= spec_a.depth - 1 &&
            img_b[static_cast<std::size_t>(v)] != img_a[static_cast<std::size_t>(lm)])
            throw GameError{"bob_vs_bob: cross-play lost shift compatibility"};
    }
    int va = eval_labeling(spec_a, img_a), vb = eval_labeling(spec_b, img_b);
    if (!in_payoff(spec_a, va))
        throw GameError{"bob_vs_bob: Bob strategy for the first game did not win"};
    if (!in_payoff(spec_b, vb))
        throw GameError{"bob_vs_bob: Bob strategy for the second game did not win"};
    out.hom_a = std::move(img_a);
    out.hom_b = std::move(img_b);
    return out;
}

namespace {

    std::vector<int> derived_impl(const GameSpec & base)
    {
        const auto & tg = base.target_graph();
        std::vector<int> colour(static_cast<std::size_t>(tg.vertex_count()), kDerivedColouringUndefined);
        for (int v = 0; v < tg.vertex_count(); ++v)
            for (int i = 1; i <= base.delta; ++i) {
                GameSpec spec = base;
                spec.root_vertex = v;
                spec.generator = i;
                spec.payoff = {i};
                if (solve_game(spec).winner == Player::Bob) {
                    colour[static_cast<std::size_t>(v)] = i;
                    break;
                }
            }
        return colour;
    }

}

std::vector<int> derived_colouring(const FiniteGraph & target, int delta, int depth,
    const std::function<int(const std::vector<int> &)> & labeling)
{
    GameSpec base;
    base.plain_target = target;
    base.delta = delta;
    base.depth = depth;
    base.labeling = labeling;
    return derived_impl(base);
}

std::vector<int> derived_colouring_labeled(const EdgeLabeledGraph & target, int depth,
    const std::function<int(const std::vector<int> &)> & labeling)
{
    GameSpec base;
    base.labeled_target = target;
    base.delta = target.delta();
    base.depth = depth;
    base.labeling = labeling;
    return derived_impl(base);
}

nlohmann::json game_spec_to_json(const GameSpec & spec)
{
    nlohmann::json j;
    j["delta"] = spec.delta;
    j["root_vertex"] = spec.root_vertex;
    j["generator"] = spec.generator;
    j["payoff"] = spec.payoff;
    j["depth"] = spec.depth;
    j["variant"] = spec.label_preserving() ? "edge_labeled" : "plain";
    if (!spec.labeling_table.empty()) {
        auto table = nlohmann::json::array();
        for (const auto & [hom, value] : spec.labeling_table)
            table.push_back({{"hom", hom}, {"value", value}});
        j["labeling"] = std::move(table);
    }
    return j;
}

nlohmann::json strategy_to_json(const Strategy & s)
{
    nlohmann::json j;
    j["player"] = to_string(s.player);
    auto entries = nlohmann::json::array();
    for (const auto & [pos, move] : s.table)
        entries.push_back({{"position", pos}, {"move", move}});
    j["entries"] = std::move(entries);
    return j;
}

Strategy strategy_from_json(const nlohmann::json & j)
{
    Strategy s;
    s.player = j.at("player").get<std::string>() == "alice" ? Player::Alice : Player::Bob;
    for (const auto & e : j.at("entries"))
        s.table[e.at("position").get<std::vector<int>>()] = e.at("move").get<std::vector<int>>();
    return s;
}

nlohmann::json trace_to_json(const std::vector<TraceEntry> & trace)
{
    auto j = nlohmann::json::array();
    for (const auto & t : trace)
        j.push_back({{"round", t.round}, {"mover", to_string(t.mover)},
            {"vertices", t.vertices}, {"images", t.images}});
    return j;
}

}
