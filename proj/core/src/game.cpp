#include "dyckpaint/game.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dyckpaint/paint_solver.hpp"
#include "dyckpaint/pathcount.hpp"

namespace dyckpaint {

std::vector<int> GameState::uncoloured_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (!coloured[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

bool GameState::all_coloured() const {
    for (char c : coloured) {
        if (!c) return false;
    }
    return true;
}

std::string GameResult::transcript_json(int indent) const {
    std::ostringstream out;
    const std::string pad(indent > 0 ? static_cast<std::size_t>(indent) : 0, ' ');
    out << "[";
    for (std::size_t r = 0; r < transcript.size(); ++r) {
        if (r) out << ",";
        if (indent > 0) out << "\n" << pad;
        out << "{\"marked\": [";
        for (std::size_t i = 0; i < transcript[r].marked.size(); ++i) {
            if (i) out << ", ";
            out << transcript[r].marked[i];
        }
        out << "], \"colored\": [";
        for (std::size_t i = 0; i < transcript[r].coloured.size(); ++i) {
            if (i) out << ", ";
            out << transcript[r].coloured[i];
        }
        out << "]}";
    }
    if (indent > 0 && !transcript.empty()) out << "\n";
    out << "]";
    return out.str();
}

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void validate_sorted_unique(const std::vector<int>& vs, const char* side) {
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (vs[i - 1] >= vs[i]) {
            throw std::invalid_argument(std::string(side) + " move must list distinct sorted ids");
        }
    }
}

// All subsets of `base` ordered by decreasing size, lexicographic (on the
// sorted id tuple) within a size.
std::vector<std::vector<int>> subsets_large_first(const std::vector<int>& base) {
    const std::size_t n = base.size();
    std::vector<std::vector<int>> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) s.push_back(base[i]);
        }
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

std::vector<int> absent_encoded_tokens(const GameState& s) {
    std::vector<int> t(s.tokens);
    for (int v = 0; v < s.graph.vertex_count(); ++v) {
        if (!s.is_uncoloured(v)) t[static_cast<std::size_t>(v)] = -1;
    }
    return t;
}

} // namespace

GameResult run_game(const SimpleGraph& graph, const TokenMap& tokens,
                    const ListerStrategy& lister, const PainterStrategy& painter,
                    int max_rounds) {
    if (tokens.size() != graph.vertex_count()) {
        throw std::invalid_argument("token map size must match the vertex count");
    }
    GameState state{graph, tokens.values(),
                    std::vector<char>(static_cast<std::size_t>(graph.vertex_count()), 0)};
    if (max_rounds <= 0) {
        max_rounds = 10 * std::max(1, std::accumulate(state.tokens.begin(), state.tokens.end(), 0));
    }
    GameResult result;
    for (int round = 0; round < max_rounds; ++round) {
        if (state.all_coloured()) {
            result.winner = Winner::Painter;
            return result;
        }
        Move marked = lister(state);
        validate_sorted_unique(marked.vertices, "lister");
        if (marked.vertices.empty()) {
            throw std::invalid_argument("lister move must mark at least one vertex");
        }
        for (int v : marked.vertices) {
            if (v < 0 || v >= graph.vertex_count() || !state.is_uncoloured(v)) {
                throw std::invalid_argument("lister marked a coloured or unknown vertex");
            }
        }
        Move reply = painter(state, marked);
        validate_sorted_unique(reply.vertices, "painter");
        if (!is_subset(reply.vertices, marked.vertices)) {
            throw std::invalid_argument("painter must colour a subset of the marked set");
        }
        if (!graph.is_independent(reply.vertices)) {
            throw std::invalid_argument("painter must colour an independent set");
        }
        for (int v : marked.vertices) state.tokens[static_cast<std::size_t>(v)] -= 1;
        for (int v : reply.vertices) state.coloured[static_cast<std::size_t>(v)] = 1;
        result.transcript.push_back({marked.vertices, reply.vertices});
        for (int v : state.uncoloured_vertices()) {
            if (state.tokens[static_cast<std::size_t>(v)] <= 0) {
                result.winner = Winner::Lister;
                return result;
            }
        }
        if (state.all_coloured()) {
            result.winner = Winner::Painter;
            return result;
        }
    }
    throw std::runtime_error("round cap exceeded; a strategy is stalling");
}

namespace {

struct SolverPlay {
    explicit SolverPlay(const SimpleGraph& g) : solver(g) {}

    PaintSolver solver;

    bool painter_wins_position(const std::vector<int>& tokens_abs) {
        bool all_absent = true;
        for (int t : tokens_abs) {
            if (t >= 0) all_absent = false;
        }
        if (all_absent) return true;
        return solver.painter_wins(tokens_abs);
    }

    // Every colouring reply to `marked` loses, so marking wins.
    bool marking_move_wins(const GameState& s, const std::vector<int>& marked) {
        std::vector<int> after = absent_encoded_tokens(s);
        for (int v : marked) after[static_cast<std::size_t>(v)] -= 1;
        for (const auto& reply : subsets_large_first(marked)) {
            if (!s.graph.is_independent(reply)) continue;
            std::vector<int> child = after;
            for (int v : reply) child[static_cast<std::size_t>(v)] = -1;
            bool lost = false;
            for (int t : child) {
                if (t == 0) lost = true;
            }
            if (lost) continue;
            if (painter_wins_position(child)) return false;
        }
        return true;
    }

    Move lister_move(const GameState& s) {
        const auto base = s.uncoloured_vertices();
        const auto all = subsets_large_first(base);
        for (const auto& m : all) {
            if (m.empty()) continue;
            if (marking_move_wins(s, m)) return Move{m};
        }
        return Move{base}; // losing side: first legal move (mark everything)
    }

    Move painter_move(const GameState& s, const Move& marked) {
        std::vector<int> after = absent_encoded_tokens(s);
        for (int v : marked.vertices) after[static_cast<std::size_t>(v)] -= 1;
        Move fallback;
        bool have_fallback = false;
        for (const auto& reply : subsets_large_first(marked.vertices)) {
            if (!s.graph.is_independent(reply)) continue;
            if (!have_fallback) {
                fallback = Move{reply};
                have_fallback = true;
            }
            std::vector<int> child = after;
            for (int v : reply) child[static_cast<std::size_t>(v)] = -1;
            bool lost = false;
            for (int t : child) {
                if (t == 0) lost = true;
            }
            if (lost) continue;
            if (painter_wins_position(child)) return Move{reply};
        }
        return fallback; // losing side: first legal reply
    }
};

} // namespace

ListerStrategy solver_lister_strategy(const SimpleGraph& graph) {
    auto play = std::make_shared<SolverPlay>(graph);
    return [play](const GameState& s) { return play->lister_move(s); };
}

PainterStrategy solver_painter_strategy(const SimpleGraph& graph) {
    auto play = std::make_shared<SolverPlay>(graph);
    return [play](const GameState& s, const Move& marked) { return play->painter_move(s, marked); };
}

PainterStrategy clique_join_painter(int n, const TokenMap& f, int m) {
    if (f.size() != n) throw std::invalid_argument("token map size must match the clique size");
    const Count total = psi(x_of(f.sorted()));
    if (Count(m) >= total) {
        throw std::invalid_argument("the strategy requires m < psi(x(f)), got m = " +
                                    std::to_string(m) + " and psi = " + to_decimal(total));
    }
    return [n](const GameState& s, const Move& marked) -> Move {
        // Clique side sorted by (token, id); the independent side is active
        // while it holds exactly side-many tokens.
        std::vector<int> side;
        for (int v = 0; v < n; ++v) {
            if (s.is_uncoloured(v)) side.push_back(v);
        }
        std::stable_sort(side.begin(), side.end(), [&](int a, int b) {
            return s.tokens[static_cast<std::size_t>(a)] < s.tokens[static_cast<std::size_t>(b)];
        });
        std::vector<int> marked_clique, marked_indep;
        for (int v : marked.vertices) {
            (v < n ? marked_clique : marked_indep).push_back(v);
        }
        if (marked_clique.empty()) return Move{marked_indep};

        const int side_count = static_cast<int>(side.size());
        int first = -1;
        for (int j = 0; j < side_count; ++j) {
            if (std::binary_search(marked_clique.begin(), marked_clique.end(), side[static_cast<std::size_t>(j)])) {
                first = j;
                break;
            }
        }
        int active_marked = 0;
        for (int v : marked_indep) {
            if (s.tokens[static_cast<std::size_t>(v)] == side_count) ++active_marked;
        }
        std::vector<int> x(static_cast<std::size_t>(side_count));
        for (int j = 0; j < side_count; ++j) {
            x[static_cast<std::size_t>(j)] = s.tokens[static_cast<std::size_t>(side[static_cast<std::size_t>(j)])] - (j + 1);
        }
        auto [down, up] = XVector(x).branch(first + 1);
        (void)down;
        if (Count(active_marked) < psi(up)) {
            return Move{{side[static_cast<std::size_t>(first)]}};
        }
        return Move{marked_indep};
    };
}

namespace {

struct DuelMemo {
    std::map<std::vector<int>, bool> seen;
};

bool painter_survives_rec(GameState& s, const PainterStrategy& painter, DuelMemo& memo) {
    if (s.all_coloured()) return true;
    std::vector<int> key = absent_encoded_tokens(s);
    if (auto it = memo.seen.find(key); it != memo.seen.end()) return it->second;

    const auto base = s.uncoloured_vertices();
    bool survives = true;
    for (unsigned mask = 1; mask < (1u << base.size()) && survives; ++mask) {
        std::vector<int> marked;
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (mask & (1u << i)) marked.push_back(base[i]);
        }
        Move reply = painter(s, Move{marked});
        if (!is_subset(reply.vertices, marked) || !s.graph.is_independent(reply.vertices)) {
            throw std::logic_error("painter strategy produced an illegal move");
        }
        GameState child = s;
        for (int v : marked) child.tokens[static_cast<std::size_t>(v)] -= 1;
        for (int v : reply.vertices) child.coloured[static_cast<std::size_t>(v)] = 1;
        for (int v : child.uncoloured_vertices()) {
            if (child.tokens[static_cast<std::size_t>(v)] <= 0) survives = false;
        }
        if (survives) survives = painter_survives_rec(child, painter, memo);
    }
    memo.seen.emplace(std::move(key), survives);
    return survives;
}

bool lister_wins_rec(GameState& s, const ListerStrategy& lister, DuelMemo& memo) {
    if (s.all_coloured()) return false;
    std::vector<int> key = absent_encoded_tokens(s);
    if (auto it = memo.seen.find(key); it != memo.seen.end()) return it->second;

    Move marked = lister(s);
    if (marked.vertices.empty() || !is_subset(marked.vertices, s.uncoloured_vertices())) {
        throw std::logic_error("lister strategy produced an illegal move");
    }
    bool wins = true;
    for (const auto& reply : subsets_large_first(marked.vertices)) {
        if (!s.graph.is_independent(reply)) continue;
        GameState child = s;
        for (int v : marked.vertices) child.tokens[static_cast<std::size_t>(v)] -= 1;
        for (int v : reply) child.coloured[static_cast<std::size_t>(v)] = 1;
        bool lister_won_line = false;
        for (int v : child.uncoloured_vertices()) {
            if (child.tokens[static_cast<std::size_t>(v)] <= 0) lister_won_line = true;
        }
        if (lister_won_line) continue;
        if (child.all_coloured() || !lister_wins_rec(child, lister, memo)) {
            wins = false;
            break;
        }
    }
    memo.seen.emplace(std::move(key), wins);
    return wins;
}

} // namespace

bool painter_survives_all(const SimpleGraph& graph, const TokenMap& tokens,
                          const PainterStrategy& painter) {
    GameState s{graph, tokens.values(),
                std::vector<char>(static_cast<std::size_t>(graph.vertex_count()), 0)};
    DuelMemo memo;
    return painter_survives_rec(s, painter, memo);
}

bool lister_always_wins(const SimpleGraph& graph, const TokenMap& tokens,
                        const ListerStrategy& lister) {
    GameState s{graph, tokens.values(),
                std::vector<char>(static_cast<std::size_t>(graph.vertex_count()), 0)};
    DuelMemo memo;
    return lister_wins_rec(s, lister, memo);
}

} // namespace dyckpaint
