#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dyckpaint/graph.hpp"
#include "dyckpaint/tokens.hpp"

namespace dyckpaint {

// A set of vertex ids, kept sorted ascending.
struct Move {
    std::vector<int> vertices;
};

struct GameState {
    SimpleGraph graph;
    std::vector<int> tokens;    // meaningful only while uncoloured
    std::vector<char> coloured;

    std::vector<int> uncoloured_vertices() const;
    bool all_coloured() const;
    bool is_uncoloured(int v) const { return coloured[static_cast<std::size_t>(v)] == 0; }
};

// The marking side sees the round-start state. The colouring side sees the
// round-start state (tokens not yet removed) plus the marked set.
using ListerStrategy = std::function<Move(const GameState&)>;
using PainterStrategy = std::function<Move(const GameState&, const Move&)>;

enum class Winner { Painter, Lister };

struct Round {
    std::vector<int> marked;
    std::vector<int> coloured;
};

struct GameResult {
    Winner winner = Winner::Painter;
    std::vector<Round> transcript;
    std::string transcript_json(int indent = 2) const;
};

// Referee. Validates every move (throws std::invalid_argument naming the
// offending side) and stops after max_rounds (default 10 * total tokens,
// a diagnostic guard that legal play never reaches).
GameResult run_game(const SimpleGraph& graph, const TokenMap& tokens,
                    const ListerStrategy& lister, const PainterStrategy& painter,
                    int max_rounds = 0);

// Strategies backed by the exhaustive solver. The winning side always moves
// to a winning position; the losing side plays the first legal move in
// deterministic order (subsets by decreasing size, lexicographic within a
// size). The pair returned by one call shares a memo table.
ListerStrategy solver_lister_strategy(const SimpleGraph& graph);
PainterStrategy solver_painter_strategy(const SimpleGraph& graph);

// The constructive colouring-side strategy for a clique joined with m
// independent vertices (vertices 0..n-1 form the clique, the rest the
// independent side). Requires m < psi(x(f)); never reaches a lost position.
//
// On a mark M = U + m' (U on the clique side, m' active independent-side
// vertices): if U is empty colour all marked independent vertices; otherwise
// let i be the first marked clique vertex in token order and colour it when
// m' < psi(x with entry i deleted), else colour the marked independent side.
PainterStrategy clique_join_painter(int n, const TokenMap& f, int m);

// Exhaustive adversaries for validating strategies. Both strategies must be
// pure functions of the game state.
bool painter_survives_all(const SimpleGraph& graph, const TokenMap& tokens,
                          const PainterStrategy& painter);
bool lister_always_wins(const SimpleGraph& graph, const TokenMap& tokens,
                        const ListerStrategy& lister);

} // namespace dyckpaint
