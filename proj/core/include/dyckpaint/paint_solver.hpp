#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyckpaint/bigint.hpp"
#include "dyckpaint/graph.hpp"
#include "dyckpaint/tokens.hpp"

namespace dyckpaint {

struct SolverStats {
    std::uint64_t states = 0;
    std::uint64_t memo_hits = 0;
};

// Exhaustive win/loss search for the token marking game.
//
// Interchangeable vertices are collapsed: vertices that are twins (equal
// neighbourhoods, adjacent or not) form classes, and a position is keyed by
// one sorted token multiset per class. The independent side of a join is a
// single class, so its vertices cost one multiset regardless of count.
// Positions are pruned first: a vertex holding more tokens than its degree
// never changes the outcome and is deleted.
class PaintSolver {
public:
    // Game on g itself.
    explicit PaintSolver(const SimpleGraph& g);

    // Game on g joined with a block of mutually non-adjacent vertices whose
    // size varies per query.
    static PaintSolver with_join_block(const SimpleGraph& g);

    // Painter-win decision. g_tokens[v] < 0 marks v as absent (already
    // coloured); a present vertex with zero tokens loses immediately.
    // `block` holds the token counts of the joined block (only when built
    // with_join_block).
    bool painter_wins(const std::vector<int>& g_tokens, const std::vector<int>& block = {});

    const SolverStats& stats() const { return stats_; }
    const SimpleGraph& side_graph() const { return g_; }

private:
    PaintSolver(const SimpleGraph& g, bool with_block);

    using State = std::vector<std::vector<int>>; // per-class sorted tokens

    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };

    bool solve(State s);
    void prune(State& s) const;
    std::vector<int> key_of(const State& s) const;
    bool move_has_winning_reply(const State& s, const State& marked);

    SimpleGraph g_;
    bool with_block_ = false;
    int classes_ = 0;                     // includes the block class if present
    std::vector<int> class_of_;           // g vertex -> class index
    std::vector<char> clique_class_;
    std::vector<std::vector<char>> cadj_;
    SolverStats stats_;
    std::unordered_map<std::vector<int>, char, KeyHash> memo_;
};

// Painter has a winning strategy on (g, f).
bool is_paintable(const SimpleGraph& g, const TokenMap& f);

// Same decision with raw token counts; values <= 0 lose immediately.
bool is_paintable_tokens(const SimpleGraph& g, const std::vector<int>& tokens);

// Least m such that the join of g with m independent vertices (each holding
// |V(g)| tokens) is not paintable. Bounded above by prod f.
int m_p(const SimpleGraph& g, const TokenMap& f);
int m_p_tokens(const SimpleGraph& g, const std::vector<int>& tokens);

// Repeatedly deletes vertices with more tokens than remaining degree;
// paintability is preserved.
std::pair<SimpleGraph, TokenMap> prune(const SimpleGraph& g, const TokenMap& f);

// Certificates bounding m_p for a paintable instance:
//   upper holds iff m_p(g, f) <= m    (a marked set witnesses a winning
//                                      opening for the marking side)
//   lower holds iff m_p(g, f) >= m    (every marked set admits a good reply)
struct MpCertificates {
    bool upper = false;
    bool lower = false;
};
MpCertificates m_p_certificates(const SimpleGraph& g, const TokenMap& f, int m);

} // namespace dyckpaint
