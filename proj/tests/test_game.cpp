#include <doctest.h>

#include <memory>

#include "dyckpaint/game.hpp"
#include "dyckpaint/paint_solver.hpp"
#include "dyckpaint/pathcount.hpp"

using namespace dyckpaint;

namespace {

ListerStrategy fixed_lister(std::vector<std::vector<int>> moves) {
    auto idx = std::make_shared<std::size_t>(0);
    return [moves, idx](const GameState&) { return Move{moves[(*idx)++]}; };
}

PainterStrategy fixed_painter(std::vector<std::vector<int>> moves) {
    auto idx = std::make_shared<std::size_t>(0);
    return [moves, idx](const GameState&, const Move&) { return Move{moves[(*idx)++]}; };
}

} // namespace

TEST_CASE("referee plays scripted rounds") {
    const GameResult r = run_game(SimpleGraph::complete(1), TokenMap({1}),
                                  fixed_lister({{0}}), fixed_painter({{0}}));
    CHECK(r.winner == Winner::Painter);
    CHECK(r.transcript.size() == 1);
    CHECK(r.transcript_json(0) == "[{\"marked\": [0], \"colored\": [0]}]");
}

TEST_CASE("referee rejects illegal moves") {
    CHECK_THROWS_AS(run_game(SimpleGraph::complete(2), TokenMap({1, 1}), fixed_lister({{}}),
                             fixed_painter({{}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_game(SimpleGraph::complete(2), TokenMap({1, 1}), fixed_lister({{0}}),
                             fixed_painter({{1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_game(SimpleGraph::complete(2), TokenMap({2, 2}), fixed_lister({{0, 1}}),
                             fixed_painter({{0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("optimal play on decided instances") {
    // marking side wins on a clique with one token each; its first move
    // marks everything
    {
        const SimpleGraph g = SimpleGraph::complete(2);
        const TokenMap f({1, 1});
        GameState start{g, f.values(), {0, 0}};
        auto lister = solver_lister_strategy(g);
        CHECK(lister(start).vertices == std::vector<int>{0, 1});
        const GameResult r = run_game(g, f, lister, solver_painter_strategy(g));
        CHECK(r.winner == Winner::Lister);
    }
    // the colouring side colours a marked singleton
    {
        const SimpleGraph g = SimpleGraph::complete(1);
        auto painter = solver_painter_strategy(g);
        GameState start{g, {1}, {0}};
        CHECK(painter(start, Move{{0}}).vertices == std::vector<int>{0});
        const GameResult r = run_game(g, TokenMap({1}), solver_lister_strategy(g), painter);
        CHECK(r.winner == Winner::Painter);
    }
}

TEST_CASE("join painter follows the branch rule") {
    // one clique vertex with two tokens, one joined vertex
    {
        auto [g, f] = join_instance(SimpleGraph::complete(1), TokenMap({2}), 1);
        auto painter = clique_join_painter(1, TokenMap({2}), 1);
        GameState start{g, f.values(), {0, 0}};
        // both marked: one active join vertex is not less than psi(()) = 1,
        // so the painter colours the join side
        CHECK(painter(start, Move{{0, 1}}).vertices == std::vector<int>{1});
        const GameResult r = run_game(g, f, solver_lister_strategy(g), painter);
        CHECK(r.winner == Winner::Painter);
    }
    // clique-only mark: colour the first marked clique vertex
    {
        auto [g, f] = join_instance(SimpleGraph::complete(2), TokenMap({1, 3}), 1);
        auto painter = clique_join_painter(2, TokenMap({1, 3}), 1);
        GameState start{g, f.values(), {0, 0, 0}};
        CHECK(painter(start, Move{{0}}).vertices == std::vector<int>{0});
        const GameResult r = run_game(g, f, solver_lister_strategy(g), painter);
        CHECK(r.winner == Winner::Painter);
    }
    // join-side-only mark: colour all of it
    {
        auto [g, f] = join_instance(SimpleGraph::complete(2), TokenMap({2, 3}), 2);
        auto painter = clique_join_painter(2, TokenMap({2, 3}), 2);
        GameState start{g, f.values(), {0, 0, 0, 0}};
        CHECK(painter(start, Move{{2, 3}}).vertices == std::vector<int>{2, 3});
    }
    CHECK_THROWS_AS(clique_join_painter(2, TokenMap({1, 3}), 2), std::invalid_argument);
}

TEST_CASE("exhaustive duels on tiny joins") {
    // m one below the threshold: the join painter survives everything
    for (const auto& fv : {std::vector<int>{2}, std::vector<int>{1, 3}, std::vector<int>{2, 2}}) {
        const int n = static_cast<int>(fv.size());
        const TokenMap f(fv);
        const Count threshold = psi(x_of(f));
        const int m = static_cast<int>(threshold.get_ui()) - 1;
        if (m < 0) continue;
        auto [g, fm] = join_instance(SimpleGraph::complete(n), f, m);
        CHECK(painter_survives_all(g, fm, clique_join_painter(n, f, m)));
    }
    // at the threshold: the solver-extracted marker beats every reply
    {
        const TokenMap f({1, 3});
        auto [g, fm] = join_instance(SimpleGraph::complete(2), f, 2);
        CHECK(lister_always_wins(g, fm, solver_lister_strategy(g)));
    }
}
