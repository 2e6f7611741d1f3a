#include <doctest.h>

#include "helpers.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/metrics.hpp"
#include "wordlab/sim.hpp"

using namespace wordlab;
using test::position;
using test::put;

namespace {
std::vector<TurnRecord> diffs(std::initializer_list<int> values) {
    std::vector<TurnRecord> turns;
    for (int v : values) {
        TurnRecord t;
        t.cum_a = v > 0 ? v : 0;
        t.cum_b = v < 0 ? -v : 0;
        turns.push_back(t);
    }
    return turns;
}

const Lexicon& small_master() {
    static const Lexicon lex = load_word_list_file(test::data_path("sowpods.txt")).lexicon;
    return lex;
}
}  // namespace

TEST_CASE("count_swings") {
    CHECK(count_swings(diffs({10, 5, 7})) == 0);
    CHECK(count_swings(diffs({10, -10, 10})) == 2);
    CHECK(count_swings(diffs({10, 0, -5})) == 1);
    CHECK(count_swings(diffs({0, 0, -3, 4})) == 1);
    CHECK(count_swings({}) == 0);
}

TEST_CASE("greedy choice") {
    GameState one = position(BoardLayout(3), {"AB"}, "AB");
    put(one, {2, 0}, Direction::Across, "A");
    one.racks[0] = {'B'};
    const Decision d1 = choose_greedy(one, *one.dictionary);
    CHECK(d1.legal_moves == 1);
    CHECK(std::get<Placement>(d1.move).tiles.front().at == Coord{2, 1});

    // ZA scores 11, AA scores 2.
    const GameState two = position(BoardLayout(5), {"ZA", "AA"}, "ZA");
    const Decision d2 = choose_greedy(two, *two.dictionary);
    CHECK(score_placement(two, std::get<Placement>(d2.move)) == 11);

    // All eight openings score 4; the Down plays from row 0 come first.
    const GameState tie = position(BoardLayout(3), {"AB", "BA"}, "AB");
    const Placement best = std::get<Placement>(choose_greedy(tie, *tie.dictionary).move);
    CHECK(best.direction == Direction::Down);
    CHECK(best.tiles.front().at == Coord{0, 1});
    CHECK(best.tiles.front().letter == 'A');

}

TEST_CASE("greedy falls back to exchange, then pass") {
    auto dict = test::automaton({"QI"});
    const GameState s = new_game(BoardLayout::standard(), std::make_shared<TileSet>(TileSet::english()), dict, 3);
    GameState no_q = s;
    no_q.racks[0] = {'E', 'E', 'E', 'E', 'E', 'E', 'E'};
    const Decision d = choose_greedy(no_q, *dict);
    CHECK(d.legal_moves == 0);
    REQUIRE(std::holds_alternative<Exchange>(d.move));
    CHECK(std::get<Exchange>(d.move).tiles.size() == 7);

    GameState small_bag = position(BoardLayout::standard(), {"QI"}, "EEEEEEE");
    CHECK(std::holds_alternative<Pass>(greedy_policy(small_bag, *small_bag.dictionary)));
}

TEST_CASE("run_match telemetry") {
    const auto dict = std::make_shared<const WordAutomaton>(small_master());
    MatchSetup setup{BoardLayout::standard(), std::make_shared<TileSet>(TileSet::english()), dict, {dict, dict}};
    const MatchTelemetry a = run_match(setup, 77);
    const MatchTelemetry b = run_match(setup, 77);
    CHECK(a.moves == b.moves);
    CHECK(a.final_scores == b.final_scores);
    CHECK(a.turns.size() == b.turns.size());
    CHECK(a.moves == static_cast<int>(a.turns.size()));
    CHECK(a.moves >= 2);
    CHECK(a.swings == count_swings(a.turns));
    CHECK(a.swings <= a.moves);
    CHECK(a.mean_branching >= 1.0);
    int prev_a = 0, prev_b = 0;
    for (const auto& t : a.turns) {
        CHECK(t.points >= 0);
        CHECK(t.cum_a >= prev_a);
        CHECK(t.cum_b >= prev_b);
        prev_a = t.cum_a;
        prev_b = t.cum_b;
    }
}

TEST_CASE("run_match with an unplayable dictionary ends on the scoreless rule") {
    const auto dict = test::automaton({"ZZZZZZZZZZ"});
    MatchSetup setup{BoardLayout::standard(), std::make_shared<TileSet>(TileSet::english()), dict, {dict, dict}};
    const MatchTelemetry t = run_match(setup, 5);
    CHECK(t.moves == 6);
    CHECK(t.mean_branching == 1.0);
}

TEST_CASE("run_experiment shape, determinism and worker independence") {
    ExperimentConfig cfg;
    cfg.d_values = {1.0};
    cfg.p_values = {1.0};
    cfg.matches = 2;
    cfg.seed = 9;
    cfg.workers = 1;
    const auto one = run_experiment(cfg, small_master());
    REQUIRE(one.size() == 2);
    CHECK(one[0].cell == CellId{15, 1.0, 1.0});
    CHECK(one[1].match == 1);

    cfg.d_values = {0.3, 1.0};
    cfg.p_values = {0.5, 1.0};
    const auto seq = run_experiment(cfg, small_master());
    cfg.workers = 3;
    const auto par = run_experiment(cfg, small_master());
    REQUIRE(seq.size() == 8);
    REQUIRE(par.size() == 8);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].cell == par[i].cell);
        CHECK(seq[i].seed == par[i].seed);
        CHECK(seq[i].final_scores == par[i].final_scores);
        CHECK(seq[i].moves == par[i].moves);
        CHECK(seq[i].mean_branching == par[i].mean_branching);
    }
    CHECK(seq[0].cell == CellId{15, 0.3, 0.5});
    CHECK(seq[7].cell == CellId{15, 1.0, 1.0});
}

TEST_CASE("experiment config validation") {
    ExperimentConfig cfg;
    cfg.dictionary = "x";
    CHECK_NOTHROW(cfg.validate());
    cfg.matches = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.matches = 1;
    cfg.d_values = {0.0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.d_values = {1.0};
    cfg.p_values = {1.5};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.p_values = {1.0};
    cfg.board = 14;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("seed derivation") {
    CHECK(dictionary_seed(1, 0.5) == dictionary_seed(1, 0.5));
    CHECK(dictionary_seed(1, 0.5) != dictionary_seed(1, 0.6));
    CHECK(dictionary_seed(1, 0.5) != dictionary_seed(2, 0.5));
    const CellId c{15, 0.5, 0.3};
    CHECK(match_seed(1, c, 0) != match_seed(1, c, 1));
    CHECK(match_seed(1, c, 0) != match_seed(1, CellId{13, 0.5, 0.3}, 0));
    CHECK(knowledge_seed(1, c, 0, 0) != knowledge_seed(1, c, 0, 1));
    CHECK(knowledge_seed(1, c, 0, 0) == knowledge_seed(1, CellId{13, 0.5, 0.3}, 0, 0));
}
