#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wordlab/fuzz.hpp"
#include "wordlab/movegen.hpp"
#include "wordlab/oracle.hpp"

using namespace wordlab;
using test::position;
using test::put;

namespace {
constexpr Direction A = Direction::Across;
constexpr Direction D = Direction::Down;

void check_against_oracle(const GameState& s, const std::vector<std::string>& words) {
    const auto gen = generate_moves(s, *s.dictionary);
    const auto ref = oracle_generate(s, Lexicon(words));
    CHECK(gen == ref);
    for (const auto& m : gen) {
        CHECK_NOTHROW(check_move(s, m.placement));
        CHECK(score_placement(s, m.placement) == m.points);
    }
}
}  // namespace

TEST_CASE("cross checks") {
    GameState s = position(BoardLayout(5), {"AT"}, "A");
    put(s, {2, 2}, A, "T");
    CHECK(cross_checks(s, {0, 0}, A, *s.dictionary) == LetterSet::all());
    CHECK(cross_checks(s, {1, 2}, A, *s.dictionary) == LetterSet::of("A"));
    CHECK(cross_checks(s, {1, 2}, D, *s.dictionary) == LetterSet::all());
    CHECK(cross_checks(s, {3, 2}, A, *s.dictionary).empty());

    GameState g = position(BoardLayout(5), {"AAT"}, "A");
    put(g, {0, 2}, D, "A");
    put(g, {2, 2}, D, "T");
    CHECK(cross_checks(g, {1, 2}, A, *g.dictionary) == LetterSet::of("A"));
}

TEST_CASE("3x3 board, rack AB, words AB and BA") {
    const GameState s = position(BoardLayout(3), {"AB", "BA"}, "AB");
    const auto moves = generate_moves(s, *s.dictionary);
    CHECK(moves.size() == 8);
    std::set<std::pair<Direction, Coord>> origins;
    for (const auto& m : moves) origins.insert({m.placement.direction, m.placement.tiles.front().at});
    CHECK(origins.size() == 4);
    check_against_oracle(s, {"AB", "BA"});
}

TEST_CASE("CAT on an empty standard board") {
    const GameState s = position(BoardLayout::standard(), {"CAT"}, "CAT");
    const auto moves = generate_moves(s, *s.dictionary);
    CHECK(moves.size() == 6);
    for (const auto& m : moves) CHECK(m.points == 10);
    check_against_oracle(s, {"CAT"});
}

TEST_CASE("seven blanks and AA") {
    const GameState s = position(BoardLayout::standard(), {"AA"}, "???????");
    const auto moves = generate_moves(s, *s.dictionary);
    CHECK(moves.size() == 4);
    for (const auto& m : moves) {
        CHECK(m.points == 0);
        CHECK(m.placement.tiles.size() == 2);
    }
    check_against_oracle(s, {"AA"});
}

TEST_CASE("no playable word") {
    const GameState s = position(BoardLayout::standard(), {"CAT"}, "XYZ");
    CHECK(generate_moves(s, *s.dictionary).empty());
    CHECK(count_moves(s, *s.dictionary) == 0);
    CHECK(oracle_generate(s, Lexicon({"CAT"})).empty());
}

TEST_CASE("single tile hooks are counted once") {
    // S extends CAT to CATS across; on its own column it forms no word, so
    // exactly one move exists for the square.
    GameState s = position(BoardLayout::standard(), {"CAT", "CATS", "AS"}, "S");
    put(s, {7, 7}, A, "CAT");
    const auto moves = generate_moves(s, *s.dictionary);
    std::set<Coord> squares;
    for (const auto& m : moves) {
        CHECK(m.placement.tiles.size() == 1);
        CHECK(m.placement.direction == A);
        squares.insert(m.placement.tiles[0].at);
    }
    CHECK(squares.size() == moves.size());
    check_against_oracle(s, {"CAT", "CATS", "AS"});
}

TEST_CASE("knowledge restricts cross words too") {
    // Playing A under C would form CA down; without CA known it is not offered.
    GameState s = position(BoardLayout::standard(), {"CAT", "AT", "CA"}, "AT");
    put(s, {7, 7}, A, "CAT");
    const auto full = test::automaton({"CAT", "AT", "CA"});
    const auto partial = test::automaton({"CAT", "AT"});
    const auto with = generate_moves(s, *full);
    const auto without = generate_moves(s, *partial);
    CHECK(without.size() < with.size());
    for (const auto& m : without)
        for (const auto& w : words_formed(s, m.placement)) CHECK(w != "CA");
    CHECK(oracle_generate(s, Lexicon({"CAT", "AT"})) == without);
}

TEST_CASE("generator matches oracle on random positions") {
    const FuzzReport r = fuzz_movegen(60, 12345);
    CHECK(r.ok);
    CHECK(r.checked == 60);
    if (!r.ok) MESSAGE(r.counterexample);
}

TEST_CASE("fuzz harness reports injected faults") {
    const FuzzReport r = fuzz_movegen(50, 12345, [](std::vector<GeneratedMove>& moves) {
        if (!moves.empty()) moves.front().points += 1;
    });
    CHECK_FALSE(r.ok);
    CHECK(r.counterexample.find("generator only") != std::string::npos);
    const FuzzReport dropped = fuzz_movegen(50, 12345, [](std::vector<GeneratedMove>& moves) {
        if (moves.size() > 1) moves.pop_back();
    });
    CHECK_FALSE(dropped.ok);
}

TEST_CASE("random instances are varied and reproducible") {
    std::set<int> sizes;
    int midgame = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const FuzzInstance inst = random_instance(seed);
        sizes.insert(inst.state.layout.size());
        if (!inst.state.board_empty()) ++midgame;
        CHECK(inst.knowledge.size() <= 50);
        const FuzzInstance again = random_instance(seed);
        CHECK(again.state.cells == inst.state.cells);
        CHECK(again.state.racks == inst.state.racks);
    }
    CHECK(sizes.count(5) == 1);
    CHECK(sizes.count(15) == 1);
    CHECK(midgame > 40);
}
