#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wordlab/engine.hpp"
#include "wordlab/lexicon.hpp"
#include "wordlab/movegen.hpp"

namespace wordlab {

/// A small randomized position for cross-checking move generation.
struct FuzzInstance {
    GameState state;
    Lexicon knowledge;
    std::shared_ptr<const WordAutomaton> knowledge_automaton;
    std::string description;
};

/// Random board (odd size 5..15, random premiums), a lexicon of at most 50
/// words over a few letters, a matching tile set, and a mid-game position
/// reached by random legal play.
FuzzInstance random_instance(std::uint64_t seed);

/// Textual dump of a position for counterexample reports.
std::string describe_state(const GameState& state);

using MoveListHook = std::function<void(std::vector<GeneratedMove>&)>;

struct FuzzReport {
    int iterations = 0;
    int checked = 0;
    bool ok = true;
    std::string counterexample;
};

/// Compares generate_moves against oracle_generate on `iterations` random
/// instances; stops at the first difference. `tamper`, if set, edits the
/// generator's output before comparison.
FuzzReport fuzz_movegen(int iterations, std::uint64_t seed, const MoveListHook& tamper = {});

std::string describe_move(const GeneratedMove& m);

}  // namespace wordlab
