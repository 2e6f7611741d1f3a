#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wordlab/engine.hpp"
#include "wordlab/word_automaton.hpp"

namespace wordlab {

struct GeneratedMove {
    Placement placement;  ///< canonical form
    int points = 0;
    auto operator<=>(const GeneratedMove&) const = default;
};

/// Letters that may sit on empty `cell` when playing in `direction`: the
/// perpendicular run through the cell must stay length 1 or be a word of
/// `automaton`.
LetterSet cross_checks(const GameState& state, Coord cell, Direction direction, const WordAutomaton& automaton);

/// Called once per distinct legal placement. The placement reference is
/// only valid during the call.
using MoveVisitor = std::function<void(const Placement& placement, int points)>;

/// Enumerates every placement available to the mover whose formed words all
/// belong to `knowledge`.
void for_each_move(const GameState& state, const WordAutomaton& knowledge, const MoveVisitor& visit);

/// All legal placements in canonical, sorted order.
std::vector<GeneratedMove> generate_moves(const GameState& state, const WordAutomaton& knowledge);

std::size_t count_moves(const GameState& state, const WordAutomaton& knowledge);

}  // namespace wordlab
