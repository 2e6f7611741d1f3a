#pragma once

#include <vector>

#include "wordlab/engine.hpp"
#include "wordlab/lexicon.hpp"
#include "wordlab/movegen.hpp"

namespace wordlab {

/// Brute-force reference for generate_moves: tries every start square,
/// direction and arrangement of 1..7 rack tiles (blanks as every letter the
/// lexicon uses) and keeps those passing a whole-board rescan. Shares no
/// code with the anchor search or the engine's rule checks. Intended for
/// small lexicons only.
std::vector<GeneratedMove> oracle_generate(const GameState& state, const Lexicon& knowledge);

}  // namespace wordlab
