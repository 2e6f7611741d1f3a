#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wordlab/engine.hpp"
#include "wordlab/sim.hpp"

namespace wordlab {

/// Everything needed to rebuild the starting position of a recorded game.
struct RecordHeader {
    int board = 15;
    double d = 1.0;
    std::uint64_t dictionary_seed = 0;
    std::uint64_t bag_seed = 0;
};

/// One move of a game record. On disk, one line per move:
///
///   turn player kind coord dir word score
///   1 A place H8 across CAT 10
///   2 B exchange - - QV? 0
///   3 A pass - - - 0
///
/// coord is the first square of the main word ("H8": column H, row 8) and
/// blanks are written in lower case. Exchanges list the returned tiles.
struct RecordLine {
    int turn = 0;
    int player = 0;
    MoveKind kind = MoveKind::Pass;
    Coord origin;
    Direction direction = Direction::Across;
    std::string word;
    int score = 0;
};

struct GameRecord {
    RecordHeader header;
    std::vector<RecordLine> lines;
};

/// Replays `moves` from `initial` to produce the record.
GameRecord make_record(const RecordHeader& header, const GameState& initial, const std::vector<Move>& moves);

void write_record(std::ostream& out, const GameRecord& record);

/// Throws ConfigError on malformed input.
GameRecord read_record(std::istream& in);

/// The engine move a record line denotes on `state`. Throws
/// IllegalMoveError if the word does not fit the board.
Move resolve_line(const GameState& state, const RecordLine& line);

struct ReplayResult {
    GameState final_state;
    std::array<int, kPlayers> adjusted{};  ///< after final adjustment, if terminal
    int mismatched_turn = 0;               ///< first turn whose score differs, 0 if none
};

/// Re-applies every recorded move (engine errors propagate).
ReplayResult replay(const GameRecord& record, const GameState& initial);

}  // namespace wordlab
