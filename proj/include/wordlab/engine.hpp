#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wordlab/board.hpp"
#include "wordlab/word_automaton.hpp"

namespace wordlab {

inline constexpr int kRackSize = 7;
inline constexpr int kBingoBonus = 50;
inline constexpr int kScorelessTurnLimit = 6;
inline constexpr int kPlayers = 2;

enum class Direction : std::uint8_t { Across, Down };

struct PlacedTile {
    Coord at;
    char letter = 'A';   ///< letter shown on the board
    bool blank = false;  ///< true when a blank stands in for `letter`
    auto operator<=>(const PlacedTile&) const = default;
};

/// Tiles laid in one line. Canonical form: tiles sorted by (row, col) and
/// single-tile placements always Across; see normalized().
struct Placement {
    Direction direction = Direction::Across;
    std::vector<PlacedTile> tiles;

    Placement normalized() const;
    auto operator<=>(const Placement&) const = default;
};

/// Returns tiles to the bag in exchange for new ones. '?' is a blank.
struct Exchange {
    std::vector<char> tiles;
    bool operator==(const Exchange&) const = default;
};

struct Pass {
    bool operator==(const Pass&) const = default;
};

using Move = std::variant<Placement, Exchange, Pass>;

/// Rule names reported by IllegalMoveError.
enum class Rule {
    GameOver,
    NoTiles,
    TooManyTiles,
    OutOfBounds,
    OccupiedCell,
    DuplicateCell,
    BadLetter,
    NotInLine,
    Gap,
    MissesCenter,
    Disconnected,
    NoWordFormed,
    NotInDictionary,
    RackMismatch,
    BagTooSmall,
};

std::string_view rule_name(Rule rule);

class IllegalMoveError : public std::runtime_error {
  public:
    IllegalMoveError(Rule rule, const std::string& detail)
        : std::runtime_error(std::string(rule_name(rule)) + ": " + detail), rule_(rule) {}
    Rule rule() const noexcept { return rule_; }

  private:
    Rule rule_;
};

struct Cell {
    char letter = 0;  ///< 0 when empty
    bool blank = false;
    bool empty() const noexcept { return letter == 0; }
    bool operator==(const Cell&) const = default;
};

enum class EndReason : std::uint8_t { None, PlayedOut, ScorelessStreak };

/// Complete two-player game position. Engine functions treat it as a value.
struct GameState {
    BoardLayout layout{15};
    std::shared_ptr<const TileSet> tiles;
    std::shared_ptr<const WordAutomaton> dictionary;  ///< the custom dictionary d'
    std::vector<Cell> cells;
    std::array<std::vector<char>, kPlayers> racks;
    TileBag bag{TileSet{}, 0};
    std::array<int, kPlayers> scores{};
    int turn = 0;
    int scoreless_streak = 0;
    EndReason end = EndReason::None;
    int went_out = -1;  ///< player index when end == PlayedOut

    int mover() const noexcept { return turn % kPlayers; }
    bool terminal() const noexcept { return end != EndReason::None; }
    const Cell& cell(Coord c) const noexcept { return cells[layout.index(c)]; }
    bool occupied(Coord c) const noexcept { return layout.in_bounds(c) && !cell(c).empty(); }
    bool board_empty() const noexcept;
    std::size_t tiles_on_board() const noexcept;
    int tile_value(char letter, bool blank) const noexcept { return blank ? 0 : tiles->value(letter); }
    int rack_value(int player) const noexcept;
};

struct MoveOutcome {
    int points = 0;
    std::vector<std::string> words_formed;
    bool terminal = false;
};

/// Fresh game: racks of seven drawn for player 0 then player 1.
GameState new_game(const BoardLayout& layout, TileBag bag, std::shared_ptr<const TileSet> tiles,
                   std::shared_ptr<const WordAutomaton> dictionary);
GameState new_game(const BoardLayout& layout, std::shared_ptr<const TileSet> tiles,
                   std::shared_ptr<const WordAutomaton> dictionary, std::uint64_t bag_seed);

/// Words a placement would form, in board order: main word first.
std::vector<std::string> words_formed(const GameState& state, const Placement& placement);

/// Points for a legal placement. Throws IllegalMoveError naming the
/// violated rule otherwise.
int score_placement(const GameState& state, const Placement& placement);

/// Throws IllegalMoveError if the move cannot be played by the mover.
void check_move(const GameState& state, const Move& move);

/// Plays the mover's move and returns the successor state.
std::pair<GameState, MoveOutcome> apply_move(const GameState& state, const Move& move);

/// End-of-game rack adjustments. Throws std::logic_error before the end.
std::array<int, kPlayers> final_adjust(const GameState& state);

/// Direction step helpers.
constexpr Coord step(Coord c, Direction d, int n = 1) noexcept {
    return d == Direction::Across ? Coord{c.row, c.col + n} : Coord{c.row + n, c.col};
}
constexpr Direction other(Direction d) noexcept { return d == Direction::Across ? Direction::Down : Direction::Across; }

}  // namespace wordlab
