#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/rng.hpp"

namespace wordlab {

enum class Premium : std::uint8_t { None, DoubleLetter, TripleLetter, DoubleWord, TripleWord };

/// ASCII token for a premium: "..", "DL", "TL", "DW", "TW".
std::string_view premium_token(Premium p);
std::optional<Premium> parse_premium_token(std::string_view token);

struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
};

/// "H8" style: column letter, then 1-based row.
std::string to_a1(Coord c);
std::optional<Coord> parse_a1(std::string_view text);

/// Square grid of premium squares with a center start square.
class BoardLayout {
  public:
    /// All squares plain.
    explicit BoardLayout(int size);
    BoardLayout(int size, std::vector<Premium> premiums);

    /// The 15x15 tournament board.
    static BoardLayout standard();
    /// The reduced 13x13 board (no triple-word squares).
    static BoardLayout compact13();
    /// 15 -> standard(), 13 -> compact13(); anything else throws std::invalid_argument.
    static BoardLayout for_variant(int size);
    /// Rows of whitespace-separated premium tokens.
    static BoardLayout from_ascii(std::string_view text);

    int size() const noexcept { return size_; }
    int area() const noexcept { return size_ * size_; }
    Coord center() const noexcept { return {size_ / 2, size_ / 2}; }
    bool in_bounds(Coord c) const noexcept {
        return c.row >= 0 && c.col >= 0 && c.row < size_ && c.col < size_;
    }

    Premium at(Coord c) const noexcept { return premiums_[index(c)]; }
    int letter_multiplier(Coord c) const noexcept;
    int word_multiplier(Coord c) const noexcept;

    std::size_t count(Premium p) const;
    bool rotationally_symmetric() const;
    std::string to_ascii() const;

    std::size_t index(Coord c) const noexcept { return static_cast<std::size_t>(c.row * size_ + c.col); }

    bool operator==(const BoardLayout&) const = default;

  private:
    int size_;
    std::vector<Premium> premiums_;
};

inline constexpr char kBlankTile = '?';
inline constexpr int kTileKinds = 27;  // A-Z plus blank

/// Index 0..25 for letters, 26 for the blank.
constexpr int tile_kind(char tile) noexcept { return tile == kBlankTile ? 26 : tile - 'A'; }
constexpr char kind_tile(int kind) noexcept { return kind == 26 ? kBlankTile : static_cast<char>('A' + kind); }

/// Tile counts and face values, parsed from "LETTER COUNT VALUE" lines.
class TileSet {
  public:
    TileSet() = default;

    /// Conventional English set: 98 letters plus 2 blanks.
    static const TileSet& english();
    /// Throws std::invalid_argument on malformed lines.
    static TileSet parse(std::istream& in);
    static TileSet parse(std::string_view text);

    int count(char tile) const noexcept { return counts_[tile_kind(tile)]; }
    int value(char tile) const noexcept { return values_[tile_kind(tile)]; }
    int total_tiles() const;
    int total_points() const;  ///< sum of count * value over all kinds
    std::string to_text() const;

    bool operator==(const TileSet&) const = default;

  private:
    std::array<int, kTileKinds> counts_{};
    std::array<int, kTileKinds> values_{};
};

/// The text of the bundled English distribution file.
std::string_view english_tile_distribution();

/// Shuffled draw pile owned by a single game.
class TileBag {
  public:
    TileBag(const TileSet& set, std::uint64_t seed);

    std::size_t size() const noexcept { return tiles_.size(); }
    bool empty() const noexcept { return tiles_.empty(); }
    std::optional<char> draw();
    /// Puts tiles back and reshuffles the whole bag.
    void put_back(std::span<const char> tiles);
    /// Remaining tiles in draw order (next draw last).
    const std::vector<char>& contents() const noexcept { return tiles_; }

  private:
    void shuffle();

    std::vector<char> tiles_;
    Rng rng_;
};

}  // namespace wordlab
