#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wordlab/engine.hpp"
#include "wordlab/lexicon.hpp"
#include "wordlab/word_automaton.hpp"

namespace wordlab::test {

inline std::string data_path(const std::string& name) { return std::string(WORDLAB_DATA_DIR) + "/" + name; }

inline std::shared_ptr<const WordAutomaton> automaton(std::vector<std::string> words) {
    return std::make_shared<const WordAutomaton>(Lexicon(std::move(words)));
}

/// Position with an empty bag, the given rack for the player to move and
/// an empty opponent rack. Board contents are set with put().
inline GameState position(const BoardLayout& layout, const std::vector<std::string>& words, const std::string& rack) {
    GameState s = new_game(layout, TileBag(TileSet{}, 0), std::make_shared<TileSet>(TileSet::english()),
                           automaton(words));
    s.racks[0].assign(rack.begin(), rack.end());
    s.racks[1].clear();
    return s;
}

/// Writes letters straight onto the board; lower case marks a blank.
inline void put(GameState& s, Coord at, Direction dir, const std::string& letters) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const char c = letters[i];
        const bool blank = c >= 'a' && c <= 'z';
        s.cells[s.layout.index(step(at, dir, static_cast<int>(i)))] = Cell{blank ? char(c - 32) : c, blank};
    }
}

inline Placement place(Direction dir, std::vector<PlacedTile> tiles) { return Placement{dir, std::move(tiles)}.normalized(); }

}  // namespace wordlab::test
