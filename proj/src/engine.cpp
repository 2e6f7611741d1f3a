#include "wordlab/engine.hpp"

#include <algorithm>
#include <numeric>

namespace wordlab {

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::GameOver: return "game over";
        case Rule::NoTiles: return "no tiles placed";
        case Rule::TooManyTiles: return "too many tiles";
        case Rule::OutOfBounds: return "out of bounds";
        case Rule::OccupiedCell: return "cell occupied";
        case Rule::DuplicateCell: return "cell used twice";
        case Rule::BadLetter: return "bad letter";
        case Rule::NotInLine: return "tiles not in one line";
        case Rule::Gap: return "gap in placement";
        case Rule::MissesCenter: return "first move must cover the center";
        case Rule::Disconnected: return "placement not connected";
        case Rule::NoWordFormed: return "no word formed";
        case Rule::NotInDictionary: return "word not in dictionary";
        case Rule::RackMismatch: return "tiles not on rack";
        case Rule::BagTooSmall: return "bag too small to exchange";
    }
    return "unknown rule";
}

Placement Placement::normalized() const {
    Placement p = *this;
    std::sort(p.tiles.begin(), p.tiles.end());
    if (p.tiles.size() == 1) p.direction = Direction::Across;
    return p;
}

bool GameState::board_empty() const noexcept {
    return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.empty(); });
}

std::size_t GameState::tiles_on_board() const noexcept {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.empty(); }));
}

int GameState::rack_value(int player) const noexcept {
    int sum = 0;
    for (char t : racks[player]) sum += tiles->value(t);
    return sum;
}

namespace {

void refill(std::vector<char>& rack, TileBag& bag) {
    while (rack.size() < static_cast<std::size_t>(kRackSize)) {
        auto t = bag.draw();
        if (!t) break;
        rack.push_back(*t);
    }
}

/// Removes tiles from a rack; false if any is missing (rack left untouched).
bool take_from_rack(std::vector<char>& rack, const std::vector<char>& wanted) {
    std::vector<char> copy = rack;
    for (char t : wanted) {
        auto it = std::find(copy.begin(), copy.end(), t);
        if (it == copy.end()) return false;
        copy.erase(it);
    }
    rack = std::move(copy);
    return true;
}

std::vector<char> rack_tiles_for(const Placement& p) {
    std::vector<char> out;
    out.reserve(p.tiles.size());
    for (const auto& t : p.tiles) out.push_back(t.blank ? kBlankTile : t.letter);
    return out;
}

struct Analysis {
    std::vector<std::string> words;
    int points = 0;
};

/// Full legality check against the mover's rack and the state's dictionary.
Analysis analyze(const GameState& s, const Placement& p) {
    const BoardLayout& layout = s.layout;
    if (s.terminal()) throw IllegalMoveError(Rule::GameOver, "the game has ended");
    if (p.tiles.empty()) throw IllegalMoveError(Rule::NoTiles, "empty placement");
    if (p.tiles.size() > static_cast<std::size_t>(kRackSize))
        throw IllegalMoveError(Rule::TooManyTiles, std::to_string(p.tiles.size()) + " tiles");

    for (std::size_t i = 0; i < p.tiles.size(); ++i) {
        const PlacedTile& t = p.tiles[i];
        if (!layout.in_bounds(t.at)) throw IllegalMoveError(Rule::OutOfBounds, to_a1(t.at));
        if (t.letter < 'A' || t.letter > 'Z') throw IllegalMoveError(Rule::BadLetter, std::string(1, t.letter));
        if (!s.cell(t.at).empty()) throw IllegalMoveError(Rule::OccupiedCell, to_a1(t.at));
        for (std::size_t j = 0; j < i; ++j)
            if (p.tiles[j].at == t.at) throw IllegalMoveError(Rule::DuplicateCell, to_a1(t.at));
    }

    std::vector<char> wanted = rack_tiles_for(p);
    std::vector<char> rack = s.racks[s.mover()];
    if (!take_from_rack(rack, wanted)) throw IllegalMoveError(Rule::RackMismatch, "mover does not hold the tiles");

    const Direction dir = p.tiles.size() == 1 ? Direction::Across : p.direction;
    const Coord first = p.tiles.front().at;
    for (const auto& t : p.tiles) {
        if (dir == Direction::Across ? t.at.row != first.row : t.at.col != first.col)
            throw IllegalMoveError(Rule::NotInLine, to_a1(t.at));
    }

    auto placed_at = [&](Coord c) -> const PlacedTile* {
        for (const auto& t : p.tiles)
            if (t.at == c) return &t;
        return nullptr;
    };
    auto letter_at = [&](Coord c) -> char {
        if (!layout.in_bounds(c)) return 0;
        if (const PlacedTile* t = placed_at(c)) return t->letter;
        return s.cell(c).letter;
    };

    auto along = [&](Coord c) { return dir == Direction::Across ? c.col : c.row; };
    const auto [lo, hi] = std::minmax_element(p.tiles.begin(), p.tiles.end(),
                                              [&](const PlacedTile& a, const PlacedTile& b) { return along(a.at) < along(b.at); });
    for (Coord c = lo->at; along(c) <= along(hi->at); c = step(c, dir))
        if (letter_at(c) == 0) throw IllegalMoveError(Rule::Gap, to_a1(c));

    if (s.board_empty()) {
        if (!placed_at(layout.center())) throw IllegalMoveError(Rule::MissesCenter, to_a1(layout.center()));
    } else {
        bool touches = false;
        for (const auto& t : p.tiles) {
            for (Direction d : {Direction::Across, Direction::Down})
                for (int n : {-1, 1})
                    if (s.occupied(step(t.at, d, n))) touches = true;
        }
        if (!touches) throw IllegalMoveError(Rule::Disconnected, "no placed tile touches the board");
    }

    Analysis out;
    auto score_run = [&](Coord through, Direction d) {
        Coord start = through;
        while (letter_at(step(start, d, -1))) start = step(start, d, -1);
        Coord end = through;
        while (letter_at(step(end, d, 1))) end = step(end, d, 1);
        if (start == end) return;
        std::string word;
        int sum = 0;
        int mult = 1;
        for (Coord c = start;; c = step(c, d)) {
            word.push_back(letter_at(c));
            if (const PlacedTile* t = placed_at(c)) {
                sum += s.tile_value(t->letter, t->blank) * layout.letter_multiplier(c);
                mult *= layout.word_multiplier(c);
            } else {
                sum += s.tile_value(s.cell(c).letter, s.cell(c).blank);
            }
            if (c == end) break;
        }
        out.points += sum * mult;
        out.words.push_back(std::move(word));
    };

    score_run(first, dir);
    for (const auto& t : p.tiles) score_run(t.at, other(dir));
    if (out.words.empty()) throw IllegalMoveError(Rule::NoWordFormed, "placement forms no word of two or more letters");

    for (const auto& w : out.words)
        if (!s.dictionary->contains(w)) throw IllegalMoveError(Rule::NotInDictionary, w);

    if (p.tiles.size() == static_cast<std::size_t>(kRackSize)) out.points += kBingoBonus;
    return out;
}

void check_exchange(const GameState& s, const Exchange& e) {
    if (s.terminal()) throw IllegalMoveError(Rule::GameOver, "the game has ended");
    if (s.bag.size() < static_cast<std::size_t>(kRackSize))
        throw IllegalMoveError(Rule::BagTooSmall, std::to_string(s.bag.size()) + " tiles in bag");
    if (e.tiles.empty()) throw IllegalMoveError(Rule::NoTiles, "empty exchange");
    if (e.tiles.size() > static_cast<std::size_t>(kRackSize)) throw IllegalMoveError(Rule::TooManyTiles, "exchange");
    std::vector<char> rack = s.racks[s.mover()];
    if (!take_from_rack(rack, e.tiles)) throw IllegalMoveError(Rule::RackMismatch, "mover does not hold the tiles");
}

}  // namespace

GameState new_game(const BoardLayout& layout, TileBag bag, std::shared_ptr<const TileSet> tiles,
                   std::shared_ptr<const WordAutomaton> dictionary) {
    if (!dictionary || dictionary->word_count() == 0) throw std::invalid_argument("new_game needs a dictionary");
    GameState s;
    s.layout = layout;
    s.tiles = std::move(tiles);
    s.dictionary = std::move(dictionary);
    s.cells.assign(static_cast<std::size_t>(layout.area()), Cell{});
    s.bag = std::move(bag);
    for (auto& rack : s.racks) refill(rack, s.bag);
    return s;
}

GameState new_game(const BoardLayout& layout, std::shared_ptr<const TileSet> tiles,
                   std::shared_ptr<const WordAutomaton> dictionary, std::uint64_t bag_seed) {
    TileBag bag(*tiles, bag_seed);
    return new_game(layout, std::move(bag), std::move(tiles), std::move(dictionary));
}

std::vector<std::string> words_formed(const GameState& state, const Placement& placement) {
    return analyze(state, placement).words;
}

int score_placement(const GameState& state, const Placement& placement) { return analyze(state, placement).points; }

void check_move(const GameState& state, const Move& move) {
    if (const auto* p = std::get_if<Placement>(&move)) {
        analyze(state, *p);
    } else if (const auto* e = std::get_if<Exchange>(&move)) {
        check_exchange(state, *e);
    } else if (state.terminal()) {
        throw IllegalMoveError(Rule::GameOver, "the game has ended");
    }
}

std::pair<GameState, MoveOutcome> apply_move(const GameState& state, const Move& move) {
    GameState next = state;
    MoveOutcome outcome;
    const int me = state.mover();
    auto& rack = next.racks[me];

    if (const auto* p = std::get_if<Placement>(&move)) {
        Analysis a = analyze(state, *p);
        take_from_rack(rack, rack_tiles_for(*p));
        for (const auto& t : p->tiles) next.cells[next.layout.index(t.at)] = Cell{t.letter, t.blank};
        refill(rack, next.bag);
        outcome.points = a.points;
        outcome.words_formed = std::move(a.words);
    } else if (const auto* e = std::get_if<Exchange>(&move)) {
        check_exchange(state, *e);
        take_from_rack(rack, e->tiles);
        refill(rack, next.bag);
        next.bag.put_back(e->tiles);
    } else if (state.terminal()) {
        throw IllegalMoveError(Rule::GameOver, "the game has ended");
    }

    next.scores[me] += outcome.points;
    next.scoreless_streak = outcome.points == 0 ? state.scoreless_streak + 1 : 0;
    ++next.turn;
    if (rack.empty() && next.bag.empty()) {
        next.end = EndReason::PlayedOut;
        next.went_out = me;
    } else if (next.scoreless_streak >= kScorelessTurnLimit) {
        next.end = EndReason::ScorelessStreak;
    }
    outcome.terminal = next.terminal();
    return {std::move(next), std::move(outcome)};
}

std::array<int, kPlayers> final_adjust(const GameState& state) {
    if (!state.terminal()) throw std::logic_error("final_adjust called before the game ended");
    std::array<int, kPlayers> out = state.scores;
    if (state.end == EndReason::PlayedOut) {
        const int winner = state.went_out;
        const int loser = 1 - winner;
        const int left = state.rack_value(loser);
        out[winner] += left;
        out[loser] -= left;
    } else {
        for (int pl = 0; pl < kPlayers; ++pl) out[pl] -= state.rack_value(pl);
    }
    return out;
}

}  // namespace wordlab
