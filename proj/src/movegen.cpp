#include "wordlab/movegen.hpp"

#include <algorithm>

namespace wordlab {

namespace {

using State = WordAutomaton::State;

struct CrossInfo {
    LetterSet allowed = LetterSet::all();
    int sum = 0;          // face value of the perpendicular neighbours
    bool present = false; // a perpendicular word would be formed
};

/// `before` and `after` are the perpendicular letters read in board order.
CrossInfo cross_from(std::string_view before, std::string_view after, int sum, const WordAutomaton& a) {
    CrossInfo info;
    if (before.empty() && after.empty()) return info;
    info.present = true;
    info.sum = sum;
    info.allowed = LetterSet{};
    const State head = a.walk(a.root(), before);
    if (head == WordAutomaton::kNoState) return info;
    const LetterSet e = a.edges(head);
    for (int l = 0; l < kAlphabetSize; ++l) {
        if (!e.contains(l)) continue;
        const State tail = a.walk(a.next(head, l), after);
        if (tail != WordAutomaton::kNoState && a.accepts(tail)) info.allowed.insert(l);
    }
    return info;
}

CrossInfo cross_info(const GameState& s, Coord cell, Direction dir, const WordAutomaton& a) {
    const Direction perp = other(dir);
    std::string before;
    std::string after;
    int sum = 0;
    for (Coord c = step(cell, perp, -1); s.occupied(c); c = step(c, perp, -1)) {
        before.push_back(s.cell(c).letter);
        sum += s.tile_value(s.cell(c).letter, s.cell(c).blank);
    }
    std::reverse(before.begin(), before.end());
    for (Coord c = step(cell, perp, 1); s.occupied(c); c = step(c, perp, 1)) {
        after.push_back(s.cell(c).letter);
        sum += s.tile_value(s.cell(c).letter, s.cell(c).blank);
    }
    return cross_from(before, after, sum, a);
}

/// Anchor-based left-part / extend-right search, run once per direction on
/// a view of the board in which the play direction is always along a row.
class Generator {
  public:
    Generator(const GameState& s, const WordAutomaton& a, const MoveVisitor& visit)
        : state_(s), dawg_(a), visit_(visit), n_(s.layout.size()) {
        for (char t : s.racks[s.mover()]) ++rack_[tile_kind(t)];
        rack_total_ = static_cast<int>(s.racks[s.mover()].size());
        const auto area = static_cast<std::size_t>(n_ * n_);
        letter_.resize(area);
        value_.resize(area);
        cross_.resize(area);
        lm_.resize(area);
        wm_.resize(area);
        anchor_.resize(area);
    }

    void run() {
        if (rack_total_ == 0) return;
        run_pass(Direction::Across);
        run_pass(Direction::Down);
    }

  private:
    struct Pending {
        int col;
        char letter;
        bool blank;
    };

    Coord board_coord(int row, int col) const {
        return pass_ == Direction::Across ? Coord{row, col} : Coord{col, row};
    }
    std::size_t idx(int row, int col) const { return static_cast<std::size_t>(row * n_ + col); }

    void run_pass(Direction pass) {
        pass_ = pass;
        const bool empty_board = state_.board_empty();
        for (int r = 0; r < n_; ++r) {
            for (int c = 0; c < n_; ++c) {
                const Coord bc = board_coord(r, c);
                const Cell& cell = state_.cell(bc);
                const std::size_t i = idx(r, c);
                letter_[i] = cell.letter;
                value_[i] = cell.empty() ? 0 : state_.tile_value(cell.letter, cell.blank);
                lm_[i] = state_.layout.letter_multiplier(bc);
                wm_[i] = state_.layout.word_multiplier(bc);
                if (cell.empty()) {
                    cross_[i] = cross_info(state_, bc, pass, dawg_);
                    bool adjacent = false;
                    for (Direction d : {Direction::Across, Direction::Down})
                        for (int k : {-1, 1})
                            if (state_.occupied(step(bc, d, k))) adjacent = true;
                    anchor_[i] = empty_board ? bc == state_.layout.center() : adjacent;
                } else {
                    cross_[i] = CrossInfo{};
                    anchor_[i] = false;
                }
            }
        }
        for (row_ = 0; row_ < n_; ++row_) {
            for (int c = 0; c < n_; ++c) {
                if (!anchor_[idx(row_, c)]) continue;
                anchor_col_ = c;
                if (c > 0 && letter_[idx(row_, c - 1)]) {
                    int start = c - 1;
                    while (start > 0 && letter_[idx(row_, start - 1)]) --start;
                    State st = dawg_.root();
                    for (int k = start; k < c && st != WordAutomaton::kNoState; ++k)
                        st = dawg_.next(st, letter_[idx(row_, k)] - 'A');
                    if (st == WordAutomaton::kNoState) continue;
                    word_start_ = start;
                    extend_right(c, st);
                } else {
                    int limit = 0;
                    for (int k = c - 1; k >= 0 && !letter_[idx(row_, k)] && !anchor_[idx(row_, k)]; --k) ++limit;
                    left_part(dawg_.root(), limit);
                }
            }
        }
    }

    void left_part(State st, int limit) {
        const int k = static_cast<int>(pending_.size());
        for (int i = 0; i < k; ++i) pending_[i].col = anchor_col_ - k + i;
        word_start_ = anchor_col_ - k;
        extend_right(anchor_col_, st);
        if (limit == 0 || rack_total_ < 2) return;
        const LetterSet e = dawg_.edges(st);
        for (int l = 0; l < kAlphabetSize; ++l) {
            if (!e.contains(l)) continue;
            const State nx = dawg_.next(st, l);
            for (int kind : {l, 26}) {
                if (rack_[kind] == 0) continue;
                take(kind);
                pending_.push_back({0, static_cast<char>('A' + l), kind == 26});
                left_part(nx, limit - 1);
                pending_.pop_back();
                give(kind);
            }
        }
    }

    void extend_right(int col, State st) {
        if (col < n_ && letter_[idx(row_, col)]) {
            const State nx = dawg_.next(st, letter_[idx(row_, col)] - 'A');
            if (nx != WordAutomaton::kNoState) extend_right(col + 1, nx);
            return;
        }
        if (col > anchor_col_ && dawg_.accepts(st)) record(col);
        if (col >= n_ || rack_total_ == 0) return;
        const std::size_t i = idx(row_, col);
        const LetterSet options = dawg_.edges(st) & cross_[i].allowed;
        if (options.empty()) return;
        for (int l = 0; l < kAlphabetSize; ++l) {
            if (!options.contains(l)) continue;
            const State nx = dawg_.next(st, l);
            for (int kind : {l, 26}) {
                if (rack_[kind] == 0) continue;
                take(kind);
                pending_.push_back({col, static_cast<char>('A' + l), kind == 26});
                extend_right(col + 1, nx);
                pending_.pop_back();
                give(kind);
            }
        }
    }

    void record(int end) {
        // A lone tile that also forms a word across is found by the Across pass.
        if (pass_ == Direction::Down && pending_.size() == 1 && cross_[idx(row_, pending_[0].col)].present) return;

        int main = 0;
        int word_mult = 1;
        int cross = 0;
        std::size_t j = 0;
        for (int c = word_start_; c < end; ++c) {
            const std::size_t i = idx(row_, c);
            if (letter_[i]) {
                main += value_[i];
                continue;
            }
            const Pending& t = pending_[j++];
            const int v = (t.blank ? 0 : state_.tiles->value(t.letter)) * lm_[i];
            main += v;
            word_mult *= wm_[i];
            if (cross_[i].present) cross += (cross_[i].sum + v) * wm_[i];
        }
        int points = main * word_mult + cross;
        if (pending_.size() == static_cast<std::size_t>(kRackSize)) points += kBingoBonus;

        scratch_.direction = pending_.size() == 1 ? Direction::Across : pass_;
        scratch_.tiles.clear();
        for (const Pending& t : pending_) scratch_.tiles.push_back({board_coord(row_, t.col), t.letter, t.blank});
        visit_(scratch_, points);
    }

    void take(int kind) {
        --rack_[kind];
        --rack_total_;
    }
    void give(int kind) {
        ++rack_[kind];
        ++rack_total_;
    }

    const GameState& state_;
    const WordAutomaton& dawg_;
    const MoveVisitor& visit_;
    int n_;

    std::vector<char> letter_;
    std::vector<int> value_;
    std::vector<CrossInfo> cross_;
    std::vector<int> lm_;
    std::vector<int> wm_;
    std::vector<bool> anchor_;

    std::array<int, kTileKinds> rack_{};
    int rack_total_ = 0;

    Direction pass_ = Direction::Across;
    int row_ = 0;
    int anchor_col_ = 0;
    int word_start_ = 0;
    std::vector<Pending> pending_;
    Placement scratch_;
};

}  // namespace

LetterSet cross_checks(const GameState& state, Coord cell, Direction direction, const WordAutomaton& automaton) {
    return cross_info(state, cell, direction, automaton).allowed;
}

void for_each_move(const GameState& state, const WordAutomaton& knowledge, const MoveVisitor& visit) {
    Generator(state, knowledge, visit).run();
}

std::vector<GeneratedMove> generate_moves(const GameState& state, const WordAutomaton& knowledge) {
    std::vector<GeneratedMove> out;
    for_each_move(state, knowledge, [&](const Placement& p, int points) { out.push_back({p, points}); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_moves(const GameState& state, const WordAutomaton& knowledge) {
    std::size_t n = 0;
    for_each_move(state, knowledge, [&](const Placement&, int) { ++n; });
    return n;
}

}  // namespace wordlab
