#include "wordlab/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace wordlab {

namespace {

struct Grid {
    int n = 0;
    std::vector<char> letter;   // 0 when empty
    std::vector<bool> blank;
    std::vector<bool> fresh;    // placed by the candidate move

    bool has(int r, int c) const { return r >= 0 && c >= 0 && r < n && c < n && letter[r * n + c] != 0; }
};

class Oracle {
  public:
    Oracle(const GameState& s, const Lexicon& lex) : s_(s), n_(s.layout.size()) {
        for (const auto& w : lex.words()) {
            words_.insert(w);
            max_len_ = std::max<int>(max_len_, static_cast<int>(w.size()));
            for (char c : w) alphabet_.insert(c);
        }
        grid_.n = n_;
        grid_.letter.resize(static_cast<std::size_t>(n_ * n_));
        grid_.blank.resize(grid_.letter.size());
        grid_.fresh.assign(grid_.letter.size(), false);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) {
                grid_.letter[r * n_ + c] = s.cell({r, c}).letter;
                grid_.blank[r * n_ + c] = s.cell({r, c}).blank;
            }
        for (char t : s.racks[s.mover()]) ++rack_[t == kBlankTile ? 26 : t - 'A'];
        rack_size_ = static_cast<int>(s.racks[s.mover()].size());
        empty_board_ = std::none_of(grid_.letter.begin(), grid_.letter.end(), [](char c) { return c != 0; });
    }

    std::vector<GeneratedMove> run() {
        for (int d = 0; d < 2; ++d) {
            const int dr = d == 0 ? 0 : 1;
            const int dc = d == 0 ? 1 : 0;
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c) {
                    if (grid_.letter[r * n_ + c]) continue;
                    // Slots: the first k empty squares from (r, c) onward.
                    slots_.clear();
                    int rr = r;
                    int cc = c;
                    while (rr < n_ && cc < n_ && static_cast<int>(slots_.size()) < std::min(rack_size_, kRackSize)) {
                        if (!grid_.letter[rr * n_ + cc]) {
                            slots_.push_back(rr * n_ + cc);
                            if (geometry_ok(dr, dc)) fill(0, d == 0 ? Direction::Across : Direction::Down);
                        }
                        rr += dr;
                        cc += dc;
                    }
                }
        }
        return {found_.begin(), found_.end()};
    }

  private:
    /// Connection rules depend only on the squares used.
    bool geometry_ok(int dr, int dc) const {
        if (empty_board_) {
            const int center = s_.layout.center().row * n_ + s_.layout.center().col;
            return std::find(slots_.begin(), slots_.end(), center) != slots_.end();
        }
        const int first = slots_.front();
        const int last = slots_.back();
        const int span = (last - first) / (dr * n_ + dc) + 1;
        if (span > static_cast<int>(slots_.size())) return true;  // an existing tile lies inside
        for (int sidx : slots_) {
            const int r = sidx / n_;
            const int c = sidx % n_;
            if (grid_.has(r - 1, c) || grid_.has(r + 1, c) || grid_.has(r, c - 1) || grid_.has(r, c + 1)) return true;
        }
        return false;
    }

    void fill(std::size_t k, Direction dir) {
        if (k == slots_.size()) {
            evaluate(dir);
            return;
        }
        const int cell = slots_[k];
        for (int kind = 0; kind < kTileKinds; ++kind) {
            if (rack_[kind] == 0) continue;
            --rack_[kind];
            grid_.fresh[cell] = true;
            if (kind == 26) {
                grid_.blank[cell] = true;
                for (char letter : alphabet_) {
                    grid_.letter[cell] = letter;
                    fill(k + 1, dir);
                }
            } else {
                grid_.blank[cell] = false;
                grid_.letter[cell] = static_cast<char>('A' + kind);
                fill(k + 1, dir);
            }
            grid_.letter[cell] = 0;
            grid_.blank[cell] = false;
            grid_.fresh[cell] = false;
            ++rack_[kind];
        }
    }

    /// Rescans every row and column; runs touching a fresh tile must be words.
    void evaluate(Direction dir) {
        int points = 0;
        int words = 0;
        std::string run;
        for (int pass = 0; pass < 2; ++pass) {
            for (int line = 0; line < n_; ++line) {
                int pos = 0;
                while (pos < n_) {
                    auto at = [&](int p) { return pass == 0 ? line * n_ + p : p * n_ + line; };
                    if (!grid_.letter[at(pos)]) {
                        ++pos;
                        continue;
                    }
                    int end = pos;
                    bool touched = false;
                    run.clear();
                    int sum = 0;
                    int mult = 1;
                    while (end < n_ && grid_.letter[at(end)]) {
                        const int i = at(end);
                        const Coord c{i / n_, i % n_};
                        run.push_back(grid_.letter[i]);
                        int v = grid_.blank[i] ? 0 : s_.tiles->value(grid_.letter[i]);
                        if (grid_.fresh[i]) {
                            touched = true;
                            v *= s_.layout.letter_multiplier(c);
                            mult *= s_.layout.word_multiplier(c);
                        }
                        sum += v;
                        ++end;
                    }
                    if (touched && run.size() >= 2) {
                        if (static_cast<int>(run.size()) > max_len_ || !words_.contains(run)) return;
                        points += sum * mult;
                        ++words;
                    }
                    pos = end;
                }
            }
        }
        if (words == 0) return;
        if (slots_.size() == static_cast<std::size_t>(kRackSize)) points += kBingoBonus;

        GeneratedMove m;
        m.placement.direction = dir;
        for (int i : slots_) m.placement.tiles.push_back({{i / n_, i % n_}, grid_.letter[i], static_cast<bool>(grid_.blank[i])});
        m.placement = m.placement.normalized();
        m.points = points;
        found_.insert(std::move(m));
    }

    const GameState& s_;
    int n_;
    std::unordered_set<std::string> words_;
    std::set<char> alphabet_;
    int max_len_ = 0;
    Grid grid_;
    std::array<int, kTileKinds> rack_{};
    int rack_size_ = 0;
    bool empty_board_ = false;
    std::vector<int> slots_;
    std::set<GeneratedMove> found_;
};

}  // namespace

std::vector<GeneratedMove> oracle_generate(const GameState& state, const Lexicon& knowledge) {
    return Oracle(state, knowledge).run();
}

}  // namespace wordlab
