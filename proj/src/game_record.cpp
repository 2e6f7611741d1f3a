#include "wordlab/game_record.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "wordlab/errors.hpp"
#include "wordlab/report.hpp"

namespace wordlab {

namespace {

char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }
char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

}  // namespace

GameRecord make_record(const RecordHeader& header, const GameState& initial, const std::vector<Move>& moves) {
    GameRecord rec;
    rec.header = header;
    GameState state = initial;
    for (const Move& m : moves) {
        RecordLine line;
        line.turn = state.turn + 1;
        line.player = state.mover();
        line.kind = kind_of(m);
        if (const auto* p = std::get_if<Placement>(&m)) {
            const Direction dir = p->direction;
            auto letter_at = [&](Coord c) -> char {
                if (!state.layout.in_bounds(c)) return 0;
                for (const auto& t : p->tiles)
                    if (t.at == c) return t.blank ? lower(t.letter) : t.letter;
                return state.cell(c).blank ? lower(state.cell(c).letter) : state.cell(c).letter;
            };
            Coord start = p->tiles.front().at;
            while (letter_at(step(start, dir, -1))) start = step(start, dir, -1);
            for (Coord c = start; letter_at(c); c = step(c, dir)) line.word.push_back(letter_at(c));
            line.origin = start;
            line.direction = dir;
        } else if (const auto* e = std::get_if<Exchange>(&m)) {
            line.word.assign(e->tiles.begin(), e->tiles.end());
        }
        auto [next, outcome] = apply_move(state, m);
        line.score = outcome.points;
        rec.lines.push_back(std::move(line));
        state = std::move(next);
    }
    return rec;
}

void write_record(std::ostream& out, const GameRecord& record) {
    out << "# wordlab game record v1\n";
    out << "# board=" << record.header.board << " d=" << format_fraction(record.header.d)
        << " dict_seed=" << record.header.dictionary_seed << " bag_seed=" << record.header.bag_seed << '\n';
    for (const auto& l : record.lines) {
        out << l.turn << ' ' << (l.player == 0 ? 'A' : 'B') << ' ' << move_kind_name(l.kind) << ' ';
        if (l.kind == MoveKind::Place)
            out << to_a1(l.origin) << ' ' << (l.direction == Direction::Across ? "across" : "down");
        else
            out << "- -";
        out << ' ' << (l.word.empty() ? "-" : l.word) << ' ' << l.score << '\n';
    }
}

GameRecord read_record(std::istream& in) {
    GameRecord rec;
    bool have_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string kv;
            while (ls >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = kv.substr(0, eq);
                const std::string val = kv.substr(eq + 1);
                try {
                    if (key == "board") rec.header.board = std::stoi(val);
                    else if (key == "d") rec.header.d = std::stod(val);
                    else if (key == "dict_seed") rec.header.dictionary_seed = std::stoull(val);
                    else if (key == "bag_seed") rec.header.bag_seed = std::stoull(val);
                    else continue;
                } catch (const std::exception&) {
                    throw ConfigError("record line " + std::to_string(lineno) + ": bad header value '" + kv + "'");
                }
                have_header = true;
            }
            continue;
        }
        std::istringstream ls(line);
        RecordLine r;
        std::string player, kind, coord, dir, word;
        if (!(ls >> r.turn >> player >> kind >> coord >> dir >> word >> r.score))
            throw ConfigError("record line " + std::to_string(lineno) + ": expected 7 fields");
        if (player != "A" && player != "B") throw ConfigError("record line " + std::to_string(lineno) + ": bad player");
        r.player = player == "A" ? 0 : 1;
        if (kind == "place") {
            r.kind = MoveKind::Place;
            auto c = parse_a1(coord);
            if (!c || (dir != "across" && dir != "down") || word == "-")
                throw ConfigError("record line " + std::to_string(lineno) + ": bad placement");
            r.origin = *c;
            r.direction = dir == "across" ? Direction::Across : Direction::Down;
            r.word = word;
        } else if (kind == "exchange") {
            r.kind = MoveKind::Exchange;
            r.word = word;
        } else if (kind == "pass") {
            r.kind = MoveKind::Pass;
        } else {
            throw ConfigError("record line " + std::to_string(lineno) + ": unknown move kind '" + kind + "'");
        }
        rec.lines.push_back(std::move(r));
    }
    if (!have_header) throw ConfigError("game record has no header");
    return rec;
}

Move resolve_line(const GameState& state, const RecordLine& line) {
    switch (line.kind) {
        case MoveKind::Pass: return Pass{};
        case MoveKind::Exchange: {
            Exchange e;
            for (char c : line.word) e.tiles.push_back(c == kBlankTile ? c : upper(c));
            return e;
        }
        case MoveKind::Place: break;
    }
    Placement p;
    p.direction = line.direction;
    Coord c = line.origin;
    for (char ch : line.word) {
        if (!state.layout.in_bounds(c)) throw IllegalMoveError(Rule::OutOfBounds, to_a1(c));
        const Cell& cell = state.cell(c);
        const char letter = upper(ch);
        if (cell.empty()) {
            p.tiles.push_back({c, letter, ch != letter});
        } else if (cell.letter != letter) {
            throw IllegalMoveError(Rule::OccupiedCell, to_a1(c) + " holds " + std::string(1, cell.letter));
        }
        c = step(c, line.direction);
    }
    return p.normalized();
}

ReplayResult replay(const GameRecord& record, const GameState& initial) {
    ReplayResult out;
    GameState state = initial;
    for (const auto& l : record.lines) {
        auto [next, outcome] = apply_move(state, resolve_line(state, l));
        if (outcome.points != l.score && out.mismatched_turn == 0) out.mismatched_turn = l.turn;
        state = std::move(next);
    }
    if (state.terminal()) out.adjusted = final_adjust(state);
    out.final_state = std::move(state);
    return out;
}

}  // namespace wordlab
