#include "wordlab/board.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wordlab {

namespace {

constexpr std::string_view kStandardLayout = R"(
TW .. .. DL .. .. .. TW .. .. .. DL .. .. TW
.. DW .. .. .. TL .. .. .. TL .. .. .. DW ..
.. .. DW .. .. .. DL .. DL .. .. .. DW .. ..
DL .. .. DW .. .. .. DL .. .. .. DW .. .. DL
.. .. .. .. DW .. .. .. .. .. DW .. .. .. ..
.. TL .. .. .. TL .. .. .. TL .. .. .. TL ..
.. .. DL .. .. .. DL .. DL .. .. .. DL .. ..
TW .. .. DL .. .. .. DW .. .. .. DL .. .. TW
.. .. DL .. .. .. DL .. DL .. .. .. DL .. ..
.. TL .. .. .. TL .. .. .. TL .. .. .. TL ..
.. .. .. .. DW .. .. .. .. .. DW .. .. .. ..
DL .. .. DW .. .. .. DL .. .. .. DW .. .. DL
.. .. DW .. .. .. DL .. DL .. .. .. DW .. ..
.. DW .. .. .. TL .. .. .. TL .. .. .. DW ..
TW .. .. DL .. .. .. TW .. .. .. DL .. .. TW
)";

constexpr std::string_view kCompact13Layout = R"(
DW .. .. .. TL .. .. .. TL .. .. .. DW
.. DW .. .. .. DL .. DL .. .. .. DW ..
.. .. DW .. .. .. DL .. .. .. DW .. ..
.. .. .. DW .. .. .. .. .. DW .. .. ..
TL .. .. .. TL .. .. .. TL .. .. .. TL
.. DL .. .. .. DL .. DL .. .. .. DL ..
.. .. DL .. .. .. DW .. .. .. DL .. ..
.. DL .. .. .. DL .. DL .. .. .. DL ..
TL .. .. .. TL .. .. .. TL .. .. .. TL
.. .. .. DW .. .. .. .. .. DW .. .. ..
.. .. DW .. .. .. DL .. .. .. DW .. ..
.. DW .. .. .. DL .. DL .. .. .. DW ..
DW .. .. .. TL .. .. .. TL .. .. .. DW
)";

constexpr std::string_view kEnglishTiles = R"(# English tile distribution, format v1: LETTER COUNT VALUE (? = blank)
A 9 1
B 2 3
C 2 3
D 4 2
E 12 1
F 2 4
G 3 2
H 2 4
I 9 1
J 1 8
K 1 5
L 4 1
M 2 3
N 6 1
O 8 1
P 2 3
Q 1 10
R 6 1
S 4 1
T 6 1
U 4 1
V 2 4
W 2 4
X 1 8
Y 2 4
Z 1 10
? 2 0
)";

}  // namespace

std::string_view premium_token(Premium p) {
    switch (p) {
        case Premium::None: return "..";
        case Premium::DoubleLetter: return "DL";
        case Premium::TripleLetter: return "TL";
        case Premium::DoubleWord: return "DW";
        case Premium::TripleWord: return "TW";
    }
    return "..";
}

std::optional<Premium> parse_premium_token(std::string_view token) {
    for (Premium p : {Premium::None, Premium::DoubleLetter, Premium::TripleLetter, Premium::DoubleWord,
                      Premium::TripleWord})
        if (premium_token(p) == token) return p;
    return std::nullopt;
}

std::string to_a1(Coord c) {
    return std::string(1, static_cast<char>('A' + c.col)) + std::to_string(c.row + 1);
}

std::optional<Coord> parse_a1(std::string_view text) {
    if (text.size() < 2 || text[0] < 'A' || text[0] > 'Z') return std::nullopt;
    int row = 0;
    for (char ch : text.substr(1)) {
        if (ch < '0' || ch > '9') return std::nullopt;
        row = row * 10 + (ch - '0');
        if (row > 99) return std::nullopt;
    }
    if (row < 1) return std::nullopt;
    return Coord{row - 1, text[0] - 'A'};
}

BoardLayout::BoardLayout(int size) : BoardLayout(size, std::vector<Premium>(std::size_t(size) * size, Premium::None)) {}

BoardLayout::BoardLayout(int size, std::vector<Premium> premiums) : size_(size), premiums_(std::move(premiums)) {
    if (size < 1 || size % 2 == 0 || size > 25) throw std::invalid_argument("board size must be odd and in [1, 25]");
    if (premiums_.size() != std::size_t(size) * size) throw std::invalid_argument("premium grid does not match board size");
}

BoardLayout BoardLayout::standard() {
    static const BoardLayout layout = from_ascii(kStandardLayout);
    return layout;
}

BoardLayout BoardLayout::compact13() {
    static const BoardLayout layout = from_ascii(kCompact13Layout);
    return layout;
}

BoardLayout BoardLayout::for_variant(int size) {
    if (size == 15) return standard();
    if (size == 13) return compact13();
    throw std::invalid_argument("unknown board variant " + std::to_string(size) + " (expected 15 or 13)");
}

BoardLayout BoardLayout::from_ascii(std::string_view text) {
    std::vector<Premium> cells;
    int rows = 0;
    int width = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        int n = 0;
        while (ls >> tok) {
            auto p = parse_premium_token(tok);
            if (!p) throw std::invalid_argument("bad premium token '" + tok + "'");
            cells.push_back(*p);
            ++n;
        }
        if (n == 0) continue;
        if (width >= 0 && n != width) throw std::invalid_argument("ragged layout rows");
        width = n;
        ++rows;
    }
    if (rows != width) throw std::invalid_argument("layout must be square");
    return BoardLayout(rows, std::move(cells));
}

int BoardLayout::letter_multiplier(Coord c) const noexcept {
    switch (at(c)) {
        case Premium::DoubleLetter: return 2;
        case Premium::TripleLetter: return 3;
        default: return 1;
    }
}

int BoardLayout::word_multiplier(Coord c) const noexcept {
    switch (at(c)) {
        case Premium::DoubleWord: return 2;
        case Premium::TripleWord: return 3;
        default: return 1;
    }
}

std::size_t BoardLayout::count(Premium p) const { return static_cast<std::size_t>(std::count(premiums_.begin(), premiums_.end(), p)); }

bool BoardLayout::rotationally_symmetric() const {
    const std::size_t n = premiums_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (premiums_[i] != premiums_[n - 1 - i]) return false;
    return true;
}

std::string BoardLayout::to_ascii() const {
    std::string out;
    for (int r = 0; r < size_; ++r) {
        for (int c = 0; c < size_; ++c) {
            if (c) out.push_back(' ');
            out.append(premium_token(at({r, c})));
        }
        out.push_back('\n');
    }
    return out;
}

std::string_view english_tile_distribution() { return kEnglishTiles; }

const TileSet& TileSet::english() {
    static const TileSet set = parse(kEnglishTiles);
    return set;
}

TileSet TileSet::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

TileSet TileSet::parse(std::istream& in) {
    TileSet set;
    std::array<bool, kTileKinds> seen{};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string letter;
        int count = -1;
        int value = -1;
        std::string extra;
        if (!(ls >> letter >> count >> value) || (ls >> extra) || letter.size() != 1 || count < 0 || value < 0)
            throw std::invalid_argument("tile distribution line " + std::to_string(lineno) + ": expected 'LETTER COUNT VALUE'");
        char ch = letter[0];
        if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
        if (!((ch >= 'A' && ch <= 'Z') || ch == kBlankTile))
            throw std::invalid_argument("tile distribution line " + std::to_string(lineno) + ": bad letter");
        const int k = tile_kind(ch);
        if (seen[k]) throw std::invalid_argument("tile distribution line " + std::to_string(lineno) + ": duplicate letter");
        if (ch == kBlankTile && value != 0) throw std::invalid_argument("blank tiles must have value 0");
        seen[k] = true;
        set.counts_[k] = count;
        set.values_[k] = value;
    }
    return set;
}

int TileSet::total_tiles() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int TileSet::total_points() const {
    int sum = 0;
    for (int k = 0; k < kTileKinds; ++k) sum += counts_[k] * values_[k];
    return sum;
}

std::string TileSet::to_text() const {
    std::ostringstream os;
    for (int k = 0; k < kTileKinds; ++k)
        if (counts_[k] > 0) os << kind_tile(k) << ' ' << counts_[k] << ' ' << values_[k] << '\n';
    return os.str();
}

TileBag::TileBag(const TileSet& set, std::uint64_t seed) : rng_(seed) {
    tiles_.reserve(static_cast<std::size_t>(set.total_tiles()));
    for (int k = 0; k < kTileKinds; ++k)
        for (int i = 0; i < set.count(kind_tile(k)); ++i) tiles_.push_back(kind_tile(k));
    shuffle();
}

std::optional<char> TileBag::draw() {
    if (tiles_.empty()) return std::nullopt;
    const char t = tiles_.back();
    tiles_.pop_back();
    return t;
}

void TileBag::put_back(std::span<const char> tiles) {
    tiles_.insert(tiles_.end(), tiles.begin(), tiles.end());
    shuffle();
}

void TileBag::shuffle() {
    for (std::size_t i = tiles_.size(); i > 1; --i) std::swap(tiles_[i - 1], tiles_[rng_.below(i)]);
}

}  // namespace wordlab
