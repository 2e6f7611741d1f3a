// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance used
// by a check is a named constant in this file.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wordlab/cli.hpp"
#include "wordlab/fuzz.hpp"
#include "wordlab/game_record.hpp"
#include "wordlab/metrics.hpp"
#include "wordlab/movegen.hpp"
#include "wordlab/rng.hpp"
#include "wordlab/sim.hpp"

using namespace wordlab;
namespace fs = std::filesystem;

namespace {

constexpr double kComplexityTolerance = 0.001;
constexpr double kRefinementTolerance = 0.0015;
constexpr int kFuzzInstances = 300;
constexpr double kFuzzTimeLimitSeconds = 300;
constexpr int kBandMatches = 200;
constexpr double kBandLow = 0.06;
constexpr double kBandHigh = 0.11;
constexpr double kBandTimeLimitSeconds = 600;
// First-move advantage is real in this game; the mean final margin must stay
// within this fraction of the mean final score rather than at zero.
constexpr double kSymmetryTolerance = 0.10;
constexpr int kComplexityMatches = 100;
constexpr double kComplexityFactor = 3.0;
constexpr int kLearningMatches = 50;
constexpr int kBoardMatches = 100;
constexpr int kSelfPlayGames = 1000;
constexpr std::uint64_t kMasterSeed = 20240917;

const std::string kWordList = std::string(WORDLAB_DATA_DIR) + "/sowpods.txt";

const Lexicon& master() {
    static const Lexicon lex = load_word_list_file(kWordList).lexicon;
    return lex;
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<CellAggregate> cells_of(const ExperimentConfig& cfg) {
    return aggregate_cells(run_experiment(cfg, master()));
}

ExperimentConfig grid(int board, std::vector<double> d, std::vector<double> p, int matches) {
    ExperimentConfig cfg;
    cfg.board = board;
    cfg.d_values = std::move(d);
    cfg.p_values = std::move(p);
    cfg.matches = matches;
    cfg.seed = kMasterSeed;
    cfg.dictionary = kWordList;
    return cfg;
}

Verdict formula_fixtures() {
    struct C {
        double b, d, want;
    };
    struct G {
        double g, t, want;
    };
    const C cs[] = {{35, 80, 284.428}, {250, 208, 1148.464}, {9, 9, 19.775}};
    const G gs[] = {{2.64, 22, 0.073},       {36.38, 82.01, 0.073},   {0.976, 12.684, 0.078},
                    {46.336, 79.344, 0.086}, {54.863, 96.465, 0.077}, {68.6, 106.2, 0.078}};
    double worst_c = 0, worst_g = 0;
    for (const C& c : cs) worst_c = std::max(worst_c, std::fabs(complexity(c.b, c.d) - c.want));
    for (const G& g : gs) worst_g = std::max(worst_g, std::fabs(game_refinement(g.g, g.t) - g.want));
    return {worst_c <= kComplexityTolerance && worst_g <= kRefinementTolerance,
            fmt("max |C err| %.5f (tol %.3f), max |GR err| %.5f (tol %.4f)", worst_c, kComplexityTolerance, worst_g,
                kRefinementTolerance)};
}

Verdict movegen_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    const FuzzReport r = fuzz_movegen(kFuzzInstances, kMasterSeed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = fmt("%d/%d instances equal, %.1fs (limit %.0fs)", r.ok ? r.checked : r.checked - 1,
                             kFuzzInstances, secs, kFuzzTimeLimitSeconds);
    if (!r.ok) detail += "\n" + r.counterexample;
    return {r.ok && r.checked >= 100 && secs < kFuzzTimeLimitSeconds, detail};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism() {
    const fs::path dir = fs::temp_directory_path() / "wordlab_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "run.cfg") << "board=15\nd=0.3,1\np=0.5,1\nmatches=6\nseed=7\nworkers=2\nper_turn=true\ndict="
                                   << kWordList << "\n";
    std::ostringstream out, err;
    const int a = cli::cmd_simulate(dir / "run.cfg", dir / "a", {out, err});
    const int b = cli::cmd_simulate(dir / "run.cfg", dir / "b", {out, err});
    bool same = a == 0 && b == 0;
    std::string differing;
    for (const char* f : {"telemetry.csv", "metrics.csv", "learning.csv", "per_turn.csv"}) {
        const std::string x = slurp(dir / "a" / f), y = slurp(dir / "b" / f);
        if (x.empty() || x != y) {
            same = false;
            differing += std::string(" ") + f;
        }
    }
    return {same, same ? "telemetry, metrics, learning and per-turn CSVs byte-identical across two runs"
                       : "exit codes " + std::to_string(a) + "/" + std::to_string(b) + ", differing:" + differing};
}

Verdict gr_band(std::string& symmetry_line, bool& symmetric) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto tel = run_experiment(grid(15, {1.0}, {1.0}, kBandMatches), master());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto cells = aggregate_cells(tel);
    const double gr = cells.at(0).gr;

    double margin = 0, score = 0;
    for (const auto& t : tel) {
        margin += t.final_scores[0] - t.final_scores[1];
        score += 0.5 * (t.final_scores[0] + t.final_scores[1]);
    }
    margin /= tel.size();
    score /= tel.size();
    const bool sym = std::fabs(margin) <= kSymmetryTolerance * score;
    symmetric = sym;
    symmetry_line = fmt("[%s] S  self-play symmetry: mean margin A-B %.2f vs mean score %.1f (tol %.0f%%)",
                        sym ? "PASS" : "FAIL", margin, score, kSymmetryTolerance * 100);
    return {gr >= kBandLow && gr <= kBandHigh && secs < kBandTimeLimitSeconds,
            fmt("GR %.4f over %d matches (band [%.2f, %.2f]; mean S %.2f, N %.2f), %.1fs", gr, kBandMatches, kBandLow,
                kBandHigh, cells[0].mean_s, cells[0].mean_n, secs)};
}

Verdict complexity_monotone() {
    const auto cells = cells_of(grid(15, {0.1}, {0.1, 1.0}, kComplexityMatches));
    const double lo = cells.at(0).c, hi = cells.at(1).c;
    return {hi >= kComplexityFactor * lo,
            fmt("d=0.1: C(p=0.1) %.2f, C(p=1) %.2f, ratio %.2f (need >= %.1f)", lo, hi, hi / lo, kComplexityFactor)};
}

Verdict learning_order() {
    std::vector<double> ps;
    for (int i = 1; i <= 10; ++i) ps.push_back(i / 10.0);
    const auto cells = cells_of(grid(15, {0.1, 0.5, 1.0}, ps, kLearningMatches));
    const auto rows = learning_table(cells);
    const double l01 = *rows.at(0).l, l05 = *rows.at(1).l, l1 = *rows.at(2).l;
    std::string tend;
    for (const auto& r : rows) tend += std::string(" ") + std::string(tendency_name(*r.tendency));
    return {l01 > l05 && l05 > l1, fmt("L(0.1) %.3f, L(0.5) %.3f, L(1.0) %.3f; GR tendencies%s", l01, l05, l1,
                                       tend.c_str())};
}

Verdict board_effect() {
    const double b15 = cells_of(grid(15, {1.0}, {1.0}, kBoardMatches)).at(0).mean_b;
    const double b13 = cells_of(grid(13, {1.0}, {1.0}, kBoardMatches)).at(0).mean_b;
    return {b13 < b15, fmt("mean B 13x13 %.1f vs 15x15 %.1f over %d matches each", b13, b15, kBoardMatches)};
}

Verdict tendency_fixtures() {
    auto series = [](std::initializer_list<double> ys) {
        std::vector<std::pair<double, double>> s;
        int i = 1;
        for (double y : ys) s.push_back({i++ / 10.0, y});
        return s;
    };
    const Tendency low = classify_tendency(
        series({0.2204, 0.1262, 0.1115, 0.0894, 0.0886, 0.0831, 0.0887, 0.0766, 0.0795, 0.0731}),
        kDefaultTendencyTolerance);
    const Tendency high = classify_tendency(
        series({0.0772, 0.0812, 0.0755, 0.0824, 0.0786, 0.0837, 0.0832, 0.0892, 0.0887, 0.0903}),
        kDefaultTendencyTolerance);
    return {low == Tendency::Dec && high == Tendency::Inc,
            fmt("d=0.1 series -> %s, d=0.8 series -> %s (eps %.2f)", std::string(tendency_name(low)).c_str(),
                std::string(tendency_name(high)).c_str(), kDefaultTendencyTolerance)};
}

// ---- engine invariants under random self-play ----

struct Violations {
    int conservation = 0;
    int runs = 0;
    int scoring = 0;
    int replay = 0;
    int record = 0;
    int total() const { return conservation + runs + scoring + replay + record; }
};

bool conserved(const GameState& s) {
    std::array<int, kTileKinds> seen{};
    for (char t : s.bag.contents()) ++seen[tile_kind(t)];
    for (const auto& rack : s.racks)
        for (char t : rack) ++seen[tile_kind(t)];
    for (const Cell& c : s.cells)
        if (!c.empty()) ++seen[c.blank ? tile_kind(kBlankTile) : tile_kind(c.letter)];
    for (int k = 0; k < kTileKinds; ++k)
        if (seen[k] != s.tiles->count(kind_tile(k))) return false;
    return true;
}

template <class Fn>
void for_each_run(const GameState& s, Fn&& fn) {
    const int n = s.layout.size();
    for (Direction dir : {Direction::Across, Direction::Down})
        for (int line = 0; line < n; ++line) {
            std::vector<Coord> run;
            for (int i = 0; i <= n; ++i) {
                const Coord c = dir == Direction::Across ? Coord{line, i} : Coord{i, line};
                if (i < n && s.occupied(c)) {
                    run.push_back(c);
                    continue;
                }
                if (run.size() >= 2) fn(run);
                run.clear();
            }
        }
}

bool runs_valid(const GameState& s, const Lexicon& dprime) {
    bool ok = true;
    for_each_run(s, [&](const std::vector<Coord>& run) {
        std::string w;
        for (Coord c : run) w.push_back(s.cell(c).letter);
        ok = ok && dprime.contains(w);
    });
    return ok;
}

// Whole-board rescan: score every run that contains a new tile.
int naive_score(const GameState& before, const GameState& after, std::size_t placed) {
    int total = 0;
    for_each_run(after, [&](const std::vector<Coord>& run) {
        int sum = 0, mult = 1;
        bool fresh = false;
        for (Coord c : run) {
            const Cell& cell = after.cell(c);
            int v = cell.blank ? 0 : after.tiles->value(cell.letter);
            if (!before.occupied(c)) {
                fresh = true;
                v *= after.layout.letter_multiplier(c);
                mult *= after.layout.word_multiplier(c);
            }
            sum += v;
        }
        if (fresh) total += sum * mult;
    });
    return total + (placed == static_cast<std::size_t>(kRackSize) ? kBingoBonus : 0);
}

Move random_move(const GameState& s, Rng& rng) {
    std::vector<GeneratedMove> moves = generate_moves(s, *s.dictionary);
    const auto& rack = s.racks[s.mover()];
    const bool can_exchange = s.bag.size() >= static_cast<std::size_t>(kRackSize) && !rack.empty();
    if (!moves.empty() && rng.below(20) != 0) return moves[rng.below(moves.size())].placement;
    if (can_exchange) {
        std::vector<char> give;
        for (char t : rack)
            if (rng.below(2)) give.push_back(t);
        if (give.empty()) give.push_back(rack.front());
        return Exchange{give};
    }
    return Pass{};
}

void self_play(int board, Violations& v, int& plies) {
    const auto tiles = std::make_shared<TileSet>(TileSet::english());
    const BoardLayout layout = BoardLayout::for_variant(board);
    std::map<double, std::pair<Lexicon, std::shared_ptr<const WordAutomaton>>> dicts;
    for (double d : {0.05, 0.3, 1.0}) {
        Lexicon sub = sample_subset(master(), {d, dictionary_seed(kMasterSeed, d)});
        auto automaton = std::make_shared<const WordAutomaton>(sub);
        dicts.emplace(d, std::make_pair(std::move(sub), std::move(automaton)));
    }
    const double ds[] = {0.05, 0.3, 1.0};
    for (int g = 0; g < kSelfPlayGames; ++g) {
        const double d = ds[g % 3];
        const auto& [dprime, automaton] = dicts.at(d);
        const std::uint64_t seed = derive_seed(kMasterSeed, {9, static_cast<std::uint64_t>(board), std::uint64_t(g)});
        Rng rng(seed ^ 0xA5A5);
        const GameState initial = new_game(layout, tiles, automaton, seed);
        GameState s = initial;
        std::vector<Move> moves;
        while (!s.terminal()) {
            Move m = random_move(s, rng);
            auto [next, out] = apply_move(s, m);
            if (const auto* p = std::get_if<Placement>(&m)) {
                if (naive_score(s, next, p->tiles.size()) != out.points) ++v.scoring;
            }
            if (!conserved(next)) ++v.conservation;
            if (!runs_valid(next, dprime)) ++v.runs;
            moves.push_back(std::move(m));
            s = std::move(next);
            ++plies;
        }
        GameState again = initial;
        for (const Move& m : moves) again = apply_move(again, m).first;
        if (again.cells != s.cells || again.scores != s.scores || again.racks != s.racks ||
            final_adjust(again) != final_adjust(s))
            ++v.replay;

        const GameRecord rec = make_record({board, d, dictionary_seed(kMasterSeed, d), seed}, initial, moves);
        std::stringstream text;
        write_record(text, rec);
        const ReplayResult r = replay(read_record(text), initial);
        if (r.mismatched_turn != 0 || r.final_state.cells != s.cells || r.adjusted != final_adjust(s)) ++v.record;
    }
}

Verdict engine_invariants() {
    Violations v;
    int plies = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int board : {15, 13}) self_play(board, v, plies);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {v.total() == 0,
            fmt("%d games/board, %d plies; violations: conservation %d, board runs %d, rescore %d, replay %d, "
                "record replay %d; %.1fs",
                kSelfPlayGames, plies, v.conservation, v.runs, v.scoring, v.replay, v.record, secs)};
}

}  // namespace

int main() {
    std::string symmetry;
    bool symmetric = true;
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"formula fixtures", formula_fixtures},
        {"movegen oracle equivalence", movegen_oracle},
        {"simulate determinism", determinism},
        {"desk-scale GR band", [&] { return gr_band(symmetry, symmetric); }},
        {"complexity grows with knowledge", complexity_monotone},
        {"learning coefficient ordering", learning_order},
        {"13x13 lowers branching", board_effect},
        {"tendency fixtures", tendency_fixtures},
        {"engine invariants", engine_invariants},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !v.pass;
        std::printf("[%s] %d  %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", index, name.c_str(), v.detail.c_str(),
                    secs);
        std::fflush(stdout);
        if (index == 4 && !symmetry.empty()) {
            failed += !symmetric;
            std::printf("%s\n", symmetry.c_str());
            std::fflush(stdout);
        }
    }
    std::printf("%d check(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
