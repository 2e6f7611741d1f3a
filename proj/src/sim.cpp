#include "wordlab/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include "wordlab/errors.hpp"
#include "wordlab/movegen.hpp"
#include "wordlab/rng.hpp"

namespace wordlab {

std::string_view move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::Place: return "place";
        case MoveKind::Exchange: return "exchange";
        case MoveKind::Pass: return "pass";
    }
    return "pass";
}

MoveKind kind_of(const Move& move) {
    if (std::holds_alternative<Placement>(move)) return MoveKind::Place;
    if (std::holds_alternative<Exchange>(move)) return MoveKind::Exchange;
    return MoveKind::Pass;
}

namespace {

/// Strict "a is preferred over b" for equal-or-different scores.
bool preferred(int a_points, const Placement& a, int b_points, const Placement& b) {
    if (a_points != b_points) return a_points > b_points;
    const Coord ao = a.tiles.front().at;
    const Coord bo = b.tiles.front().at;
    if (ao != bo) return ao < bo;
    if (a.direction != b.direction) return a.direction == Direction::Across;
    return std::lexicographical_compare(a.tiles.begin(), a.tiles.end(), b.tiles.begin(), b.tiles.end(),
                                        [](const PlacedTile& x, const PlacedTile& y) {
                                            if (x.letter != y.letter) return x.letter < y.letter;
                                            return x.blank < y.blank;
                                        });
}

}  // namespace

Decision choose_greedy(const GameState& state, const WordAutomaton& knowledge) {
    Decision out;
    Placement best;
    int best_points = -1;
    for_each_move(state, knowledge, [&](const Placement& p, int points) {
        ++out.legal_moves;
        if (best_points < 0 || preferred(points, p, best_points, best)) {
            best = p;
            best_points = points;
        }
    });
    if (best_points >= 0) {
        out.move = std::move(best);
    } else if (state.bag.size() >= static_cast<std::size_t>(kRackSize)) {
        out.move = Exchange{state.racks[state.mover()]};
    } else {
        out.move = Pass{};
    }
    return out;
}

Move greedy_policy(const GameState& state, const WordAutomaton& knowledge) {
    return choose_greedy(state, knowledge).move;
}

int count_swings(const std::vector<TurnRecord>& turns) {
    int swings = 0;
    int sign = 0;
    for (const auto& t : turns) {
        const int diff = t.cum_a - t.cum_b;
        const int s = (diff > 0) - (diff < 0);
        if (s == 0) continue;
        if (sign != 0 && s != sign) ++swings;
        sign = s;
    }
    return swings;
}

MatchTelemetry run_match(const MatchSetup& setup, std::uint64_t seed) {
    MatchTelemetry tel;
    tel.seed = seed;
    GameState state = new_game(setup.layout, setup.tiles, setup.dictionary, seed);
    double branching = 0.0;
    while (!state.terminal()) {
        const int me = state.mover();
        Decision d = choose_greedy(state, *setup.knowledge[me]);
        auto [next, outcome] = apply_move(state, d.move);
        TurnRecord rec;
        rec.turn = state.turn;
        rec.mover = me;
        rec.kind = kind_of(d.move);
        rec.points = outcome.points;
        rec.legal_moves = d.legal_moves;
        rec.cum_a = next.scores[0];
        rec.cum_b = next.scores[1];
        rec.move = std::move(d.move);
        branching += static_cast<double>(std::max<std::size_t>(rec.legal_moves, 1));
        tel.turns.push_back(std::move(rec));
        state = std::move(next);
    }
    tel.moves = static_cast<int>(tel.turns.size());
    tel.swings = count_swings(tel.turns);
    tel.mean_branching = tel.moves > 0 ? branching / tel.moves : 1.0;
    tel.final_scores = final_adjust(state);
    return tel;
}

void ExperimentConfig::validate() const {
    if (board != 15 && board != 13) throw ConfigError("board must be 15 or 13");
    if (d_values.empty() || p_values.empty()) throw ConfigError("d and p lists must not be empty");
    for (double v : d_values)
        if (!(v > 0.0 && v <= 1.0)) throw ConfigError("d values must lie in (0, 1]");
    for (double v : p_values)
        if (!(v > 0.0 && v <= 1.0)) throw ConfigError("p values must lie in (0, 1]");
    if (matches < 1) throw ConfigError("matches must be at least 1");
    if (workers < 0) throw ConfigError("workers must not be negative");
}

int resolve_workers(int requested) {
    if (const char* env = std::getenv("WORDLAB_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t dictionary_seed(std::uint64_t master, double d) { return derive_seed(master, {1, seed_tag(d)}); }

std::uint64_t match_seed(std::uint64_t master, const CellId& cell, int match) {
    return derive_seed(master, {2, static_cast<std::uint64_t>(cell.board), seed_tag(cell.d), seed_tag(cell.p),
                                static_cast<std::uint64_t>(match)});
}

std::uint64_t knowledge_seed(std::uint64_t master, const CellId& cell, int match, int agent) {
    return derive_seed(master, {3, seed_tag(cell.d), seed_tag(cell.p), static_cast<std::uint64_t>(match),
                                static_cast<std::uint64_t>(agent)});
}

std::vector<MatchTelemetry> run_experiment(const ExperimentConfig& config) {
    config.validate();
    const Lexicon master = load_word_list_file(config.dictionary).lexicon;
    return run_experiment(config, master);
}

std::vector<MatchTelemetry> run_experiment(const ExperimentConfig& config, const Lexicon& master) {
    config.validate();
    std::shared_ptr<const TileSet> tiles;
    if (config.tiles.empty()) {
        tiles = std::make_shared<TileSet>(TileSet::english());
    } else {
        std::ifstream in(config.tiles);
        if (!in) throw IoError("cannot open tile distribution '" + config.tiles.string() + "'");
        tiles = std::make_shared<TileSet>(TileSet::parse(in));
    }
    const BoardLayout layout = BoardLayout::for_variant(config.board);
    const int workers = resolve_workers(config.workers);

    std::vector<MatchTelemetry> results;
    for (double d : config.d_values) {
        const Lexicon dprime = sample_subset(master, {d, dictionary_seed(config.seed, d)});
        const auto dict = std::make_shared<const WordAutomaton>(dprime);

        struct Task {
            CellId cell;
            int match;
        };
        std::vector<Task> tasks;
        for (double p : config.p_values)
            for (int m = 0; m < config.matches; ++m) tasks.push_back({{config.board, d, p}, m});

        std::vector<MatchTelemetry> chunk(tasks.size());
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    const Task& t = tasks[i];
                    MatchSetup setup;
                    setup.layout = layout;
                    setup.tiles = tiles;
                    setup.dictionary = dict;
                    for (int agent = 0; agent < kPlayers; ++agent) {
                        if (subset_size(dprime.size(), t.cell.p) >= dprime.size()) {
                            setup.knowledge[agent] = dict;
                        } else {
                            const Lexicon known = sample_knowledge(
                                dprime, {t.cell.p, knowledge_seed(config.seed, t.cell, t.match, agent)});
                            setup.knowledge[agent] = std::make_shared<const WordAutomaton>(known);
                        }
                    }
                    MatchTelemetry tel = run_match(setup, match_seed(config.seed, t.cell, t.match));
                    tel.cell = t.cell;
                    tel.match = t.match;
                    chunk[i] = std::move(tel);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    cursor.store(tasks.size());
                }
            }
        };

        const int n = std::min<int>(workers, static_cast<int>(tasks.size()));
        if (n <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < n; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& tel : chunk) results.push_back(std::move(tel));
    }
    return results;
}

}  // namespace wordlab
