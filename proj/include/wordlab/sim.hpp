#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "wordlab/board.hpp"
#include "wordlab/engine.hpp"
#include "wordlab/lexicon.hpp"
#include "wordlab/word_automaton.hpp"

namespace wordlab {

enum class MoveKind : std::uint8_t { Place, Exchange, Pass };
std::string_view move_kind_name(MoveKind kind);
MoveKind kind_of(const Move& move);

/// Board variant, custom-dictionary fraction d and knowledge fraction p.
struct CellId {
    int board = 15;
    double d = 1.0;
    double p = 1.0;
    auto operator<=>(const CellId&) const = default;
};

enum class Policy : std::uint8_t { Greedy };

struct AgentSpec {
    Policy policy = Policy::Greedy;
    double knowledge_fraction = 1.0;
    std::uint64_t knowledge_seed = 0;
};

struct TurnRecord {
    int turn = 0;
    int mover = 0;
    MoveKind kind = MoveKind::Pass;
    int points = 0;
    std::size_t legal_moves = 0;  ///< placements available to the mover before moving
    int cum_a = 0;
    int cum_b = 0;
    Move move = Pass{};
};

struct MatchTelemetry {
    CellId cell;
    int match = 0;
    std::uint64_t seed = 0;
    std::vector<TurnRecord> turns;
    int swings = 0;       ///< S
    int moves = 0;        ///< N, also the game length D
    double mean_branching = 1.0;  ///< mean over turns of max(legal_moves, 1)
    std::array<int, kPlayers> final_scores{};
};

/// A chosen move together with the number of placements it was chosen from.
struct Decision {
    Move move = Pass{};
    std::size_t legal_moves = 0;
};

/// Highest-scoring placement; ties go to the lowest row, then lowest column,
/// Across before Down, then the smallest tile sequence. Without any
/// placement: exchange the whole rack if the bag allows, else pass.
Decision choose_greedy(const GameState& state, const WordAutomaton& knowledge);
Move greedy_policy(const GameState& state, const WordAutomaton& knowledge);

/// Sign changes of (score A - score B) over the turn sequence. A tie keeps
/// the previous sign; the first nonzero difference sets the initial sign.
int count_swings(const std::vector<TurnRecord>& turns);

/// Shared, immutable inputs of a match.
struct MatchSetup {
    BoardLayout layout = BoardLayout::standard();
    std::shared_ptr<const TileSet> tiles;
    std::shared_ptr<const WordAutomaton> dictionary;
    std::array<std::shared_ptr<const WordAutomaton>, kPlayers> knowledge;
};

/// Plays a full game from `seed` (the bag seed) with both agents greedy.
MatchTelemetry run_match(const MatchSetup& setup, std::uint64_t seed);

struct ExperimentConfig {
    int board = 15;
    std::vector<double> d_values{1.0};
    std::vector<double> p_values{1.0};
    int matches = 1;
    std::uint64_t seed = 42;
    std::filesystem::path dictionary;
    std::filesystem::path tiles;  ///< empty: bundled English set
    int workers = 0;              ///< 0: WORDLAB_WORKERS or hardware concurrency

    /// Throws ConfigError if an invariant is broken.
    void validate() const;
};

/// Worker count from WORDLAB_WORKERS if set, else hardware concurrency.
int resolve_workers(int requested);

/// Runs every (d, p) cell; results ordered by d, then p, then match index.
std::vector<MatchTelemetry> run_experiment(const ExperimentConfig& config);
/// Same, with an already-loaded master word list.
std::vector<MatchTelemetry> run_experiment(const ExperimentConfig& config, const Lexicon& master);

/// Seeds used by run_experiment, exposed for reproducibility checks.
std::uint64_t dictionary_seed(std::uint64_t master, double d);
std::uint64_t match_seed(std::uint64_t master, const CellId& cell, int match);
std::uint64_t knowledge_seed(std::uint64_t master, const CellId& cell, int match, int agent);

}  // namespace wordlab
