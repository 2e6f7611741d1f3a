#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "wordlab/fuzz.hpp"
#include "wordlab/metrics.hpp"

namespace wordlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Streams used by commands; tests substitute string streams.
struct Io {
    std::ostream& out;
    std::ostream& err;
};

/// Runs the configured grid and writes telemetry.csv, metrics.csv,
/// learning.csv and manifest.json (plus per_turn.csv / records/ when asked).
int cmd_simulate(const std::filesystem::path& config, const std::filesystem::path& out_dir, Io io);

struct ReportOptions {
    std::optional<std::filesystem::path> svg_dir;
    FitRange fit;
    double tendency_tolerance = kDefaultTendencyTolerance;
};
int cmd_report(const std::filesystem::path& telemetry_csv, const ReportOptions& options, Io io);

int cmd_board(int variant, Io io);

int cmd_fuzz_movegen(int iterations, std::uint64_t seed, Io io, const MoveListHook& tamper = {});

int cmd_lexicon_stats(const std::filesystem::path& word_list, std::optional<double> fraction, std::uint64_t seed, Io io);

/// Re-plays a game record against the word list it was played with.
int cmd_replay(const std::filesystem::path& record, const std::filesystem::path& word_list, Io io);

/// Hex SHA-256 of a file's bytes. Throws IoError.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace wordlab::cli
