#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wordlab/metrics.hpp"
#include "wordlab/sim.hpp"

namespace wordlab {

inline constexpr std::string_view kTelemetryHeader = "board,d,p,match,seed,S,N,D,mean_B,scoreA,scoreB";
inline constexpr std::string_view kPerTurnHeader = "board,d,p,match,turn,mover,kind,points,legal_moves,cumA,cumB";
inline constexpr std::string_view kMetricsHeader = "board,d,p,matches,mean_S,mean_N,mean_B,mean_D,GR,C";
inline constexpr std::string_view kLearningHeader = "board,d,m,L,tendency";

/// "15x15" style label.
std::string board_label(int board);
/// Shortest round-trip text for a fraction ("0.1", "1").
std::string format_fraction(double v);

void write_telemetry_csv(std::ostream& out, std::span<const MatchSummary> matches);
void write_per_turn_csv(std::ostream& out, std::span<const MatchTelemetry> matches);
void write_metrics_csv(std::ostream& out, std::span<const CellAggregate> cells);
void write_learning_csv(std::ostream& out, std::span<const LearningResult> rows);

/// Parses a telemetry CSV; throws ConfigError on a header or row mismatch
/// and on a file without rows.
std::vector<MatchSummary> read_telemetry_csv(std::istream& in);

/// Fixed-width table: variation, board, d, GR range, tendency, L.
std::string format_summary(std::span<const LearningResult> rows);

struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Self-contained SVG line chart.
std::string render_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                              std::span<const ChartSeries> series);

/// The three figure analogues: GR vs p, C vs p, L vs d.
struct ChartSet {
    std::string gr_vs_p;
    std::string c_vs_p;
    std::string l_vs_d;
};
ChartSet render_charts(std::span<const CellAggregate> cells, std::span<const LearningResult> learning);

}  // namespace wordlab
