#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordlab/sim.hpp"

namespace wordlab {

/// Reporting band for game refinement values; not enforced anywhere.
inline constexpr double kAppropriateZoneLow = 0.07;
inline constexpr double kAppropriateZoneHigh = 0.08;

/// sqrt(G) / T. Throws std::domain_error when T <= 0 or G < 0.
double game_refinement(double successes, double attempts);

/// D * ln(B). Throws std::domain_error when B < 1 or D < 0.
double complexity(double branching, double length);

/// Ordinary least-squares slope of y on x. Throws std::domain_error with
/// fewer than two distinct x values.
double fit_slope(std::span<const std::pair<double, double>> points);

/// m / d. Throws std::domain_error unless 0 < d <= 1.
double learning_coefficient(double slope, double d);

enum class Tendency { Dec, Inc, DecThenInc, IncThenDec, Flat };
std::string_view tendency_name(Tendency t);

inline constexpr double kDefaultTendencyTolerance = 0.05;

/// Shape of a series ordered by x.
///
/// The series is split at the vertex of its least-squares parabola when
/// that vertex leaves at least two points on each side; each part (or the
/// whole series, with no split) is then fitted with a line. A part counts
/// as flat when its slope, applied across the whole x range, moves less
/// than `tolerance` times the mean |y|. Scaling y leaves the label
/// unchanged. Throws std::domain_error with fewer than four points.
Tendency classify_tendency(std::span<const std::pair<double, double>> series,
                           double tolerance = kDefaultTendencyTolerance);

struct CellAggregate {
    CellId cell;
    int matches = 0;
    double mean_s = 0;
    double mean_n = 0;
    double mean_d = 0;
    double mean_b = 1;  ///< per-turn branching averaged over all turns of the cell
    double gr = 0;
    double c = 0;
};

/// Per-match summary; all aggregation needs.
struct MatchSummary {
    CellId cell;
    int match = 0;
    std::uint64_t seed = 0;
    int s = 0;
    int n = 0;
    int d = 0;
    double mean_b = 1;
    int score_a = 0;
    int score_b = 0;
};

MatchSummary summarize(const MatchTelemetry& t);

/// Means first, then the formulas. Cells come out in first-seen order.
/// Throws std::domain_error on empty input.
std::vector<CellAggregate> aggregate_cells(std::span<const MatchSummary> matches);
std::vector<CellAggregate> aggregate_cells(std::span<const MatchTelemetry> matches);

struct LearningResult {
    int board = 15;
    double d = 1;
    std::optional<double> m;  ///< slope of complexity against p
    std::optional<double> l;  ///< m / d
    std::optional<Tendency> tendency;  ///< of GR against p; needs >= 4 p values
    double gr_min = 0;
    double gr_max = 0;
};

struct FitRange {
    double p_min = 0.0;
    double p_max = 1.0;
};

/// One result per (board, d). The slope needs two distinct p values
/// inside `range`; the tendency always uses every p.
std::vector<LearningResult> learning_table(std::span<const CellAggregate> cells, FitRange range = {},
                                           double tolerance = kDefaultTendencyTolerance);

}  // namespace wordlab
