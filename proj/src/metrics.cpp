#include "wordlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wordlab {

double game_refinement(double successes, double attempts) {
    if (!(attempts > 0)) throw std::domain_error("game refinement needs attempts > 0");
    if (successes < 0) throw std::domain_error("game refinement needs successes >= 0");
    return std::sqrt(successes) / attempts;
}

double complexity(double branching, double length) {
    if (!(branching >= 1)) throw std::domain_error("complexity needs branching factor >= 1");
    if (length < 0) throw std::domain_error("complexity needs game length >= 0");
    return length * std::log(branching);
}

double fit_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw std::domain_error("slope fit needs at least two points");
    double mx = 0;
    double my = 0;
    for (auto [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxx = 0;
    double sxy = 0;
    for (auto [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) throw std::domain_error("slope fit needs two distinct x values");
    return sxy / sxx;
}

double learning_coefficient(double slope, double d) {
    if (!(d > 0 && d <= 1)) throw std::domain_error("dictionary fraction must lie in (0, 1]");
    return slope / d;
}

std::string_view tendency_name(Tendency t) {
    switch (t) {
        case Tendency::Dec: return "Dec";
        case Tendency::Inc: return "Inc";
        case Tendency::DecThenInc: return "DecThenInc";
        case Tendency::IncThenDec: return "IncThenDec";
        case Tendency::Flat: return "Flat";
    }
    return "Flat";
}

namespace {

/// Vertex x of the least-squares parabola, if it has curvature.
std::optional<double> parabola_vertex(std::span<const std::pair<double, double>> pts) {
    // Centered x keeps the 3x3 normal equations well conditioned.
    double mx = 0;
    for (auto [x, y] : pts) mx += x;
    mx /= static_cast<double>(pts.size());
    double s[5] = {};
    double t[3] = {};
    for (auto [x0, y] : pts) {
        const double x = x0 - mx;
        double p = 1;
        for (int k = 0; k < 5; ++k) {
            s[k] += p;
            if (k < 3) t[k] += p * y;
            p *= x;
        }
    }
    // [s0 s1 s2; s1 s2 s3; s2 s3 s4] * [a b c] = t, solved by Cramer's rule.
    auto det3 = [](double a, double b, double c, double d, double e, double f, double g, double h, double i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    const double det = det3(s[0], s[1], s[2], s[1], s[2], s[3], s[2], s[3], s[4]);
    if (std::abs(det) < 1e-300) return std::nullopt;
    const double b = det3(s[0], t[0], s[2], s[1], t[1], s[3], s[2], t[2], s[4]) / det;
    const double c = det3(s[0], s[1], t[0], s[1], s[2], t[1], s[2], s[3], t[2]) / det;
    if (c == 0) return std::nullopt;
    return mx - b / (2 * c);
}

}  // namespace

Tendency classify_tendency(std::span<const std::pair<double, double>> series, double tolerance) {
    if (series.size() < 4) throw std::domain_error("tendency needs at least four points");
    std::vector<std::pair<double, double>> pts(series.begin(), series.end());
    std::sort(pts.begin(), pts.end());
    const double range = pts.back().first - pts.front().first;
    double mean_abs = 0;
    for (auto [x, y] : pts) mean_abs += std::abs(y);
    mean_abs /= static_cast<double>(pts.size());
    const double threshold = range > 0 ? tolerance * mean_abs / range : 0.0;

    auto sign_of = [&](std::span<const std::pair<double, double>> part) {
        const double m = fit_slope(part);
        if (std::abs(m) <= threshold) return 0;
        return m > 0 ? 1 : -1;
    };

    int first = 0;
    int second = 0;
    bool split = false;
    if (auto vertex = parabola_vertex(pts)) {
        std::vector<std::pair<double, double>> left;
        std::vector<std::pair<double, double>> right;
        for (const auto& p : pts) {
            if (p.first <= *vertex) left.push_back(p);
            if (p.first >= *vertex) right.push_back(p);
        }
        if (left.size() >= 2 && right.size() >= 2) {
            first = sign_of(left);
            second = sign_of(right);
            split = true;
        }
    }
    if (!split) first = second = sign_of(pts);

    if (first == 0 && second == 0) return Tendency::Flat;
    if (first == 0) first = second;
    if (second == 0) second = first;
    if (first < 0 && second < 0) return Tendency::Dec;
    if (first > 0 && second > 0) return Tendency::Inc;
    return first < 0 ? Tendency::DecThenInc : Tendency::IncThenDec;
}

MatchSummary summarize(const MatchTelemetry& t) {
    MatchSummary s;
    s.cell = t.cell;
    s.match = t.match;
    s.seed = t.seed;
    s.s = t.swings;
    s.n = t.moves;
    s.d = t.moves;
    s.mean_b = t.mean_branching;
    s.score_a = t.final_scores[0];
    s.score_b = t.final_scores[1];
    return s;
}

std::vector<CellAggregate> aggregate_cells(std::span<const MatchSummary> matches) {
    if (matches.empty()) throw std::domain_error("no matches to aggregate");
    struct Acc {
        CellAggregate agg;
        double s = 0, n = 0, d = 0, b_weighted = 0, turns = 0;
    };
    std::vector<Acc> accs;
    std::map<CellId, std::size_t> index;
    for (const auto& m : matches) {
        auto [it, inserted] = index.try_emplace(m.cell, accs.size());
        if (inserted) {
            accs.emplace_back();
            accs.back().agg.cell = m.cell;
        }
        Acc& a = accs[it->second];
        ++a.agg.matches;
        a.s += m.s;
        a.n += m.n;
        a.d += m.d;
        a.b_weighted += m.mean_b * m.n;
        a.turns += m.n;
    }
    std::vector<CellAggregate> out;
    out.reserve(accs.size());
    for (auto& a : accs) {
        const double k = a.agg.matches;
        a.agg.mean_s = a.s / k;
        a.agg.mean_n = a.n / k;
        a.agg.mean_d = a.d / k;
        a.agg.mean_b = a.turns > 0 ? a.b_weighted / a.turns : 1.0;
        a.agg.gr = a.agg.mean_n > 0 ? game_refinement(a.agg.mean_s, a.agg.mean_n) : 0.0;
        a.agg.c = complexity(std::max(1.0, a.agg.mean_b), a.agg.mean_d);
        out.push_back(a.agg);
    }
    return out;
}

std::vector<CellAggregate> aggregate_cells(std::span<const MatchTelemetry> matches) {
    std::vector<MatchSummary> s;
    s.reserve(matches.size());
    for (const auto& t : matches) s.push_back(summarize(t));
    return aggregate_cells(s);
}

std::vector<LearningResult> learning_table(std::span<const CellAggregate> cells, FitRange range, double tolerance) {
    std::map<std::pair<int, double>, std::vector<const CellAggregate*>> groups;
    std::vector<std::pair<int, double>> order;
    for (const auto& c : cells) {
        auto key = std::make_pair(c.cell.board, c.cell.d);
        if (!groups.contains(key)) order.push_back(key);
        groups[key].push_back(&c);
    }
    std::vector<LearningResult> out;
    for (const auto& key : order) {
        auto group = groups[key];
        std::sort(group.begin(), group.end(), [](auto* a, auto* b) { return a->cell.p < b->cell.p; });
        std::vector<std::pair<double, double>> fit;
        std::vector<std::pair<double, double>> gr;
        for (const auto* c : group) {
            gr.emplace_back(c->cell.p, c->gr);
            if (c->cell.p >= range.p_min && c->cell.p <= range.p_max) fit.emplace_back(c->cell.p, c->c);
        }
        std::sort(fit.begin(), fit.end());
        LearningResult r;
        r.board = key.first;
        r.d = key.second;
        if (fit.size() >= 2 && fit.front().first != fit.back().first) {
            r.m = fit_slope(fit);
            r.l = learning_coefficient(*r.m, r.d);
        }
        if (gr.size() >= 4) r.tendency = classify_tendency(gr, tolerance);
        auto [lo, hi] = std::minmax_element(gr.begin(), gr.end(), [](auto a, auto b) { return a.second < b.second; });
        r.gr_min = lo->second;
        r.gr_max = hi->second;
        out.push_back(r);
    }
    return out;
}

}  // namespace wordlab
