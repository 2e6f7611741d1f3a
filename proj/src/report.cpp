#include "wordlab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_board_label(const std::string& s) {
    if (s == "15x15") return 15;
    if (s == "13x13") return 13;
    throw ConfigError("unknown board label '" + s + "'");
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("bad number '" + s + "'");
    return v;
}

template <class Int>
Int to_int(const std::string& s) {
    Int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ConfigError("bad integer '" + s + "'");
    return v;
}

std::string variation_label(int board, double d) {
    if (board == 15 && d == 1.0) return "standard";
    if (d == 1.0) return "reduced-board";
    if (board == 15) return "reduced-dict";
    return "reduced-board+dict";
}

}  // namespace

std::string board_label(int board) { return std::to_string(board) + "x" + std::to_string(board); }

std::string format_fraction(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

void write_telemetry_csv(std::ostream& out, std::span<const MatchSummary> matches) {
    out << kTelemetryHeader << '\n';
    for (const auto& m : matches) {
        out << board_label(m.cell.board) << ',' << format_fraction(m.cell.d) << ',' << format_fraction(m.cell.p) << ','
            << m.match << ',' << m.seed << ',' << m.s << ',' << m.n << ',' << m.d << ',' << fixed(m.mean_b) << ','
            << m.score_a << ',' << m.score_b << '\n';
    }
}

void write_per_turn_csv(std::ostream& out, std::span<const MatchTelemetry> matches) {
    out << kPerTurnHeader << '\n';
    for (const auto& m : matches)
        for (const auto& t : m.turns)
            out << board_label(m.cell.board) << ',' << format_fraction(m.cell.d) << ',' << format_fraction(m.cell.p)
                << ',' << m.match << ',' << t.turn << ',' << (t.mover == 0 ? 'A' : 'B') << ','
                << move_kind_name(t.kind) << ',' << t.points << ',' << t.legal_moves << ',' << t.cum_a << ','
                << t.cum_b << '\n';
}

void write_metrics_csv(std::ostream& out, std::span<const CellAggregate> cells) {
    out << kMetricsHeader << '\n';
    for (const auto& c : cells)
        out << board_label(c.cell.board) << ',' << format_fraction(c.cell.d) << ',' << format_fraction(c.cell.p) << ','
            << c.matches << ',' << fixed(c.mean_s) << ',' << fixed(c.mean_n) << ',' << fixed(c.mean_b) << ','
            << fixed(c.mean_d) << ',' << fixed(c.gr) << ',' << fixed(c.c) << '\n';
}

void write_learning_csv(std::ostream& out, std::span<const LearningResult> rows) {
    out << kLearningHeader << '\n';
    for (const auto& r : rows)
        out << board_label(r.board) << ',' << format_fraction(r.d) << ',' << (r.m ? fixed(*r.m) : "NA") << ','
            << (r.l ? fixed(*r.l) : "NA") << ',' << (r.tendency ? tendency_name(*r.tendency) : "NA") << '\n';
}

std::vector<MatchSummary> read_telemetry_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("telemetry CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTelemetryHeader) throw ConfigError("telemetry CSV header mismatch: '" + line + "'");
    std::vector<MatchSummary> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto f = split_csv(line);
        if (f.size() != 11) throw ConfigError("telemetry CSV line " + std::to_string(lineno) + ": expected 11 fields");
        try {
            MatchSummary m;
            m.cell = {parse_board_label(f[0]), to_double(f[1]), to_double(f[2])};
            m.match = to_int<int>(f[3]);
            m.seed = to_int<std::uint64_t>(f[4]);
            m.s = to_int<int>(f[5]);
            m.n = to_int<int>(f[6]);
            m.d = to_int<int>(f[7]);
            m.mean_b = to_double(f[8]);
            m.score_a = to_int<int>(f[9]);
            m.score_b = to_int<int>(f[10]);
            if (m.n <= 0 || m.s < 0 || m.s > m.n || m.mean_b < 1) throw ConfigError("inconsistent values");
            out.push_back(m);
        } catch (const ConfigError& e) {
            throw ConfigError("telemetry CSV line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw ConfigError("telemetry CSV has no rows");
    return out;
}

std::string format_summary(std::span<const LearningResult> rows) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "variation" << std::setw(8) << "board" << std::setw(8) << "d"
       << std::setw(22) << "GR" << std::setw(12) << "tendency" << "L\n";
    for (const auto& r : rows) {
        os << std::setw(20) << variation_label(r.board, r.d) << std::setw(8) << board_label(r.board) << std::setw(8)
           << format_fraction(r.d) << std::setw(22) << (fixed(r.gr_min, 4) + " - " + fixed(r.gr_max, 4))
           << std::setw(12) << (r.tendency ? std::string(tendency_name(*r.tendency)) : "NA")
           << (r.l ? fixed(*r.l, 4) : "NA") << '\n';
    }
    return os.str();
}

std::string render_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                              std::span<const ChartSeries> series) {
    constexpr double W = 640, H = 420, L = 70, R = 150, T = 40, B = 50;
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double pad = (ymax - ymin) * 0.05;
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
    static constexpr const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                             "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5;
        const double yv = ymin + (ymax - ymin) * i / 5;
        os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << fixed(xv, 2) << "</text>\n";
        os << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << fixed(yv, 3) << "</text>\n";
        os << "<line x1=\"" << L << "\" y1=\"" << py(yv) << "\" x2=\"" << W - R << "\" y2=\"" << py(yv)
           << "\" stroke=\"#ddd\" stroke-dasharray=\"4 3\"/>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    os << "<text transform=\"translate(16," << (T + H - B) / 2 << ") rotate(-90)\" text-anchor=\"middle\">" << y_label << "</text>\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = palette[i % std::size(palette)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : series[i].points) os << fixed(px(x), 1) << ',' << fixed(py(y), 1) << ' ';
        os << "\"/>\n";
        os << "<text x=\"" << W - R + 10 << "\" y=\"" << T + 14 * (i + 1) << "\" fill=\"" << color << "\">"
           << series[i].label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

ChartSet render_charts(std::span<const CellAggregate> cells, std::span<const LearningResult> learning) {
    std::map<std::pair<int, double>, ChartSeries> gr;
    std::map<std::pair<int, double>, ChartSeries> cx;
    for (const auto& c : cells) {
        const auto key = std::make_pair(c.cell.board, c.cell.d);
        const std::string label = board_label(c.cell.board) + " d=" + format_fraction(c.cell.d);
        gr[key].label = label;
        gr[key].points.emplace_back(c.cell.p, c.gr);
        cx[key].label = label;
        cx[key].points.emplace_back(c.cell.p, c.c);
    }
    std::map<int, ChartSeries> lc;
    for (const auto& r : learning) {
        if (!r.l) continue;
        lc[r.board].label = board_label(r.board);
        lc[r.board].points.emplace_back(r.d, *r.l);
    }
    auto flatten = [](auto& m) {
        std::vector<ChartSeries> v;
        for (auto& [k, s] : m) {
            std::sort(s.points.begin(), s.points.end());
            v.push_back(s);
        }
        return v;
    };
    auto g = flatten(gr);
    auto c = flatten(cx);
    auto l = flatten(lc);
    return {render_line_chart("Game refinement vs knowledge base", "AI knowledge base p", "GR", g),
            render_line_chart("Complexity vs knowledge base", "AI knowledge base p", "C = D ln B", c),
            render_line_chart("Learning coefficient vs dictionary size", "dictionary size d", "L = m / d", l)};
}

}  // namespace wordlab
