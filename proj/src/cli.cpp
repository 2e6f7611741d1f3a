#include "wordlab/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wordlab/config.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/game_record.hpp"
#include "wordlab/report.hpp"
#include "wordlab/sim.hpp"

namespace wordlab::cli {

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("error writing '" + path.string() + "'");
}

template <class Fn>
std::string to_string(Fn&& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

std::shared_ptr<const TileSet> load_tiles(const std::filesystem::path& path) {
    if (path.empty()) return std::make_shared<TileSet>(TileSet::english());
    std::ifstream in(path);
    if (!in) throw IoError("cannot open tile distribution '" + path.string() + "'");
    try {
        return std::make_shared<TileSet>(TileSet::parse(in));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

/// Maps the library's exceptions onto exit codes.
template <class Fn>
int guarded(Io io, Fn&& fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EmptyLexiconError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IllegalMoveError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitVerification;
    }
}

}  // namespace

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

int cmd_simulate(const std::filesystem::path& config_path, const std::filesystem::path& out_dir, Io io) {
    return guarded(io, [&] {
        const std::string started = utc_now();
        const RunConfig cfg = load_config(config_path);
        const auto& exp = cfg.experiment;
        const LoadResult loaded = load_word_list_file(exp.dictionary);
        const std::string dict_hash = sha256_file(exp.dictionary);
        load_tiles(exp.tiles);  // fail early on a bad tile file

        const auto telemetry = run_experiment(exp, loaded.lexicon);
        std::vector<MatchSummary> summaries;
        for (const auto& t : telemetry) summaries.push_back(summarize(t));
        const auto cells = aggregate_cells(summaries);
        const auto learning = learning_table(cells, cfg.fit, cfg.tendency_tolerance);

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw IoError("cannot create output directory '" + out_dir.string() + "'");

        std::vector<std::string> outputs{"telemetry.csv", "metrics.csv", "learning.csv"};
        write_file(out_dir / "telemetry.csv", to_string([&](std::ostream& os) { write_telemetry_csv(os, summaries); }));
        write_file(out_dir / "metrics.csv", to_string([&](std::ostream& os) { write_metrics_csv(os, cells); }));
        write_file(out_dir / "learning.csv", to_string([&](std::ostream& os) { write_learning_csv(os, learning); }));
        if (cfg.per_turn) {
            write_file(out_dir / "per_turn.csv", to_string([&](std::ostream& os) { write_per_turn_csv(os, telemetry); }));
            outputs.push_back("per_turn.csv");
        }
        if (cfg.records) {
            const auto dir = out_dir / "records";
            std::filesystem::create_directories(dir, ec);
            if (ec) throw IoError("cannot create '" + dir.string() + "'");
            const auto tiles = load_tiles(exp.tiles);
            const BoardLayout layout = BoardLayout::for_variant(exp.board);
            std::map<double, std::shared_ptr<const WordAutomaton>> dicts;
            for (const auto& t : telemetry) {
                auto& dict = dicts[t.cell.d];
                if (!dict)
                    dict = std::make_shared<const WordAutomaton>(
                        sample_subset(loaded.lexicon, {t.cell.d, dictionary_seed(exp.seed, t.cell.d)}));
                std::vector<Move> moves;
                for (const auto& turn : t.turns) moves.push_back(turn.move);
                const GameState initial = new_game(layout, tiles, dict, t.seed);
                const GameRecord rec = make_record({exp.board, t.cell.d, dictionary_seed(exp.seed, t.cell.d), t.seed},
                                                   initial, moves);
                const std::string name = board_label(exp.board) + "_d" + format_fraction(t.cell.d) + "_p" +
                                         format_fraction(t.cell.p) + "_m" + std::to_string(t.match) + ".txt";
                write_file(dir / name, to_string([&](std::ostream& os) { write_record(os, rec); }));
            }
            outputs.push_back("records/");
        }

        nlohmann::ordered_json manifest;
        manifest["tool"] = "wordlab";
        manifest["version"] = kToolVersion;
        manifest["policy"] = "greedy (highest immediate score)";
        manifest["config_path"] = config_path.string();
        manifest["config"] = cfg.raw;
        manifest["master_seed"] = exp.seed;
        manifest["dictionary"] = {{"path", exp.dictionary.string()},
                                  {"sha256", dict_hash},
                                  {"words", loaded.lexicon.size()},
                                  {"skipped", loaded.skipped}};
        manifest["matches"] = telemetry.size();
        manifest["outputs"] = outputs;
        manifest["started_utc"] = started;
        manifest["finished_utc"] = utc_now();
        write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");

        io.out << "policy: greedy; " << telemetry.size() << " matches, " << cells.size() << " cells\n";
        io.out << format_summary(learning);
        return kExitOk;
    });
}

int cmd_report(const std::filesystem::path& telemetry_csv, const ReportOptions& options, Io io) {
    return guarded(io, [&] {
        std::ifstream in(telemetry_csv);
        if (!in) throw IoError("cannot open '" + telemetry_csv.string() + "'");
        const auto matches = read_telemetry_csv(in);
        const auto cells = aggregate_cells(matches);
        const auto learning = learning_table(cells, options.fit, options.tendency_tolerance);
        io.out << "policy: greedy; " << matches.size() << " matches, " << cells.size() << " cells\n";
        io.out << format_summary(learning);
        if (options.svg_dir) {
            std::error_code ec;
            std::filesystem::create_directories(*options.svg_dir, ec);
            if (ec) throw IoError("cannot create '" + options.svg_dir->string() + "'");
            const ChartSet charts = render_charts(cells, learning);
            write_file(*options.svg_dir / "gr_vs_p.svg", charts.gr_vs_p);
            write_file(*options.svg_dir / "complexity_vs_p.svg", charts.c_vs_p);
            write_file(*options.svg_dir / "learning_vs_d.svg", charts.l_vs_d);
        }
        return kExitOk;
    });
}

int cmd_board(int variant, Io io) {
    if (variant != 15 && variant != 13) {
        io.err << "error: unknown board variant " << variant << " (expected 15 or 13)\n";
        return kExitUsage;
    }
    io.out << BoardLayout::for_variant(variant).to_ascii();
    return kExitOk;
}

int cmd_fuzz_movegen(int iterations, std::uint64_t seed, Io io, const MoveListHook& tamper) {
    if (iterations < 0) {
        io.err << "error: iterations must not be negative\n";
        return kExitUsage;
    }
    if (iterations == 0) {
        io.err << "warning: 0 iterations requested, nothing checked\n";
        return kExitOk;
    }
    const FuzzReport report = fuzz_movegen(iterations, seed, tamper);
    if (!report.ok) {
        io.out << "MISMATCH after " << report.checked << " instance(s)\n" << report.counterexample;
        return kExitVerification;
    }
    io.out << "ok: " << report.checked << " instances, generator matches oracle\n";
    return kExitOk;
}

int cmd_lexicon_stats(const std::filesystem::path& word_list, std::optional<double> fraction, std::uint64_t seed,
                      Io io) {
    return guarded(io, [&] {
        const LoadResult loaded = load_word_list_file(word_list);
        Lexicon lex = loaded.lexicon;
        if (fraction) lex = sample_subset(loaded.lexicon, {*fraction, seed});
        std::map<std::size_t, std::size_t> lengths;
        for (const auto& w : lex.words()) ++lengths[w.size()];
        const WordAutomaton automaton(lex);
        io.out << "file: " << word_list.string() << '\n'
               << "sha256: " << sha256_file(word_list) << '\n'
               << "words: " << loaded.lexicon.size() << " (skipped " << loaded.skipped << ")\n";
        if (fraction) io.out << "subset d=" << format_fraction(*fraction) << " seed=" << seed << ": " << lex.size() << " words\n";
        io.out << "trie nodes: " << lex.trie_node_count() << '\n'
               << "automaton nodes: " << automaton.node_count() << ", edges: " << automaton.edge_count() << '\n'
               << "length histogram:\n";
        for (auto [len, n] : lengths) io.out << "  " << std::setw(2) << len << ": " << n << '\n';
        return kExitOk;
    });
}

int cmd_replay(const std::filesystem::path& record_path, const std::filesystem::path& word_list, Io io) {
    return guarded(io, [&] {
        std::ifstream in(record_path);
        if (!in) throw IoError("cannot open '" + record_path.string() + "'");
        const GameRecord rec = read_record(in);
        const LoadResult loaded = load_word_list_file(word_list);
        const Lexicon dprime = sample_subset(loaded.lexicon, {rec.header.d, rec.header.dictionary_seed});
        auto dict = std::make_shared<const WordAutomaton>(dprime);
        const GameState initial = new_game(BoardLayout::for_variant(rec.header.board),
                                           std::make_shared<TileSet>(TileSet::english()), dict, rec.header.bag_seed);
        const ReplayResult result = replay(rec, initial);
        const auto& s = result.final_state;
        io.out << "replayed " << rec.lines.size() << " moves; scores A=" << s.scores[0] << " B=" << s.scores[1];
        if (s.terminal()) io.out << "; final A=" << result.adjusted[0] << " B=" << result.adjusted[1];
        io.out << '\n';
        if (result.mismatched_turn) {
            io.err << "score mismatch at turn " << result.mismatched_turn << '\n';
            return kExitVerification;
        }
        return kExitOk;
    });
}

}  // namespace wordlab::cli
