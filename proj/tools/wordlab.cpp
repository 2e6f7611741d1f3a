#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wordlab/cli.hpp"

using namespace wordlab;

int main(int argc, char** argv) {
    CLI::App app{"wordlab: word-game refinement experiments"};
    app.set_version_flag("--version", std::string(cli::kToolVersion));
    app.require_subcommand(1);
    cli::Io io{std::cout, std::cerr};
    int code = cli::kExitOk;

    std::string config, out_dir;
    auto* simulate = app.add_subcommand("simulate", "Run a configured experiment grid");
    simulate->add_option("config", config, "Config file")->required();
    simulate->add_option("--out", out_dir, "Output directory")->required();
    simulate->callback([&] { code = cli::cmd_simulate(config, out_dir, io); });

    std::string csv, svg_dir;
    cli::ReportOptions report_opts;
    auto* report = app.add_subcommand("report", "Summarize a telemetry CSV");
    report->add_option("telemetry", csv, "telemetry.csv from simulate")->required();
    report->add_option("--svg", svg_dir, "Directory for SVG charts");
    report->add_option("--fit-p-min", report_opts.fit.p_min, "Lowest p used by the slope fit");
    report->add_option("--fit-p-max", report_opts.fit.p_max, "Highest p used by the slope fit");
    report->add_option("--tendency-eps", report_opts.tendency_tolerance, "Flatness tolerance");
    report->callback([&] {
        if (!svg_dir.empty()) report_opts.svg_dir = svg_dir;
        code = cli::cmd_report(csv, report_opts, io);
    });

    int variant = 15;
    auto* board = app.add_subcommand("board", "Print a board layout");
    board->add_option("--variant", variant, "15 or 13");
    board->callback([&] { code = cli::cmd_board(variant, io); });

    std::string record, dict;
    auto* replay = app.add_subcommand("replay", "Re-play a game record and check its scores");
    replay->add_option("record", record, "Game record file")->required();
    replay->add_option("--dict", dict, "Master word list")->required();
    replay->callback([&] { code = cli::cmd_replay(record, dict, io); });

    int iterations = 100;
    std::uint64_t fuzz_seed = 1;
    bool inject = false;
    auto* fuzz = app.add_subcommand("fuzz-movegen", "Cross-check the move generator against brute force");
    fuzz->add_option("--iterations", iterations, "Random instances");
    fuzz->add_option("--seed", fuzz_seed, "Seed");
    fuzz->add_flag("--inject-score-bug", inject)->group("");
    fuzz->callback([&] {
        MoveListHook hook;
        if (inject)
            hook = [](std::vector<GeneratedMove>& moves) {
                if (!moves.empty()) moves.front().points += 1;
            };
        code = cli::cmd_fuzz_movegen(iterations, fuzz_seed, io, hook);
    });

    std::string words;
    std::optional<double> fraction;
    std::uint64_t lex_seed = 42;
    auto* stats = app.add_subcommand("lexicon-stats", "Word list and automaton statistics");
    stats->add_option("words", words, "Word list")->required();
    stats->add_option("--d", fraction, "Sample a fraction of the list");
    stats->add_option("--seed", lex_seed, "Seed for --d");
    stats->callback([&] { code = cli::cmd_lexicon_stats(words, fraction, lex_seed, io); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kExitUsage;
    }
    return code;
}
