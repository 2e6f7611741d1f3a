#include "wordlab/fuzz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wordlab/oracle.hpp"
#include "wordlab/rng.hpp"

namespace wordlab {

FuzzInstance random_instance(std::uint64_t seed) {
    Rng rng(seed);
    const int size = 5 + 2 * static_cast<int>(rng.below(6));

    std::vector<Premium> premiums(static_cast<std::size_t>(size * size), Premium::None);
    for (auto& p : premiums)
        if (rng.below(4) == 0) p = static_cast<Premium>(1 + rng.below(4));
    BoardLayout layout(size, std::move(premiums));

    std::string alphabet;
    const int letters = 3 + static_cast<int>(rng.below(4));
    while (static_cast<int>(alphabet.size()) < letters) {
        const char c = static_cast<char>('A' + rng.below(26));
        if (alphabet.find(c) == std::string::npos) alphabet.push_back(c);
    }

    std::vector<std::string> words;
    const int target = 10 + static_cast<int>(rng.below(41));
    for (int i = 0; i < target; ++i) {
        const int len = 2 + static_cast<int>(std::min(rng.below(4), rng.below(5)));
        std::string w;
        for (int k = 0; k < len; ++k) w.push_back(alphabet[rng.below(alphabet.size())]);
        words.push_back(w);
    }
    Lexicon dictionary(std::move(words), "fuzz");

    std::ostringstream tiles_text;
    for (char c : alphabet) tiles_text << c << ' ' << 5 + rng.below(8) << ' ' << rng.below(6) << '\n';
    const std::uint64_t blanks = rng.below(3);
    if (blanks) tiles_text << "? " << blanks << " 0\n";
    auto tiles = std::make_shared<const TileSet>(TileSet::parse(tiles_text.str()));

    const double p = rng.below(2) ? 1.0 : 0.5 + 0.5 * rng.uniform();
    Lexicon knowledge = sample_knowledge(dictionary, {p, rng.next()});
    auto dict_automaton = std::make_shared<const WordAutomaton>(dictionary);

    GameState state = new_game(layout, tiles, dict_automaton, rng.next());
    const int plies = static_cast<int>(rng.below(12));
    for (int i = 0; i < plies; ++i) {
        const auto moves = generate_moves(state, *dict_automaton);
        Move m = Pass{};
        if (!moves.empty()) m = moves[rng.below(moves.size())].placement;
        auto next = apply_move(state, m).first;
        if (next.terminal()) break;
        state = std::move(next);
    }

    FuzzInstance inst;
    inst.state = std::move(state);
    inst.knowledge = std::move(knowledge);
    inst.knowledge_automaton = std::make_shared<const WordAutomaton>(inst.knowledge);
    std::ostringstream desc;
    desc << "seed " << seed << ", " << size << "x" << size << ", alphabet " << alphabet << ", "
         << inst.knowledge.size() << "/" << dictionary.size() << " words known";
    inst.description = desc.str();
    return inst;
}

std::string describe_state(const GameState& s) {
    std::ostringstream os;
    for (int r = 0; r < s.layout.size(); ++r) {
        for (int c = 0; c < s.layout.size(); ++c) {
            const Cell& cell = s.cell({r, c});
            os << (cell.empty() ? '.' : cell.blank ? static_cast<char>(cell.letter - 'A' + 'a') : cell.letter);
        }
        os << '\n';
    }
    os << "rack: " << std::string(s.racks[s.mover()].begin(), s.racks[s.mover()].end()) << '\n';
    return os.str();
}

std::string describe_move(const GeneratedMove& m) {
    std::ostringstream os;
    os << (m.placement.direction == Direction::Across ? "across" : "down");
    for (const auto& t : m.placement.tiles)
        os << ' ' << to_a1(t.at) << '=' << (t.blank ? static_cast<char>(t.letter - 'A' + 'a') : t.letter);
    os << " (" << m.points << " pts)";
    return os.str();
}

FuzzReport fuzz_movegen(int iterations, std::uint64_t seed, const MoveListHook& tamper) {
    FuzzReport report;
    report.iterations = iterations;
    for (int i = 0; i < iterations; ++i) {
        FuzzInstance inst = random_instance(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
        auto fast = generate_moves(inst.state, *inst.knowledge_automaton);
        if (tamper) tamper(fast);
        std::sort(fast.begin(), fast.end());
        const auto slow = oracle_generate(inst.state, inst.knowledge);
        ++report.checked;
        if (fast == slow) continue;

        std::vector<GeneratedMove> only_fast;
        std::vector<GeneratedMove> only_slow;
        std::set_difference(fast.begin(), fast.end(), slow.begin(), slow.end(), std::back_inserter(only_fast));
        std::set_difference(slow.begin(), slow.end(), fast.begin(), fast.end(), std::back_inserter(only_slow));
        std::ostringstream os;
        os << "instance " << i << " (" << inst.description << ")\n" << describe_state(inst.state);
        os << "generator: " << fast.size() << " moves, oracle: " << slow.size() << " moves\n";
        for (const auto& m : only_fast) os << "  generator only: " << describe_move(m) << '\n';
        for (const auto& m : only_slow) os << "  oracle only:    " << describe_move(m) << '\n';
        report.ok = false;
        report.counterexample = os.str();
        break;
    }
    return report;
}

}  // namespace wordlab
