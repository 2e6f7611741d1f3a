#include "wordlab/word_automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wordlab {

LetterSet LetterSet::of(std::string_view letters) {
    LetterSet s;
    for (char c : letters)
        if (c >= 'A' && c <= 'Z') s.insert(c - 'A');
    return s;
}

std::string LetterSet::to_string() const {
    std::string out;
    for (int i = 0; i < kAlphabetSize; ++i)
        if (contains(i)) out.push_back(static_cast<char>('A' + i));
    return out;
}

WordAutomaton::WordAutomaton(const Lexicon& lexicon) : WordAutomaton(from_sorted(lexicon.words())) {}

namespace {

struct PendingNode {
    bool accept = false;
    std::vector<std::pair<std::uint8_t, std::uint32_t>> edges;  // letter, frozen target
};

}  // namespace

WordAutomaton WordAutomaton::from_sorted(std::span<const std::string> words) {
    if (words.empty()) throw std::invalid_argument("cannot build an automaton from an empty word list");

    WordAutomaton a;
    a.word_count_ = words.size();

    // Register of frozen nodes keyed by (accept, edges). Equal keys mean
    // equal right languages, which is what makes the result minimal.
    std::unordered_map<std::string, std::uint32_t> frozen;
    frozen.reserve(words.size());
    std::string key;

    auto freeze = [&](const PendingNode& n) -> std::uint32_t {
        key.clear();
        key.push_back(n.accept ? '\1' : '\0');
        for (auto [letter, target] : n.edges) {
            key.push_back(static_cast<char>(letter));
            key.append(reinterpret_cast<const char*>(&target), sizeof target);
        }
        auto [it, inserted] = frozen.try_emplace(key, static_cast<std::uint32_t>(a.nodes_.size()));
        if (inserted) {
            Node node;
            node.mask = n.accept ? kAcceptBit : 0;
            node.first = static_cast<std::uint32_t>(a.targets_.size());
            for (auto [letter, target] : n.edges) {
                node.mask |= 1u << letter;
                a.targets_.push_back(target);
            }
            a.nodes_.push_back(node);
        }
        return it->second;
    };

    // path[0..depth] is the mutable chain for the previous word; path[i]
    // reaches path[i + 1] on prev[i].
    std::vector<PendingNode> path(kMaxWordLength + 2);
    std::size_t depth = 0;
    std::string_view prev;

    auto collapse_to = [&](std::size_t target_depth) {
        while (depth > target_depth) {
            const std::uint32_t id = freeze(path[depth]);
            --depth;
            path[depth].edges.emplace_back(static_cast<std::uint8_t>(prev[depth] - 'A'), id);
        }
    };

    for (const auto& w : words) {
        if (w.size() + 1 >= path.size()) path.resize(w.size() + 2);
        if (!prev.empty() && !(prev < std::string_view(w)))
            throw std::invalid_argument("automaton input must be sorted and unique");
        std::size_t common = 0;
        while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
        collapse_to(common);
        for (std::size_t i = common; i < w.size(); ++i) {
            ++depth;
            path[depth].accept = false;
            path[depth].edges.clear();
        }
        path[depth].accept = true;
        prev = w;
    }
    collapse_to(0);
    a.root_ = freeze(path[0]);
    return a;
}

WordAutomaton::State WordAutomaton::walk(State s, std::string_view letters) const noexcept {
    for (char c : letters) {
        if (s == kNoState || c < 'A' || c > 'Z') return kNoState;
        s = next(s, c - 'A');
    }
    return s;
}

bool WordAutomaton::contains(std::string_view word) const noexcept {
    const State s = walk(root_, word);
    return s != kNoState && accepts(s);
}

std::vector<std::string> WordAutomaton::enumerate() const {
    std::vector<std::string> out;
    std::string buf;
    auto rec = [&](auto&& self, State s) -> void {
        if (accepts(s)) out.push_back(buf);
        const LetterSet e = edges(s);
        for (int l = 0; l < kAlphabetSize; ++l) {
            if (!e.contains(l)) continue;
            buf.push_back(static_cast<char>('A' + l));
            self(self, next(s, l));
            buf.pop_back();
        }
    };
    rec(rec, root_);
    return out;
}

}  // namespace wordlab
