#include "wordlab/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "wordlab/errors.hpp"
#include "wordlab/rng.hpp"

namespace wordlab {

namespace {

bool valid_word(std::string_view w) {
    if (w.size() < kMinWordLength || w.size() > kMaxWordLength) return false;
    return std::all_of(w.begin(), w.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

std::string fraction_label(double f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

Lexicon sample(const Lexicon& source, double fraction, std::uint64_t seed, const char* tag) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::domain_error("sampling fraction must lie in (0, 1], got " + fraction_label(fraction));
    const auto& words = source.words();
    std::string label = source.label() + "@" + tag + "=" + fraction_label(fraction);
    const std::size_t want = subset_size(words.size(), fraction);
    if (want >= words.size()) return Lexicon(words, std::move(label));

    // Selection sampling (Knuth's Algorithm S) keeps the sorted order.
    Rng rng(seed);
    std::vector<std::string> picked;
    picked.reserve(want);
    std::size_t needed = want;
    for (std::size_t i = 0; i < words.size() && needed > 0; ++i) {
        const std::size_t remaining = words.size() - i;
        if (rng.below(remaining) < needed) {
            picked.push_back(words[i]);
            --needed;
        }
    }
    return Lexicon(std::move(picked), std::move(label));
}

}  // namespace

Lexicon::Lexicon(std::vector<std::string> words, std::string label)
    : words_(std::move(words)), label_(std::move(label)) {
    for (const auto& w : words_)
        if (!valid_word(w)) throw std::invalid_argument("invalid lexicon word '" + w + "'");
    if (!std::is_sorted(words_.begin(), words_.end())) std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Lexicon::contains(std::string_view word) const {
    return std::binary_search(words_.begin(), words_.end(), word,
                              [](std::string_view a, std::string_view b) { return a < b; });
}

std::size_t Lexicon::trie_node_count() const {
    std::size_t nodes = 1;
    std::string_view prev;
    for (const auto& w : words_) {
        std::size_t common = 0;
        while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
        nodes += w.size() - common;
        prev = w;
    }
    return nodes;
}

LoadResult load_word_list(std::istream& in, std::string label) {
    if (!in) throw IoError("word list stream is not readable");
    std::vector<std::string> words;
    std::size_t skipped = 0;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        first = false;
        std::string token;
        token.reserve(line.size());
        for (char c : line) {
            if (c == ' ' || c == '\t' || c == '\r') continue;
            token.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : c);
        }
        if (token.empty()) continue;
        if (!valid_word(token)) {
            ++skipped;
            continue;
        }
        words.push_back(std::move(token));
    }
    if (in.bad()) throw IoError("error while reading word list");
    if (words.empty()) throw EmptyLexiconError("word list contains no valid words");
    return LoadResult{Lexicon(std::move(words), std::move(label)), skipped};
}

LoadResult load_word_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list '" + path.string() + "'");
    return load_word_list(in, path.filename().string());
}

std::size_t subset_size(std::size_t total, double fraction) {
    const auto n = static_cast<std::size_t>(std::floor(static_cast<double>(total) * fraction + 0.5));
    return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(total, 1));
}

Lexicon sample_subset(const Lexicon& lexicon, const SubsetSpec& spec) {
    return sample(lexicon, spec.fraction, spec.seed, "d");
}

Lexicon sample_knowledge(const Lexicon& dictionary, const KnowledgeSpec& spec) {
    return sample(dictionary, spec.fraction, spec.seed, "p");
}

}  // namespace wordlab
