#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

inline constexpr std::size_t kMinWordLength = 2;
inline constexpr std::size_t kMaxWordLength = 15;

/// Sorted, duplicate-free set of uppercase A-Z words of length 2..15.
class Lexicon {
  public:
    Lexicon() = default;

    /// Sorts and deduplicates; throws std::invalid_argument on any word that
    /// is not uppercase A-Z or has a length outside [2, 15].
    explicit Lexicon(std::vector<std::string> words, std::string label = {});

    const std::vector<std::string>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::string& label() const noexcept { return label_; }

    bool contains(std::string_view word) const;

    /// Node count of the uncompressed prefix trie over these words, root included.
    std::size_t trie_node_count() const;

  private:
    std::vector<std::string> words_;
    std::string label_;
};

struct LoadResult {
    Lexicon lexicon;
    std::size_t skipped = 0;  ///< tokens rejected for characters or length
};

/// Reads one token per line (LF or CRLF, any case). Throws IoError if the
/// stream fails and EmptyLexiconError when no token survives.
LoadResult load_word_list(std::istream& in, std::string label = {});
LoadResult load_word_list_file(const std::filesystem::path& path);

/// Custom dictionary selection: fraction d of the master list.
struct SubsetSpec {
    double fraction = 1.0;
    std::uint64_t seed = 0;
};

/// Agent knowledge selection: fraction p of the custom dictionary. The count
/// of newly learned words x only matters for the learning-coefficient
/// derivation and is not modelled here.
struct KnowledgeSpec {
    double fraction = 1.0;
    std::uint64_t seed = 0;
};

/// round-half-up(total * fraction), never below 1.
std::size_t subset_size(std::size_t total, double fraction);

/// Uniform sample without replacement over the sorted word list.
/// Throws std::domain_error unless 0 < fraction <= 1.
Lexicon sample_subset(const Lexicon& lexicon, const SubsetSpec& spec);
Lexicon sample_knowledge(const Lexicon& dictionary, const KnowledgeSpec& spec);

}  // namespace wordlab
