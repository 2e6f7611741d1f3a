#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/lexicon.hpp"

namespace wordlab {

inline constexpr int kAlphabetSize = 26;

/// Set of letters A-Z as a bitmask; bit i is letter 'A' + i.
class LetterSet {
  public:
    constexpr LetterSet() = default;
    constexpr explicit LetterSet(std::uint32_t bits) : bits_(bits & kAll) {}

    static constexpr LetterSet all() { return LetterSet(kAll); }
    static LetterSet of(std::string_view letters);

    constexpr bool contains(int letter) const { return (bits_ >> letter) & 1u; }
    constexpr bool contains_char(char c) const { return c >= 'A' && c <= 'Z' && contains(c - 'A'); }
    constexpr void insert(int letter) { bits_ |= 1u << letter; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }
    std::string to_string() const;

    constexpr LetterSet operator&(LetterSet other) const { return LetterSet(bits_ & other.bits_); }
    constexpr bool operator==(const LetterSet&) const = default;

  private:
    static constexpr std::uint32_t kAll = (1u << kAlphabetSize) - 1;
    std::uint32_t bits_ = 0;
};

/// Minimal deterministic acyclic word graph (suffixes shared).
///
/// Built incrementally from sorted input; equivalent suffix subtrees are
/// merged as soon as they are complete, so only the current word's path is
/// ever mutable. Immutable afterwards and safe to share between threads.
class WordAutomaton {
  public:
    using State = std::uint32_t;
    static constexpr State kNoState = UINT32_MAX;

    explicit WordAutomaton(const Lexicon& lexicon);

    /// Words must be sorted, unique and A-Z only. Throws std::invalid_argument
    /// on empty or unsorted input.
    static WordAutomaton from_sorted(std::span<const std::string> words);

    State root() const noexcept { return root_; }
    bool accepts(State s) const noexcept { return nodes_[s].mask & kAcceptBit; }
    LetterSet edges(State s) const noexcept { return LetterSet(nodes_[s].mask); }

    /// Transition on letter index 0..25, or kNoState.
    State next(State s, int letter) const noexcept {
        const Node& n = nodes_[s];
        const std::uint32_t bit = 1u << letter;
        if (!(n.mask & bit)) return kNoState;
        return targets_[n.first + std::popcount(n.mask & (bit - 1))];
    }

    /// Follows an uppercase string; kNoState if any transition is missing.
    State walk(State s, std::string_view letters) const noexcept;
    bool contains(std::string_view word) const noexcept;

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size(); }
    std::size_t word_count() const noexcept { return word_count_; }

    /// All accepted words in lexicographic order.
    std::vector<std::string> enumerate() const;

  private:
    WordAutomaton() = default;

    static constexpr std::uint32_t kAcceptBit = 1u << 31;

    struct Node {
        std::uint32_t mask = 0;   // outgoing letters, plus kAcceptBit
        std::uint32_t first = 0;  // index of first target in targets_
    };

    std::vector<Node> nodes_;
    std::vector<State> targets_;
    State root_ = 0;
    std::size_t word_count_ = 0;
};

}  // namespace wordlab
