#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sdikit/nfa.hpp"

namespace sdikit::io {

/// Spelling of the empty word in word lists.
inline constexpr std::string_view kEmptyWord = "ε";

/// Parses the line-oriented automaton format:
///
///     alphabet: a b
///     states: 3
///     initial: 0
///     final: 2
///     0 a -> 0
///
/// `#` starts a comment. Throws InputError with the offending line number.
Nfa parse_automaton(std::string_view text);

/// Canonical text: states renumbered in BFS order from the initial state
/// (unreachable states follow in their original order), transitions sorted.
std::string serialize_automaton(const Nfa& a);

/// One word per line; `#` comments and blank lines are skipped and `ε`
/// denotes the empty word.
std::vector<Word> parse_words(std::string_view text, const Alphabet* alphabet = nullptr);
std::string serialize_words(const std::vector<Word>& words);
std::string format_word(std::string_view w);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

inline Nfa load_automaton(const std::filesystem::path& path) {
  return parse_automaton(read_file(path));
}

}  // namespace sdikit::io
