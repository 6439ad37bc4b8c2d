#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdikit/nfa.hpp"

namespace sdikit {

/// Default budget for subset construction.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;

/// True iff some run on `w` from the initial state ends in a final state.
/// Throws InputError if `w` leaves the alphabet.
bool accepts(const Nfa& a, std::string_view w);

/// Subset construction over reachable subsets. The empty subset is never
/// materialised, so the result may be partial. Throws ResourceError once more
/// than `state_cap` subsets are reached.
Dfa determinize(const Nfa& a, std::size_t state_cap = kDefaultStateCap);

/// Σ* − L(d). Partial inputs are completed with a sink first.
Dfa complement(const Dfa& d);

/// Reachable part of the product automaton. Requires identical alphabets.
Nfa product_intersection(const Nfa& a, const Nfa& b);

/// L(a) ∪ L(b) via a fresh initial state. Requires identical alphabets.
Nfa union_of(const Nfa& a, const Nfa& b);

/// L(a) · L(b). Requires identical alphabets.
Nfa concatenate(const Nfa& a, const Nfa& b);

bool is_empty(const Nfa& a);

/// L(a) ⊆ L(b), decided as emptiness of a ∩ complement(determinize(b)).
bool is_subset(const Nfa& a, const Nfa& b, std::size_t state_cap = kDefaultStateCap);
bool equivalent(const Nfa& a, const Nfa& b, std::size_t state_cap = kDefaultStateCap);

/// Some shortest word of L(a) − L(b), if the difference is nonempty.
std::optional<Word> difference_witness(const Nfa& a, const Nfa& b,
                                       std::size_t state_cap = kDefaultStateCap);

/// Words of L(a) with length ≤ max_len in length-then-lexicographic order.
std::vector<Word> enumerate_language(const Nfa& a, std::size_t max_len);

/// Shortest accepted word (lexicographically least among the shortest).
std::optional<Word> shortest_word(const Nfa& a);

/// True iff L(a) is finite.
bool is_finite_language(const Nfa& a);

/// Removes states that are unreachable or cannot reach a final state. The
/// result keeps the initial state; an empty language trims to one state.
Nfa trim(const Nfa& a);

/// Same automaton over a superset alphabet.
Nfa with_alphabet(const Nfa& a, const Alphabet& superset);

Nfa empty_language(const Alphabet& sigma);
Nfa universal_language(const Alphabet& sigma);
/// Σ⁺ (two states).
Nfa nonempty_words(const Alphabet& sigma);
/// {ε} ∪ Σ.
Nfa words_shorter_than_two(const Alphabet& sigma);
/// A trie accepting exactly `words`.
Nfa finite_language(const Alphabet& sigma, std::span<const Word> words);
/// prefix · Σ* · suffix.
Nfa prefix_suffix_pattern(const Alphabet& sigma, std::string_view prefix,
                          std::string_view suffix);

void require_same_alphabet(const Nfa& a, const Nfa& b);

}  // namespace sdikit
