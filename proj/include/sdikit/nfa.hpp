#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdikit/alphabet.hpp"

namespace sdikit {

/// Dense state id; states of an automaton are 0..state_count-1.
using State = std::uint32_t;

struct Transition {
  State from;
  char symbol;
  State to;

  auto operator<=>(const Transition&) const = default;
};

class Nfa;

/// Incremental construction of an Nfa. Duplicate transitions are collapsed on
/// build().
class NfaBuilder {
 public:
  explicit NfaBuilder(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return final_.size(); }

  State add_state(bool is_final = false);
  void set_final(State q, bool is_final = true);
  /// `symbol` is an index into the alphabet.
  void add_transition(State from, std::size_t symbol, State to);
  void add_transition(State from, char symbol, State to) {
    add_transition(from, alphabet_.require_index(symbol), to);
  }

  Nfa build(State initial) &&;

 private:
  Alphabet alphabet_;
  std::vector<char> final_;
  std::vector<std::vector<State>> delta_;  // [state * |Σ| + symbol]
};

/// Nondeterministic finite automaton with a single initial state and no
/// ε-transitions. Immutable once built.
class Nfa {
 public:
  /// Validates every id against `state_count` and every symbol against the
  /// alphabet; throws InputError otherwise.
  Nfa(Alphabet alphabet, std::size_t state_count, State initial,
      const std::vector<State>& finals, const std::vector<Transition>& transitions);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return final_.size(); }
  State initial() const noexcept { return initial_; }
  bool is_final(State q) const { return final_.at(q) != 0; }
  std::vector<State> finals() const;

  std::span<const State> successors(State q, std::size_t symbol) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + symbol];
  }

  /// All transitions sorted by (from, symbol, to).
  std::vector<Transition> transitions() const;
  std::size_t transition_count() const noexcept;
  bool is_deterministic() const noexcept;

 private:
  friend class NfaBuilder;
  Nfa(Alphabet alphabet, State initial, std::vector<char> finals,
      std::vector<std::vector<State>> delta);

  Alphabet alphabet_;
  State initial_;
  std::vector<char> final_;
  std::vector<std::vector<State>> delta_;
};

/// Deterministic, possibly partial, automaton: at most one successor per
/// (state, symbol).
class Dfa {
 public:
  /// Throws InputError when `nfa` is nondeterministic.
  explicit Dfa(Nfa nfa);

  const Nfa& nfa() const noexcept { return nfa_; }
  const Alphabet& alphabet() const noexcept { return nfa_.alphabet(); }
  std::size_t state_count() const noexcept { return nfa_.state_count(); }
  State initial() const noexcept { return nfa_.initial(); }
  bool is_final(State q) const { return nfa_.is_final(q); }
  bool is_complete() const noexcept;

  std::optional<State> successor(State q, std::size_t symbol) const {
    auto next = nfa_.successors(q, symbol);
    if (next.empty()) return std::nullopt;
    return next.front();
  }

 private:
  Nfa nfa_;
};

}  // namespace sdikit
