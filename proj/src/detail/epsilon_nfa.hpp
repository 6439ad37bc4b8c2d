#pragma once

#include <cstddef>
#include <vector>

#include "sdikit/nfa.hpp"

namespace sdikit::detail {

/// Scratch automaton that allows ε-moves. Only used inside constructions;
/// eliminate() turns it into a public Nfa.
class EpsilonNfa {
 public:
  explicit EpsilonNfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return final_.size(); }

  State add_state(bool is_final = false) {
    final_.push_back(is_final ? 1 : 0);
    moves_.emplace_back(alphabet_.size());
    eps_.emplace_back();
    return static_cast<State>(final_.size() - 1);
  }
  void set_final(State q) { final_[q] = 1; }
  void add_transition(State from, std::size_t symbol, State to) {
    moves_[from][symbol].push_back(to);
  }
  void add_epsilon(State from, State to) { eps_[from].push_back(to); }

  /// Standard closure-based elimination followed by trimming.
  Nfa eliminate(State initial) const;

 private:
  Alphabet alphabet_;
  std::vector<char> final_;
  std::vector<std::vector<std::vector<State>>> moves_;
  std::vector<std::vector<State>> eps_;
};

}  // namespace sdikit::detail
