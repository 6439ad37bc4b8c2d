#pragma once

#include <string_view>
#include <vector>

#include "sdikit/algebra.hpp"
#include "sdikit/nfa.hpp"
#include "sdikit/oracle.hpp"

namespace sdikit::testing {

/// Chain automaton for patterns like "b a+ b a+ $": each token is one
/// symbol, optionally followed by '+'.
inline Nfa pattern(const Alphabet& sigma, std::string_view spec) {
  NfaBuilder b(sigma);
  State current = b.add_state(false);
  const State initial = current;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const char c = spec[i];
    if (c == ' ') continue;
    const State next = b.add_state(false);
    b.add_transition(current, c, next);
    if (i + 1 < spec.size() && spec[i + 1] == '+') {
      b.add_transition(next, c, next);
      ++i;
    }
    current = next;
  }
  b.set_final(current);
  return std::move(b).build(initial);
}

inline Nfa words(const Alphabet& sigma, const std::vector<Word>& list) {
  return finite_language(sigma, list);
}

/// L1 ⊙ L2 restricted to results of length ≤ max_len, computed by the string
/// oracle over enumerations of both operands.
inline oracle::WordSet oracle_bounded(oracle::SdiVariant variant, const Nfa& a, const Nfa& b,
                                      std::size_t max_len) {
  const auto left = enumerate_language(a, max_len);
  const auto right = enumerate_language(b, max_len);
  oracle::WordSet out;
  for (const auto& x : left) {
    for (const auto& y : right) {
      if (y.size() < 2 || x.size() < 2) continue;
      for (auto& w : oracle::apply(variant, x, y)) {
        if (w.size() <= max_len) out.insert(w);
      }
    }
  }
  return out;
}

inline oracle::WordSet as_set(const std::vector<Word>& words) {
  return oracle::WordSet(words.begin(), words.end());
}

}  // namespace sdikit::testing
