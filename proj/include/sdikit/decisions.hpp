#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdikit/algebra.hpp"
#include "sdikit/nfa.hpp"
#include "sdikit/oracle.hpp"

namespace sdikit {

struct DecisionReport {
  std::string predicate;
  bool answer = false;
  /// A shortest word refuting the predicate, when the answer is negative.
  std::optional<Word> witness;
  /// States of the automaton whose emptiness settled the question.
  std::size_t states = 0;
};

/// L(a) sdi L(b) = ∅. Witness: a word of L(a) sdi L(b).
DecisionReport is_sdi_free(const Nfa& a, const Nfa& b);
/// (L(a) sdi Σ⁺) ∩ L(b) = ∅, where the inserted middle z is nonempty: with
/// z = ε every x of length ≥ 2 would reproduce itself. Witness: a word of
/// that intersection.
DecisionReport is_sdi_independent(const Nfa& a, const Nfa& b);
DecisionReport is_asdi_free(const Nfa& a, const Nfa& b);
/// As is_sdi_independent with |u| = |v| = 1.
DecisionReport is_asdi_independent(const Nfa& a, const Nfa& b);

/// Maximal/minimal freeness coincides with SDI-freeness because a pair has an
/// SDI result iff it has a maximal (minimal) one.
DecisionReport is_maxmin_sdi_free(oracle::SdiVariant variant, const Nfa& a, const Nfa& b);
/// L max-sdi Σ⁺ = L min-sdi Σ⁺ = L sdi Σ⁺, so independence reduces to the
/// SDI case.
DecisionReport is_maxmin_sdi_independent(oracle::SdiVariant variant, const Nfa& a,
                                         const Nfa& b);

/// L(a) sdi L(a) ⊆ L(a). Throws ResourceError if complementing `a` exceeds
/// `state_cap`.
DecisionReport is_closed_under_sdi(const Nfa& a, std::size_t state_cap = kDefaultStateCap);

/// L(a) ⊙ F ⊆ L(a) for finite F and ⊙ ∈ {max-sdi, min-sdi}.
DecisionReport closed_under_finite_maxmin(oracle::SdiVariant variant, const Nfa& a,
                                          const std::vector<Word>& words,
                                          std::size_t state_cap = kDefaultStateCap);

/// X1 sdi X2 = L(r) is solvable iff every word of L(r) has length ≥ 2.
DecisionReport two_var_solvable(const Nfa& r);

/// Bounded search for w ∈ (L ⊙ L) − L with |w| ≤ max_len; returns the
/// short-lex least such word. Absence says nothing about closure.
std::optional<Word> closure_counterexample_search(oracle::SdiVariant variant, const Nfa& a,
                                                  std::size_t max_len);

}  // namespace sdikit
