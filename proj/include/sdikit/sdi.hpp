#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sdikit/nfa.hpp"
#include "sdikit/oracle.hpp"
#include "sdikit/trajectory.hpp"

namespace sdikit {

using oracle::SdiVariant;

/// L(a) sdi L(b) with at most 3mn + 2m states (m = |a|, n = |b|).
///
/// Five phases: a alone on x1; a and b jointly on u (entered by a joint
/// step); b alone on z with a frozen; a and b jointly on v (entered by a
/// joint step); a alone on x2 once b has accepted.
Nfa sdi_nfa_direct(const Nfa& a, const Nfa& b, ConstructionStats* stats = nullptr);

/// L(a) a-sdi L(b) with at most mn + 2m states: a alone, then b alone with a
/// frozen after a joint entry step, then a alone after a joint exit step.
Nfa asdi_nfa_direct(const Nfa& a, const Nfa& b, ConstructionStats* stats = nullptr);

/// L(a) ⊙ {y} for any variant ⊙. The automaton guesses w = x1·u·z·v·x2 with
/// y = u·z·v, runs `a` on x1·u·v·x2 and skips z. For the maximal variant it
/// keeps the last |y|−1 symbols of x1 and the first symbols of x2 so that
/// decompositions whose guide extends into x are rejected. Requires |y| ≥ 2.
Nfa insert_word_nfa(const Nfa& a, std::string_view y, SdiVariant variant);

inline Nfa max_sdi_single_nfa(const Nfa& a, std::string_view y) {
  return insert_word_nfa(a, y, SdiVariant::maximal);
}
inline Nfa min_sdi_single_nfa(const Nfa& a, std::string_view y) {
  return insert_word_nfa(a, y, SdiVariant::minimal);
}

/// L(a) ⊙ F for finite F: union of insert_word_nfa over the words of F with
/// length ≥ 2 (shorter words cannot be inserted).
Nfa regular_max_sdi_finite(const Nfa& a, const std::vector<Word>& words, SdiVariant variant);

/// F ⊙ L(a) for finite F. For each x ∈ F and each split x = x1·u·v·x2 the
/// inserted word ranges over L(a) ∩ u·Σ*·v, further restricted for the
/// maximal variant to avoid every x1'·u·Σ*·v·x2' with x1'x2' ≠ ε, and for the
/// minimal variant to splits with unbordered u and v.
Nfa finite_into_regular(SdiVariant variant, const std::vector<Word>& words, const Nfa& a);

/// A decomposition witnessing w ∈ L(a) ⊙ L(b), if any. Scans the O(|w|⁴)
/// splits w = x1·u·z·v·x2 and checks each in O(|w|²) after O(|w|²)
/// automaton precomputation.
std::optional<oracle::Decomposition> find_insertion(std::string_view w, const Nfa& a,
                                                    const Nfa& b, SdiVariant variant);

inline bool max_sdi_membership(std::string_view w, const Nfa& a, const Nfa& b) {
  return find_insertion(w, a, b, SdiVariant::maximal).has_value();
}
inline bool min_sdi_membership(std::string_view w, const Nfa& a, const Nfa& b) {
  return find_insertion(w, a, b, SdiVariant::minimal).has_value();
}

/// Direct construction for the regularity-preserving variants.
Nfa sdi_construction(const Nfa& a, const Nfa& b, SdiVariant variant,
                     ConstructionStats* stats = nullptr);

}  // namespace sdikit
