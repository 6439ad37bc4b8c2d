#pragma once

#include <cstddef>
#include <string_view>

#include "sdikit/nfa.hpp"

namespace sdikit {

/// Size of a construction before trimming: the number of composite states
/// reached from the initial state.
struct ConstructionStats {
  std::size_t explored_states = 0;
};

enum class TrajectoryKind {
  shuffle,   ///< over {0, 1, s}
  deletion,  ///< over {i, d, s}
};

/// A regular set of trajectories. The letter `s` stands for the
/// synchronising step.
class TrajectoryLanguage {
 public:
  /// Throws InputError unless the automaton's alphabet is exactly the three
  /// trajectory letters of `kind`.
  TrajectoryLanguage(TrajectoryKind kind, Nfa automaton);

  /// Infers the kind from the alphabet.
  static TrajectoryLanguage from_automaton(Nfa automaton);

  TrajectoryKind kind() const noexcept { return kind_; }
  const Nfa& automaton() const noexcept { return automaton_; }

 private:
  TrajectoryKind kind_;
  Nfa automaton_;
};

/// The six fixed trajectory sets:
///   T_sdi  = 0* s+ 1* s+ 0*     T_asdi = 0* s 1* s 0*
///   T1     = i* s+ d* s+ i*     T1a    = i* s d* s i*
///   T2     = d* s+ i* s+ d*     T2a    = d* s i* s d*
/// and the variants with a nonempty inserted middle, used for independence:
///   T_sdi_z = 0* s+ 1+ s+ 0*    T_asdi_z = 0* s 1+ s 0*
/// Throws InputError for any other name.
TrajectoryLanguage named_trajectory(std::string_view name);

/// L(a) shuffled with L(b) along T. States are triples of component states;
/// on input symbol c the automaton advances a (trajectory 0), b (1) or both
/// reading c (s). Result is trimmed.
Nfa shuffle_nfa(const Nfa& a, const Nfa& b, const TrajectoryLanguage& t,
                ConstructionStats* stats = nullptr);

/// Deletion of L(b) from L(a) along T. `i` and `s` steps consume input; `d`
/// steps advance a and b on a common symbol without consuming input and are
/// eliminated as ε-moves before returning.
Nfa deletion_nfa(const Nfa& a, const Nfa& b, const TrajectoryLanguage& t,
                 ConstructionStats* stats = nullptr);

/// Deletion with operands swapped: L(b) deleted-along-T by L(a).
Nfa reversed_deletion(const Nfa& a, const Nfa& b, const TrajectoryLanguage& t,
                      ConstructionStats* stats = nullptr);

}  // namespace sdikit
