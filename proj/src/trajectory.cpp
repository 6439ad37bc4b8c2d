#include "sdikit/trajectory.hpp"

#include <array>
#include <string>
#include <vector>

#include "detail/epsilon_nfa.hpp"
#include "detail/state_index.hpp"
#include "sdikit/algebra.hpp"
#include "sdikit/errors.hpp"

namespace sdikit {

namespace {

constexpr std::string_view kShuffleLetters = "01s";
constexpr std::string_view kDeletionLetters = "dis";

enum class Repeat { once, star, plus };

struct Block {
  char letter;
  Repeat repeat;
};

// Chain automaton for a concatenation of single-letter blocks.
Nfa chain(std::string_view letters, std::initializer_list<Block> blocks) {
  const Alphabet sigma(letters);
  detail::EpsilonNfa e(sigma);
  State q = e.add_state();
  const State start = q;
  for (const auto& block : blocks) {
    const std::size_t s = sigma.require_index(block.letter);
    const State r = e.add_state();
    switch (block.repeat) {
      case Repeat::once:
        e.add_transition(q, s, r);
        break;
      case Repeat::star:
        e.add_epsilon(q, r);
        e.add_transition(r, s, r);
        break;
      case Repeat::plus:
        e.add_transition(q, s, r);
        e.add_transition(r, s, r);
        break;
    }
    q = r;
  }
  e.set_final(q);
  return e.eliminate(start);
}

using Triple = std::array<State, 3>;

}  // namespace

TrajectoryLanguage::TrajectoryLanguage(TrajectoryKind kind, Nfa automaton)
    : kind_(kind), automaton_(std::move(automaton)) {
  const auto expected = kind == TrajectoryKind::shuffle ? kShuffleLetters : kDeletionLetters;
  if (automaton_.alphabet().symbols() != expected) {
    throw InputError("trajectory automaton must use alphabet {" + std::string(expected) +
                     "}, got {" + std::string(automaton_.alphabet().symbols()) + "}");
  }
}

TrajectoryLanguage TrajectoryLanguage::from_automaton(Nfa automaton) {
  const auto symbols = automaton.alphabet().symbols();
  if (symbols == kShuffleLetters) return {TrajectoryKind::shuffle, std::move(automaton)};
  if (symbols == kDeletionLetters) return {TrajectoryKind::deletion, std::move(automaton)};
  throw InputError("trajectory automaton alphabet must be {0,1,s} or {i,d,s}");
}

TrajectoryLanguage named_trajectory(std::string_view name) {
  using enum Repeat;
  if (name == "T_sdi") {
    return {TrajectoryKind::shuffle,
            chain(kShuffleLetters, {{'0', star}, {'s', plus}, {'1', star}, {'s', plus}, {'0', star}})};
  }
  if (name == "T_asdi") {
    return {TrajectoryKind::shuffle,
            chain(kShuffleLetters, {{'0', star}, {'s', once}, {'1', star}, {'s', once}, {'0', star}})};
  }
  if (name == "T_sdi_z") {
    return {TrajectoryKind::shuffle,
            chain(kShuffleLetters, {{'0', star}, {'s', plus}, {'1', plus}, {'s', plus}, {'0', star}})};
  }
  if (name == "T_asdi_z") {
    return {TrajectoryKind::shuffle,
            chain(kShuffleLetters, {{'0', star}, {'s', once}, {'1', plus}, {'s', once}, {'0', star}})};
  }
  if (name == "T1") {
    return {TrajectoryKind::deletion,
            chain(kDeletionLetters, {{'i', star}, {'s', plus}, {'d', star}, {'s', plus}, {'i', star}})};
  }
  if (name == "T1a") {
    return {TrajectoryKind::deletion,
            chain(kDeletionLetters, {{'i', star}, {'s', once}, {'d', star}, {'s', once}, {'i', star}})};
  }
  if (name == "T2") {
    return {TrajectoryKind::deletion,
            chain(kDeletionLetters, {{'d', star}, {'s', plus}, {'i', star}, {'s', plus}, {'d', star}})};
  }
  if (name == "T2a") {
    return {TrajectoryKind::deletion,
            chain(kDeletionLetters, {{'d', star}, {'s', once}, {'i', star}, {'s', once}, {'d', star}})};
  }
  throw InputError("unknown trajectory set '" + std::string(name) + "'");
}

Nfa shuffle_nfa(const Nfa& a, const Nfa& b, const TrajectoryLanguage& t,
                ConstructionStats* stats) {
  require_same_alphabet(a, b);
  if (t.kind() != TrajectoryKind::shuffle) {
    throw InputError("shuffle needs a trajectory set over {0,1,s}");
  }
  const Nfa& traj = t.automaton();
  const std::size_t zero = traj.alphabet().require_index('0');
  const std::size_t one = traj.alphabet().require_index('1');
  const std::size_t sync = traj.alphabet().require_index('s');
  const std::size_t k = a.alphabet().size();

  detail::StateIndex<Triple> index;
  NfaBuilder builder(a.alphabet());
  auto intern = [&](const Triple& key) {
    auto [id, inserted] = index.intern(key);
    if (inserted) {
      builder.add_state(a.is_final(key[0]) && b.is_final(key[1]) && traj.is_final(key[2]));
    }
    return id;
  };

  intern({a.initial(), b.initial(), traj.initial()});
  while (index.has_pending()) {
    const State from = index.next_pending();
    const auto [p, q, r] = index.key(from);
    for (std::size_t c = 0; c < k; ++c) {
      for (State r2 : traj.successors(r, zero)) {
        for (State p2 : a.successors(p, c)) builder.add_transition(from, c, intern({p2, q, r2}));
      }
      for (State r2 : traj.successors(r, one)) {
        for (State q2 : b.successors(q, c)) builder.add_transition(from, c, intern({p, q2, r2}));
      }
      for (State r2 : traj.successors(r, sync)) {
        for (State p2 : a.successors(p, c)) {
          for (State q2 : b.successors(q, c)) builder.add_transition(from, c, intern({p2, q2, r2}));
        }
      }
    }
  }
  if (stats) stats->explored_states = index.size();
  return trim(std::move(builder).build(0));
}

Nfa deletion_nfa(const Nfa& a, const Nfa& b, const TrajectoryLanguage& t,
                 ConstructionStats* stats) {
  require_same_alphabet(a, b);
  if (t.kind() != TrajectoryKind::deletion) {
    throw InputError("deletion needs a trajectory set over {i,d,s}");
  }
  const Nfa& traj = t.automaton();
  const std::size_t echo = traj.alphabet().require_index('i');
  const std::size_t drop = traj.alphabet().require_index('d');
  const std::size_t sync = traj.alphabet().require_index('s');
  const std::size_t k = a.alphabet().size();

  detail::StateIndex<Triple> index;
  detail::EpsilonNfa e(a.alphabet());
  auto intern = [&](const Triple& key) {
    auto [id, inserted] = index.intern(key);
    if (inserted) {
      e.add_state(a.is_final(key[0]) && b.is_final(key[1]) && traj.is_final(key[2]));
    }
    return id;
  };

  intern({a.initial(), b.initial(), traj.initial()});
  while (index.has_pending()) {
    const State from = index.next_pending();
    const auto [p, q, r] = index.key(from);
    for (std::size_t c = 0; c < k; ++c) {
      for (State r2 : traj.successors(r, echo)) {
        for (State p2 : a.successors(p, c)) e.add_transition(from, c, intern({p2, q, r2}));
      }
      for (State r2 : traj.successors(r, sync)) {
        for (State p2 : a.successors(p, c)) {
          for (State q2 : b.successors(q, c)) e.add_transition(from, c, intern({p2, q2, r2}));
        }
      }
      for (State r2 : traj.successors(r, drop)) {
        for (State p2 : a.successors(p, c)) {
          for (State q2 : b.successors(q, c)) e.add_epsilon(from, intern({p2, q2, r2}));
        }
      }
    }
  }
  if (stats) stats->explored_states = index.size();
  return e.eliminate(0);
}

Nfa reversed_deletion(const Nfa& a, const Nfa& b, const TrajectoryLanguage& t,
                      ConstructionStats* stats) {
  return deletion_nfa(b, a, t, stats);
}

}  // namespace sdikit
