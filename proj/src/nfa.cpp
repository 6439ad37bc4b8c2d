#include "sdikit/nfa.hpp"

#include <algorithm>
#include <string>

#include "sdikit/errors.hpp"

namespace sdikit {

NfaBuilder::NfaBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

State NfaBuilder::add_state(bool is_final) {
  const auto id = static_cast<State>(final_.size());
  final_.push_back(is_final ? 1 : 0);
  delta_.resize(delta_.size() + alphabet_.size());
  return id;
}

void NfaBuilder::set_final(State q, bool is_final) { final_.at(q) = is_final ? 1 : 0; }

void NfaBuilder::add_transition(State from, std::size_t symbol, State to) {
  if (from >= state_count() || to >= state_count() || symbol >= alphabet_.size()) {
    throw InputError("transition refers to an unknown state or symbol");
  }
  delta_[static_cast<std::size_t>(from) * alphabet_.size() + symbol].push_back(to);
}

Nfa NfaBuilder::build(State initial) && {
  if (final_.empty()) add_state();
  if (initial >= state_count()) throw InputError("initial state out of range");
  for (auto& targets : delta_) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
  return Nfa(std::move(alphabet_), initial, std::move(final_), std::move(delta_));
}

Nfa::Nfa(Alphabet alphabet, State initial, std::vector<char> finals,
         std::vector<std::vector<State>> delta)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      final_(std::move(finals)),
      delta_(std::move(delta)) {}

namespace {

Nfa build_checked(Alphabet alphabet, std::size_t state_count, State initial,
                  const std::vector<State>& finals,
                  const std::vector<Transition>& transitions) {
  if (state_count == 0) throw InputError("automaton must have at least one state");
  if (initial >= state_count) throw InputError("initial state out of range");
  NfaBuilder builder(std::move(alphabet));
  for (std::size_t i = 0; i < state_count; ++i) builder.add_state();
  for (State f : finals) {
    if (f >= state_count) {
      throw InputError("final state " + std::to_string(f) + " out of range");
    }
    builder.set_final(f);
  }
  for (const auto& t : transitions) {
    if (t.from >= state_count || t.to >= state_count) {
      throw InputError("transition state out of range");
    }
    builder.add_transition(t.from, t.symbol, t.to);
  }
  return std::move(builder).build(initial);
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::size_t state_count, State initial,
         const std::vector<State>& finals, const std::vector<Transition>& transitions)
    : Nfa(build_checked(std::move(alphabet), state_count, initial, finals, transitions)) {}

std::vector<State> Nfa::finals() const {
  std::vector<State> out;
  for (std::size_t q = 0; q < final_.size(); ++q) {
    if (final_[q]) out.push_back(static_cast<State>(q));
  }
  return out;
}

std::vector<Transition> Nfa::transitions() const {
  std::vector<Transition> out;
  const std::size_t k = alphabet_.size();
  for (std::size_t q = 0; q < state_count(); ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      for (State r : delta_[q * k + a]) {
        out.push_back({static_cast<State>(q), alphabet_.symbol(a), r});
      }
    }
  }
  return out;
}

std::size_t Nfa::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& targets : delta_) n += targets.size();
  return n;
}

bool Nfa::is_deterministic() const noexcept {
  return std::all_of(delta_.begin(), delta_.end(),
                     [](const auto& targets) { return targets.size() <= 1; });
}

Dfa::Dfa(Nfa nfa) : nfa_(std::move(nfa)) {
  if (!nfa_.is_deterministic()) {
    throw InputError("automaton is nondeterministic");
  }
}

bool Dfa::is_complete() const noexcept {
  for (std::size_t q = 0; q < nfa_.state_count(); ++q) {
    for (std::size_t a = 0; a < nfa_.alphabet().size(); ++a) {
      if (nfa_.successors(static_cast<State>(q), a).empty()) return false;
    }
  }
  return true;
}

}  // namespace sdikit
