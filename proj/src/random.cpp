#include "sdikit/random.hpp"

namespace sdikit {

Nfa random_nfa(std::mt19937_64& rng, std::size_t states, const Alphabet& sigma,
               double edge_probability, double final_probability) {
  std::bernoulli_distribution edge(edge_probability);
  std::bernoulli_distribution final_state(final_probability);
  NfaBuilder builder(sigma);
  for (std::size_t q = 0; q < states; ++q) builder.add_state(final_state(rng));
  for (std::size_t q = 0; q < states; ++q) {
    for (std::size_t s = 0; s < sigma.size(); ++s) {
      for (std::size_t r = 0; r < states; ++r) {
        if (edge(rng)) builder.add_transition(static_cast<State>(q), s, static_cast<State>(r));
      }
    }
  }
  return std::move(builder).build(0);
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t states, const Alphabet& sigma,
               double defined_probability, double final_probability) {
  std::bernoulli_distribution defined(defined_probability);
  std::bernoulli_distribution final_state(final_probability);
  std::uniform_int_distribution<std::size_t> target(0, states - 1);
  NfaBuilder builder(sigma);
  for (std::size_t q = 0; q < states; ++q) builder.add_state(final_state(rng));
  for (std::size_t q = 0; q < states; ++q) {
    for (std::size_t s = 0; s < sigma.size(); ++s) {
      if (defined(rng)) {
        builder.add_transition(static_cast<State>(q), s, static_cast<State>(target(rng)));
      }
    }
  }
  return Dfa(std::move(builder).build(0));
}

}  // namespace sdikit
