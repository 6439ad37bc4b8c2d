#pragma once

#include <cstddef>
#include <random>

#include "sdikit/nfa.hpp"

namespace sdikit {

/// Random NFA with `states` states; each (q, a, r) triple is present with
/// probability `edge_probability`, each state final with `final_probability`.
Nfa random_nfa(std::mt19937_64& rng, std::size_t states, const Alphabet& sigma,
               double edge_probability = 0.3, double final_probability = 0.4);

/// Random partial DFA; each (q, a) has a successor with `defined_probability`.
Dfa random_dfa(std::mt19937_64& rng, std::size_t states, const Alphabet& sigma,
               double defined_probability = 0.8, double final_probability = 0.4);

}  // namespace sdikit
