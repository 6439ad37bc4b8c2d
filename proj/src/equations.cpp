#include "sdikit/equations.hpp"

#include <string>

#include "sdikit/sdi.hpp"
#include "sdikit/trajectory.hpp"

namespace sdikit {

namespace {

void validate(const EquationSpec& spec) {
  require_same_alphabet(spec.known, spec.rhs);
  if (spec.variant != oracle::SdiVariant::general &&
      spec.variant != oracle::SdiVariant::alphabetic) {
    throw InputError("equations are supported for sdi and asdi only");
  }
}

std::string_view trajectory_name(const EquationSpec& spec) {
  const bool alphabetic = spec.variant == oracle::SdiVariant::alphabetic;
  if (spec.side == UnknownSide::left) return alphabetic ? "T1a" : "T1";
  return alphabetic ? "T2a" : "T2";
}

}  // namespace

UnknownSide parse_side(std::string_view name) {
  if (name == "left") return UnknownSide::left;
  if (name == "right") return UnknownSide::right;
  throw InputError("side must be 'left' or 'right', got '" + std::string(name) + "'");
}

Dfa candidate(const EquationSpec& spec, std::size_t state_cap) {
  validate(spec);
  const Dfa outside = complement(determinize(spec.rhs, state_cap));
  const auto trajectories = named_trajectory(trajectory_name(spec));
  // For the right unknown the reversed deletion L (del_T2)^rev R̄ unfolds to
  // R̄ del_T2 L, which is the same call shape as the left case.
  const Nfa deletable = spec.side == UnknownSide::left
                            ? deletion_nfa(outside.nfa(), spec.known, trajectories)
                            : reversed_deletion(spec.known, outside.nfa(), trajectories);
  return complement(determinize(deletable, state_cap));
}

Nfa substitute(const Nfa& s, const EquationSpec& spec) {
  validate(spec);
  return spec.side == UnknownSide::left ? sdi_construction(s, spec.known, spec.variant)
                                        : sdi_construction(spec.known, s, spec.variant);
}

bool verify_solution(const Nfa& s, const EquationSpec& spec, std::size_t state_cap) {
  return equivalent(substitute(s, spec), spec.rhs, state_cap);
}

EquationSolution solve(const EquationSpec& spec, std::size_t state_cap) {
  Dfa best = candidate(spec, state_cap);
  bool ok = false;
  try {
    ok = verify_solution(best.nfa(), spec, state_cap);
  } catch (const ResourceError& e) {
    throw SolveResourceError(e, std::move(best));
  }
  return EquationSolution{ok, std::move(best), ok};
}

}  // namespace sdikit
