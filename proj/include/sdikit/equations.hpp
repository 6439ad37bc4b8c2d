#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sdikit/algebra.hpp"
#include "sdikit/errors.hpp"
#include "sdikit/nfa.hpp"
#include "sdikit/oracle.hpp"

namespace sdikit {

enum class UnknownSide {
  left,   ///< X ⊕ L = R
  right,  ///< L ⊕ X = R
};

UnknownSide parse_side(std::string_view name);

/// One-variable equation over SDI or alphabetic SDI with regular constants.
struct EquationSpec {
  UnknownSide side;
  oracle::SdiVariant variant;  ///< general or alphabetic
  Nfa known;                   ///< L
  Nfa rhs;                     ///< R
};

struct EquationSolution {
  bool solvable;
  /// The maximal candidate: every solution is a subset of it.
  Dfa candidate;
  /// candidate ⊕ L ≡ R was machine-checked (always true when solvable).
  bool verified;
};

/// Verification ran out of budget after the candidate had been computed.
class SolveResourceError : public ResourceError {
 public:
  SolveResourceError(const ResourceError& cause, Dfa candidate)
      : ResourceError(cause.what(), cause.states_explored()), candidate_(std::move(candidate)) {}

  const Dfa& candidate() const noexcept { return candidate_; }

 private:
  Dfa candidate_;
};

/// Left unknown:  complement(complement(R) deleted along T1 by L).
/// Right unknown: complement(complement(R) deleted along T2 by L).
/// The alphabetic variant uses T1a / T2a.
Dfa candidate(const EquationSpec& spec, std::size_t state_cap = kDefaultStateCap);

/// S ⊕ L for a left unknown, L ⊕ S for a right unknown.
Nfa substitute(const Nfa& s, const EquationSpec& spec);

/// True iff substituting S yields exactly R.
bool verify_solution(const Nfa& s, const EquationSpec& spec,
                     std::size_t state_cap = kDefaultStateCap);

/// Computes the candidate and checks whether it is itself a solution; a
/// solution exists iff it is.
EquationSolution solve(const EquationSpec& spec, std::size_t state_cap = kDefaultStateCap);

}  // namespace sdikit
