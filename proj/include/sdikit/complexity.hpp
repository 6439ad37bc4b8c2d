#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdikit/nfa.hpp"

namespace sdikit {

/// Pairs (x_i, w_i) certifying a lower bound on NFA size.
struct FoolingSet {
  std::vector<std::pair<Word, Word>> pairs;
};

struct FoolingCheck {
  /// |P| when both conditions hold.
  std::optional<std::size_t> bound;
  /// Offending indices: (i, i) when x_i·w_i ∉ L, (i, j) when both
  /// x_i·w_j and x_j·w_i are in L.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Checks (i) x_i·w_i ∈ L(a) for all i and (ii) for i ≠ j, x_i·w_j ∉ L(a) or
/// x_j·w_i ∉ L(a).
FoolingCheck fooling_set_check(const Nfa& a, const FoolingSet& set);

/// Greedy search with seeded random restarts over the splits of accepted
/// words of length ≤ max_len. Returns a set of size ≥ target if one is
/// found; failure proves nothing.
std::optional<FoolingSet> fooling_set_search(const Nfa& a, std::size_t target,
                                             std::size_t max_len, std::uint64_t seed = 1,
                                             std::size_t restarts = 64);

enum class AuditedConstruction { sdi, asdi };

struct SizeAudit {
  std::string construction;
  std::size_t m;
  std::size_t n;
  std::size_t bound;   ///< 3mn + 2m (sdi) or mn + 2m (asdi)
  std::size_t actual;  ///< reachable states before trimming
};

std::size_t state_bound(AuditedConstruction c, std::size_t m, std::size_t n);

/// Builds the construction for `samples` random binary NFA pairs at every
/// (m, n) in the inclusive ranges.
std::vector<SizeAudit> size_audit(AuditedConstruction construction,
                                  std::pair<std::size_t, std::size_t> m_range,
                                  std::pair<std::size_t, std::size_t> n_range,
                                  std::size_t samples, std::uint64_t seed = 1);

}  // namespace sdikit
