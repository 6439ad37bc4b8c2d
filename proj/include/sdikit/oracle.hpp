#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "sdikit/alphabet.hpp"

// Definition-literal string semantics for site-directed insertion and the
// trajectory operations. Everything here works by enumerating
// decompositions; nothing is shared with the automaton constructions.
namespace sdikit::oracle {

enum class SdiVariant { general, alphabetic, maximal, minimal };

std::string_view to_string(SdiVariant v) noexcept;
/// Accepts sdi / asdi / maxsdi / minsdi.
SdiVariant parse_variant(std::string_view name);

/// Length first, then lexicographic.
struct ShortLex {
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
  using is_transparent = void;
};

using WordSet = std::set<Word, ShortLex>;

/// x = x1·u·v·x2 and y = u·z·v with u, v nonempty.
struct Decomposition {
  Word x1, u, z, v, x2;

  Word result() const { return x1 + u + z + v + x2; }
};

/// Every decomposition of the pair, ordered by (|x1|, |u|, |v|).
std::vector<Decomposition> decompositions(std::string_view x, std::string_view y);

/// No proper nonempty prefix of `w` is also a suffix of `w`.
bool is_unbordered(std::string_view w);

WordSet sdi_strings(std::string_view x, std::string_view y);
WordSet asdi_strings(std::string_view x, std::string_view y);
/// Maximal SDI: the insertion guide cannot be extended into x on either side.
WordSet max_sdi_strings(std::string_view x, std::string_view y);
/// Maximal SDI via the one-sided characterization: no suffix of x1·u longer
/// than u is a prefix of u·z, and no prefix of v·x2 longer than v is a suffix
/// of z·v.
WordSet max_sdi_strings_alt(std::string_view x, std::string_view y);
/// Minimal SDI: u and v unbordered.
WordSet min_sdi_strings(std::string_view x, std::string_view y);

WordSet apply(SdiVariant variant, std::string_view x, std::string_view y);

/// Semantic shuffle on a trajectory over {0, 1, s}; nullopt when undefined.
std::optional<Word> shuffle_on_trajectory(std::string_view x, std::string_view y,
                                          std::string_view t);

/// Semantic deletion of y from x along a trajectory over {i, d, s}; nullopt
/// when undefined.
std::optional<Word> delete_on_trajectory(std::string_view x, std::string_view y,
                                         std::string_view t);

/// Union of the per-pair operation over L1 × L2.
WordSet bounded_language_op(SdiVariant variant, const std::vector<Word>& left,
                            const std::vector<Word>& right);

/// All words over `symbols` of length ≤ max_len in short-lex order.
std::vector<Word> all_words(std::string_view symbols, std::size_t max_len);

}  // namespace sdikit::oracle
