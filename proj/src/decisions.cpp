#include "sdikit/decisions.hpp"

#include "sdikit/errors.hpp"
#include "sdikit/sdi.hpp"

namespace sdikit {

namespace {

DecisionReport emptiness_report(std::string predicate, const Nfa& automaton) {
  DecisionReport report{std::move(predicate), is_empty(automaton), std::nullopt,
                        automaton.state_count()};
  if (!report.answer) report.witness = shortest_word(automaton);
  return report;
}

void require_maxmin(oracle::SdiVariant variant) {
  if (variant != oracle::SdiVariant::maximal && variant != oracle::SdiVariant::minimal) {
    throw InputError("expected the maximal or minimal variant");
  }
}

}  // namespace

DecisionReport is_sdi_free(const Nfa& a, const Nfa& b) {
  return emptiness_report("sdi-free", sdi_nfa_direct(a, b));
}

DecisionReport is_sdi_independent(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const Nfa inserted =
      shuffle_nfa(a, nonempty_words(a.alphabet()), named_trajectory("T_sdi_z"));
  return emptiness_report("sdi-independent", trim(product_intersection(inserted, b)));
}

DecisionReport is_asdi_free(const Nfa& a, const Nfa& b) {
  return emptiness_report("asdi-free", asdi_nfa_direct(a, b));
}

DecisionReport is_asdi_independent(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const Nfa inserted =
      shuffle_nfa(a, nonempty_words(a.alphabet()), named_trajectory("T_asdi_z"));
  return emptiness_report("asdi-independent", trim(product_intersection(inserted, b)));
}

DecisionReport is_maxmin_sdi_free(oracle::SdiVariant variant, const Nfa& a, const Nfa& b) {
  require_maxmin(variant);
  auto report = is_sdi_free(a, b);
  report.predicate = std::string(oracle::to_string(variant)) + "-free";
  return report;
}

DecisionReport is_maxmin_sdi_independent(oracle::SdiVariant variant, const Nfa& a,
                                         const Nfa& b) {
  require_maxmin(variant);
  auto report = is_sdi_independent(a, b);
  report.predicate = std::string(oracle::to_string(variant)) + "-independent";
  return report;
}

DecisionReport is_closed_under_sdi(const Nfa& a, std::size_t state_cap) {
  const Nfa squared = sdi_nfa_direct(a, a);
  const Dfa outside = complement(determinize(a, state_cap));
  return emptiness_report("closed-sdi", trim(product_intersection(squared, outside.nfa())));
}

DecisionReport closed_under_finite_maxmin(oracle::SdiVariant variant, const Nfa& a,
                                          const std::vector<Word>& words, std::size_t state_cap) {
  require_maxmin(variant);
  const Nfa inserted = regular_max_sdi_finite(a, words, variant);
  const Dfa outside = complement(determinize(a, state_cap));
  return emptiness_report("closed-finite-" + std::string(oracle::to_string(variant)),
                          trim(product_intersection(inserted, outside.nfa())));
}

DecisionReport two_var_solvable(const Nfa& r) {
  return emptiness_report("two-var-solvable",
                          trim(product_intersection(r, words_shorter_than_two(r.alphabet()))));
}

std::optional<Word> closure_counterexample_search(oracle::SdiVariant variant, const Nfa& a,
                                                  std::size_t max_len) {
  const auto words = enumerate_language(a, max_len);
  std::optional<Word> best;
  oracle::ShortLex less;
  for (const auto& x : words) {
    for (const auto& y : words) {
      for (const auto& w : oracle::apply(variant, x, y)) {
        if (w.size() > max_len) break;  // WordSet is short-lex ordered
        if (best && !less(w, *best)) break;
        if (!accepts(a, w)) best = w;
      }
    }
  }
  return best;
}

}  // namespace sdikit
