#include "sdikit/complexity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "sdikit/algebra.hpp"
#include "sdikit/errors.hpp"
#include "sdikit/random.hpp"
#include "sdikit/sdi.hpp"

namespace sdikit {

namespace {

using Bits = std::vector<std::uint64_t>;

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

// Membership of x·w decided as reach(x) ∩ coreach(w) ≠ ∅.
class SplitOracle {
 public:
  explicit SplitOracle(const Nfa& a) : a_(a), words_((a.state_count() + 63) / 64) {}

  const Bits& reach(const Word& x) {
    auto it = reach_.find(x);
    if (it != reach_.end()) return it->second;
    Bits bits(words_, 0);
    std::vector<State> current{a_.initial()};
    for (char c : x) {
      std::vector<State> next;
      for (State q : current) {
        auto succ = a_.successors(q, *a_.alphabet().index_of(c));
        next.insert(next.end(), succ.begin(), succ.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      current = std::move(next);
    }
    for (State q : current) bits[q / 64] |= std::uint64_t{1} << (q % 64);
    return reach_.emplace(x, std::move(bits)).first->second;
  }

  const Bits& coreach(const Word& w) {
    auto it = coreach_.find(w);
    if (it != coreach_.end()) return it->second;
    Bits bits(words_, 0);
    for (State q = 0; q < a_.state_count(); ++q) {
      std::vector<State> current{q};
      for (char c : w) {
        std::vector<State> next;
        for (State p : current) {
          auto succ = a_.successors(p, *a_.alphabet().index_of(c));
          next.insert(next.end(), succ.begin(), succ.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
      }
      if (std::any_of(current.begin(), current.end(), [&](State p) { return a_.is_final(p); })) {
        bits[q / 64] |= std::uint64_t{1} << (q % 64);
      }
    }
    return coreach_.emplace(w, std::move(bits)).first->second;
  }

  bool member(const Word& x, const Word& w) { return intersects(reach(x), coreach(w)); }

 private:
  const Nfa& a_;
  std::size_t words_;
  std::map<Word, Bits> reach_;
  std::map<Word, Bits> coreach_;
};

}  // namespace

FoolingCheck fooling_set_check(const Nfa& a, const FoolingSet& set) {
  const auto& p = set.pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!accepts(a, p[i].first + p[i].second)) return {std::nullopt, std::pair{i, i}};
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (accepts(a, p[i].first + p[j].second) && accepts(a, p[j].first + p[i].second)) {
        return {std::nullopt, std::pair{i, j}};
      }
    }
  }
  return {p.size(), std::nullopt};
}

std::optional<FoolingSet> fooling_set_search(const Nfa& a, std::size_t target,
                                             std::size_t max_len, std::uint64_t seed,
                                             std::size_t restarts) {
  if (target == 0) throw InputError("fooling set target must be at least 1");
  std::vector<std::pair<Word, Word>> candidates;
  for (const auto& word : enumerate_language(a, max_len)) {
    for (std::size_t cut = 0; cut <= word.size(); ++cut) {
      candidates.emplace_back(word.substr(0, cut), word.substr(cut));
    }
  }
  if (candidates.size() < target) return std::nullopt;

  SplitOracle oracle(a);
  auto compatible = [&](const std::pair<Word, Word>& lhs, const std::pair<Word, Word>& rhs) {
    return !(oracle.member(lhs.first, rhs.second) && oracle.member(rhs.first, lhs.second));
  };

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  FoolingSet best;
  // The first pass uses short-lex candidate order; later passes shuffle.
  for (std::size_t attempt = 0; attempt <= restarts; ++attempt) {
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
    FoolingSet current;
    for (std::size_t idx : order) {
      const auto& cand = candidates[idx];
      const bool fits = std::all_of(current.pairs.begin(), current.pairs.end(),
                                    [&](const auto& other) { return compatible(cand, other); });
      if (fits) current.pairs.push_back(cand);
    }
    if (current.pairs.size() > best.pairs.size()) best = std::move(current);
    if (best.pairs.size() >= target) return best;
  }
  return std::nullopt;
}

std::size_t state_bound(AuditedConstruction c, std::size_t m, std::size_t n) {
  return c == AuditedConstruction::sdi ? 3 * m * n + 2 * m : m * n + 2 * m;
}

std::vector<SizeAudit> size_audit(AuditedConstruction construction,
                                  std::pair<std::size_t, std::size_t> m_range,
                                  std::pair<std::size_t, std::size_t> n_range,
                                  std::size_t samples, std::uint64_t seed) {
  if (m_range.first == 0 || n_range.first == 0 || m_range.first > m_range.second ||
      n_range.first > n_range.second) {
    throw InputError("state ranges must be nonempty and start at 1");
  }
  const Alphabet binary("ab");
  std::mt19937_64 rng(seed);
  std::vector<SizeAudit> out;
  const std::string name = construction == AuditedConstruction::sdi ? "sdi" : "asdi";
  for (std::size_t m = m_range.first; m <= m_range.second; ++m) {
    for (std::size_t n = n_range.first; n <= n_range.second; ++n) {
      for (std::size_t i = 0; i < samples; ++i) {
        const Nfa a = random_nfa(rng, m, binary);
        const Nfa b = random_nfa(rng, n, binary);
        ConstructionStats stats;
        if (construction == AuditedConstruction::sdi) {
          sdi_nfa_direct(a, b, &stats);
        } else {
          asdi_nfa_direct(a, b, &stats);
        }
        out.push_back({name, m, n, state_bound(construction, m, n), stats.explored_states});
      }
    }
  }
  return out;
}

}  // namespace sdikit
