#include "sdikit/algebra.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

#include "detail/epsilon_nfa.hpp"
#include "sdikit/errors.hpp"

namespace sdikit {

namespace {

using StateSet = std::vector<State>;

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (State q : s) {
      h ^= q + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

StateSet step(const Nfa& a, const StateSet& from, std::size_t symbol) {
  StateSet out;
  for (State q : from) {
    auto next = a.successors(q, symbol);
    out.insert(out.end(), next.begin(), next.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool any_final(const Nfa& a, const StateSet& s) {
  return std::any_of(s.begin(), s.end(), [&](State q) { return a.is_final(q); });
}

std::vector<char> forward_reachable(const Nfa& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
      for (State r : a.successors(q, s)) {
        if (!seen[r]) {
          seen[r] = 1;
          stack.push_back(r);
        }
      }
    }
  }
  return seen;
}

// Shortest distance from each state to a final state; max() when none.
std::vector<std::size_t> distance_to_final(const Nfa& a) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = a.state_count();
  std::vector<std::vector<State>> reverse(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
      for (State r : a.successors(static_cast<State>(q), s)) {
        reverse[r].push_back(static_cast<State>(q));
      }
    }
  }
  std::vector<std::size_t> dist(n, kInf);
  std::deque<State> queue;
  for (std::size_t q = 0; q < n; ++q) {
    if (a.is_final(static_cast<State>(q))) {
      dist[q] = 0;
      queue.push_back(static_cast<State>(q));
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : reverse[q]) {
      if (dist[p] == kInf) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

}  // namespace

void require_same_alphabet(const Nfa& a, const Nfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("alphabet mismatch: {" + std::string(a.alphabet().symbols()) +
                     "} vs {" + std::string(b.alphabet().symbols()) + "}");
  }
}

bool accepts(const Nfa& a, std::string_view w) {
  StateSet current{a.initial()};
  for (char c : w) {
    current = step(a, current, a.alphabet().require_index(c));
    if (current.empty()) return false;
  }
  return any_final(a, current);
}

Dfa determinize(const Nfa& a, std::size_t state_cap) {
  const std::size_t k = a.alphabet().size();
  std::unordered_map<StateSet, State, StateSetHash> ids;
  std::vector<StateSet> subsets;
  NfaBuilder builder(a.alphabet());

  auto intern = [&](StateSet s) -> State {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (subsets.size() >= state_cap) {
      throw ResourceError("determinization exceeded the cap of " + std::to_string(state_cap) +
                              " states",
                          subsets.size());
    }
    const State id = builder.add_state(any_final(a, s));
    ids.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  intern(StateSet{a.initial()});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      StateSet next = step(a, subsets[i], s);
      if (next.empty()) continue;
      const State to = intern(std::move(next));
      builder.add_transition(static_cast<State>(i), s, to);
    }
  }
  return Dfa(std::move(builder).build(0));
}

Dfa complement(const Dfa& d) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  NfaBuilder builder(d.alphabet());
  for (std::size_t q = 0; q < n; ++q) builder.add_state(!d.is_final(static_cast<State>(q)));
  State sink = 0;
  bool need_sink = !d.is_complete();
  if (need_sink) {
    sink = builder.add_state(true);
    for (std::size_t s = 0; s < k; ++s) builder.add_transition(sink, s, sink);
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      auto next = d.successor(static_cast<State>(q), s);
      builder.add_transition(static_cast<State>(q), s, next ? *next : sink);
    }
  }
  return Dfa(std::move(builder).build(d.initial()));
}

Nfa product_intersection(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  const std::size_t nb = b.state_count();
  std::unordered_map<std::size_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  NfaBuilder builder(a.alphabet());

  auto intern = [&](State p, State q) -> State {
    const std::size_t key = static_cast<std::size_t>(p) * nb + q;
    auto [it, inserted] = ids.try_emplace(key, 0);
    if (inserted) {
      it->second = builder.add_state(a.is_final(p) && b.is_final(q));
      pairs.emplace_back(p, q);
    }
    return it->second;
  };

  intern(a.initial(), b.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (std::size_t s = 0; s < k; ++s) {
      for (State p2 : a.successors(p, s)) {
        for (State q2 : b.successors(q, s)) {
          builder.add_transition(static_cast<State>(i), s, intern(p2, q2));
        }
      }
    }
  }
  return std::move(builder).build(0);
}

Nfa union_of(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  NfaBuilder builder(a.alphabet());
  const State start = builder.add_state(a.is_final(a.initial()) || b.is_final(b.initial()));
  const State offset_a = static_cast<State>(builder.state_count());
  for (std::size_t q = 0; q < a.state_count(); ++q) builder.add_state(a.is_final(static_cast<State>(q)));
  const State offset_b = static_cast<State>(builder.state_count());
  for (std::size_t q = 0; q < b.state_count(); ++q) builder.add_state(b.is_final(static_cast<State>(q)));

  auto copy = [&](const Nfa& src, State offset) {
    for (std::size_t q = 0; q < src.state_count(); ++q) {
      for (std::size_t s = 0; s < k; ++s) {
        for (State r : src.successors(static_cast<State>(q), s)) {
          builder.add_transition(static_cast<State>(q + offset), s, r + offset);
          if (q == src.initial()) builder.add_transition(start, s, r + offset);
        }
      }
    }
  };
  copy(a, offset_a);
  copy(b, offset_b);
  return trim(std::move(builder).build(start));
}

Nfa concatenate(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  detail::EpsilonNfa e(a.alphabet());
  for (std::size_t q = 0; q < a.state_count(); ++q) e.add_state();
  for (std::size_t q = 0; q < b.state_count(); ++q) e.add_state(b.is_final(static_cast<State>(q)));
  const auto offset = static_cast<State>(a.state_count());
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      for (State r : a.successors(static_cast<State>(q), s)) e.add_transition(static_cast<State>(q), s, r);
    }
    if (a.is_final(static_cast<State>(q))) e.add_epsilon(static_cast<State>(q), b.initial() + offset);
  }
  for (std::size_t q = 0; q < b.state_count(); ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      for (State r : b.successors(static_cast<State>(q), s)) {
        e.add_transition(static_cast<State>(q + offset), s, r + offset);
      }
    }
  }
  return e.eliminate(a.initial());
}

bool is_empty(const Nfa& a) {
  const auto seen = forward_reachable(a);
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    if (seen[q] && a.is_final(static_cast<State>(q))) return false;
  }
  return true;
}

bool is_subset(const Nfa& a, const Nfa& b, std::size_t state_cap) {
  require_same_alphabet(a, b);
  return is_empty(product_intersection(a, complement(determinize(b, state_cap)).nfa()));
}

bool equivalent(const Nfa& a, const Nfa& b, std::size_t state_cap) {
  return is_subset(a, b, state_cap) && is_subset(b, a, state_cap);
}

std::optional<Word> difference_witness(const Nfa& a, const Nfa& b, std::size_t state_cap) {
  require_same_alphabet(a, b);
  return shortest_word(product_intersection(a, complement(determinize(b, state_cap)).nfa()));
}

std::vector<Word> enumerate_language(const Nfa& a, std::size_t max_len) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const auto dist = distance_to_final(a);
  const std::size_t k = a.alphabet().size();

  // A subset is worth extending only if some member can still reach a final
  // state within the remaining length budget.
  auto viable = [&](const StateSet& s, std::size_t remaining) {
    return std::any_of(s.begin(), s.end(),
                       [&](State q) { return dist[q] != kInf && dist[q] <= remaining; });
  };

  std::vector<Word> out;
  std::vector<std::pair<Word, StateSet>> level;
  StateSet start{a.initial()};
  if (viable(start, max_len)) level.emplace_back(Word{}, std::move(start));
  for (std::size_t len = 0; !level.empty(); ++len) {
    for (const auto& [w, s] : level) {
      if (any_final(a, s)) out.push_back(w);
    }
    if (len == max_len) break;
    std::vector<std::pair<Word, StateSet>> next_level;
    for (const auto& [w, s] : level) {
      for (std::size_t sym = 0; sym < k; ++sym) {
        StateSet next = step(a, s, sym);
        if (next.empty() || !viable(next, max_len - len - 1)) continue;
        next_level.emplace_back(w + a.alphabet().symbol(sym), std::move(next));
      }
    }
    level = std::move(next_level);
  }
  return out;
}

std::optional<Word> shortest_word(const Nfa& a) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const auto dist = distance_to_final(a);
  if (dist[a.initial()] == kInf) return std::nullopt;
  const std::size_t k = a.alphabet().size();
  Word w;
  StateSet current{a.initial()};
  std::size_t remaining = dist[a.initial()];
  while (remaining > 0) {
    for (std::size_t sym = 0; sym < k; ++sym) {
      StateSet next;
      for (State q : step(a, current, sym)) {
        if (dist[q] == remaining - 1) next.push_back(q);
      }
      if (!next.empty()) {
        w.push_back(a.alphabet().symbol(sym));
        current = std::move(next);
        break;
      }
    }
    --remaining;
  }
  return w;
}

bool is_finite_language(const Nfa& a) {
  const Nfa t = trim(a);
  if (is_empty(t)) return true;
  // Iterative DFS cycle detection on the trimmed graph.
  const std::size_t n = t.state_count();
  const std::size_t k = t.alphabet().size();
  std::vector<char> color(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<State, std::size_t>> stack{{static_cast<State>(root), 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [q, edge] = stack.back();
      std::vector<State> succ;
      for (std::size_t s = 0; s < k; ++s) {
        auto next = t.successors(q, s);
        succ.insert(succ.end(), next.begin(), next.end());
      }
      if (edge < succ.size()) {
        const State r = succ[edge++];
        if (color[r] == 1) return false;
        if (color[r] == 0) {
          color[r] = 1;
          stack.emplace_back(r, 0);
        }
      } else {
        color[q] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

Nfa trim(const Nfa& a) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const auto reach = forward_reachable(a);
  const auto dist = distance_to_final(a);
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet().size();
  std::vector<State> renumber(n, std::numeric_limits<State>::max());
  NfaBuilder builder(a.alphabet());
  for (std::size_t q = 0; q < n; ++q) {
    if ((reach[q] && dist[q] != kInf) || q == a.initial()) {
      renumber[q] = builder.add_state(a.is_final(static_cast<State>(q)));
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (renumber[q] == std::numeric_limits<State>::max()) continue;
    for (std::size_t s = 0; s < k; ++s) {
      for (State r : a.successors(static_cast<State>(q), s)) {
        if (renumber[r] != std::numeric_limits<State>::max()) {
          builder.add_transition(renumber[q], s, renumber[r]);
        }
      }
    }
  }
  return std::move(builder).build(renumber[a.initial()]);
}

Nfa with_alphabet(const Nfa& a, const Alphabet& superset) {
  for (char c : a.alphabet().symbols()) {
    if (!superset.contains(c)) {
      throw InputError(std::string("target alphabet lacks symbol '") + c + "'");
    }
  }
  return Nfa(superset, a.state_count(), a.initial(), a.finals(), a.transitions());
}

Nfa empty_language(const Alphabet& sigma) {
  NfaBuilder builder(sigma);
  builder.add_state();
  return std::move(builder).build(0);
}

Nfa universal_language(const Alphabet& sigma) {
  NfaBuilder builder(sigma);
  const State q = builder.add_state(true);
  for (std::size_t s = 0; s < sigma.size(); ++s) builder.add_transition(q, s, q);
  return std::move(builder).build(q);
}

Nfa nonempty_words(const Alphabet& sigma) {
  NfaBuilder builder(sigma);
  const State start = builder.add_state();
  const State any = builder.add_state(true);
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    builder.add_transition(start, s, any);
    builder.add_transition(any, s, any);
  }
  return std::move(builder).build(start);
}

Nfa words_shorter_than_two(const Alphabet& sigma) {
  NfaBuilder builder(sigma);
  const State start = builder.add_state(true);
  const State one = builder.add_state(true);
  for (std::size_t s = 0; s < sigma.size(); ++s) builder.add_transition(start, s, one);
  return std::move(builder).build(start);
}

Nfa finite_language(const Alphabet& sigma, std::span<const Word> words) {
  NfaBuilder builder(sigma);
  const State root = builder.add_state();
  // children[q * |Σ| + s] is the trie child, or 0 when absent (0 is the root
  // and never a child).
  std::vector<State> children(sigma.size(), 0);
  for (const Word& w : words) {
    State q = root;
    for (char c : w) {
      const std::size_t s = sigma.require_index(c);
      State& child = children[static_cast<std::size_t>(q) * sigma.size() + s];
      if (child == 0) {
        const State fresh = builder.add_state();
        children.resize(children.size() + sigma.size(), 0);
        // `child` may dangle after resize.
        children[static_cast<std::size_t>(q) * sigma.size() + s] = fresh;
        builder.add_transition(q, s, fresh);
        q = fresh;
      } else {
        q = child;
      }
    }
    builder.set_final(q);
  }
  return std::move(builder).build(root);
}

Nfa prefix_suffix_pattern(const Alphabet& sigma, std::string_view prefix,
                          std::string_view suffix) {
  NfaBuilder builder(sigma);
  State q = builder.add_state();
  const State start = q;
  for (char c : prefix) {
    const State next = builder.add_state();
    builder.add_transition(q, sigma.require_index(c), next);
    q = next;
  }
  // q now loops on Σ, then nondeterministically starts reading the suffix.
  for (std::size_t s = 0; s < sigma.size(); ++s) builder.add_transition(q, s, q);
  for (char c : suffix) {
    const State next = builder.add_state();
    builder.add_transition(q, sigma.require_index(c), next);
    q = next;
  }
  builder.set_final(q);
  return std::move(builder).build(start);
}

namespace detail {

Nfa EpsilonNfa::eliminate(State initial) const {
  const std::size_t n = final_.size();
  const std::size_t k = alphabet_.size();
  NfaBuilder builder(alphabet_);
  for (std::size_t q = 0; q < n; ++q) builder.add_state();

  std::vector<char> in_closure(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<State> closure{static_cast<State>(q)};
    std::fill(in_closure.begin(), in_closure.end(), 0);
    in_closure[q] = 1;
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (State r : eps_[closure[i]]) {
        if (!in_closure[r]) {
          in_closure[r] = 1;
          closure.push_back(r);
        }
      }
    }
    for (State p : closure) {
      if (final_[p]) builder.set_final(static_cast<State>(q));
      for (std::size_t s = 0; s < k; ++s) {
        for (State r : moves_[p][s]) builder.add_transition(static_cast<State>(q), s, r);
      }
    }
  }
  return trim(std::move(builder).build(initial));
}

}  // namespace detail

}  // namespace sdikit
