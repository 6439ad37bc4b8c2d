#include "sdikit/sdi.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

#include "detail/state_index.hpp"
#include "sdikit/algebra.hpp"
#include "sdikit/errors.hpp"

namespace sdikit {

namespace {

enum Phase : State { kBefore = 0, kPrefix = 1, kMiddle = 2, kSuffix = 3, kAfter = 4 };

using PhaseKey = std::array<State, 3>;  // phase, a-state, b-state

template <typename Fn>
void joint_steps(const Nfa& a, const Nfa& b, State p, State q, std::size_t c, Fn&& fn) {
  for (State p2 : a.successors(p, c)) {
    for (State q2 : b.successors(q, c)) fn(p2, q2);
  }
}

}  // namespace

Nfa sdi_nfa_direct(const Nfa& a, const Nfa& b, ConstructionStats* stats) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  detail::StateIndex<PhaseKey> index;
  NfaBuilder builder(a.alphabet());
  auto intern = [&](State phase, State p, State q) {
    auto [id, inserted] = index.intern({phase, p, q});
    if (inserted) {
      const bool accepting = (phase == kAfter && a.is_final(p)) ||
                             (phase == kSuffix && a.is_final(p) && b.is_final(q));
      builder.add_state(accepting);
    }
    return id;
  };

  intern(kBefore, a.initial(), 0);
  while (index.has_pending()) {
    const State from = index.next_pending();
    const auto [phase, p, q] = index.key(from);
    for (std::size_t c = 0; c < k; ++c) {
      auto add = [&](State ph, State p2, State q2) {
        builder.add_transition(from, c, intern(ph, p2, q2));
      };
      switch (phase) {
        case kBefore:
          for (State p2 : a.successors(p, c)) add(kBefore, p2, 0);
          joint_steps(a, b, p, b.initial(), c, [&](State p2, State q2) { add(kPrefix, p2, q2); });
          break;
        case kPrefix:
          joint_steps(a, b, p, q, c, [&](State p2, State q2) {
            add(kPrefix, p2, q2);
            add(kSuffix, p2, q2);
          });
          for (State q2 : b.successors(q, c)) add(kMiddle, p, q2);
          break;
        case kMiddle:
          for (State q2 : b.successors(q, c)) add(kMiddle, p, q2);
          joint_steps(a, b, p, q, c, [&](State p2, State q2) { add(kSuffix, p2, q2); });
          break;
        case kSuffix:
          joint_steps(a, b, p, q, c, [&](State p2, State q2) { add(kSuffix, p2, q2); });
          if (b.is_final(q)) {
            for (State p2 : a.successors(p, c)) add(kAfter, p2, 0);
          }
          break;
        case kAfter:
          for (State p2 : a.successors(p, c)) add(kAfter, p2, 0);
          break;
        default:
          break;
      }
    }
  }
  if (stats) stats->explored_states = index.size();
  return trim(std::move(builder).build(0));
}

Nfa asdi_nfa_direct(const Nfa& a, const Nfa& b, ConstructionStats* stats) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  detail::StateIndex<PhaseKey> index;
  NfaBuilder builder(a.alphabet());
  auto intern = [&](State phase, State p, State q) {
    auto [id, inserted] = index.intern({phase, p, q});
    if (inserted) builder.add_state(phase == kAfter && a.is_final(p));
    return id;
  };

  intern(kBefore, a.initial(), 0);
  while (index.has_pending()) {
    const State from = index.next_pending();
    const auto [phase, p, q] = index.key(from);
    for (std::size_t c = 0; c < k; ++c) {
      auto add = [&](State ph, State p2, State q2) {
        builder.add_transition(from, c, intern(ph, p2, q2));
      };
      switch (phase) {
        case kBefore:
          for (State p2 : a.successors(p, c)) add(kBefore, p2, 0);
          joint_steps(a, b, p, b.initial(), c, [&](State p2, State q2) { add(kMiddle, p2, q2); });
          break;
        case kMiddle:
          for (State q2 : b.successors(q, c)) add(kMiddle, p, q2);
          joint_steps(a, b, p, q, c, [&](State p2, State q2) {
            if (b.is_final(q2)) add(kAfter, p2, 0);
          });
          break;
        case kAfter:
          for (State p2 : a.successors(p, c)) add(kAfter, p2, 0);
          break;
        default:
          break;
      }
    }
  }
  if (stats) stats->explored_states = index.size();
  return trim(std::move(builder).build(0));
}

Nfa sdi_construction(const Nfa& a, const Nfa& b, SdiVariant variant, ConstructionStats* stats) {
  switch (variant) {
    case SdiVariant::general:
      return sdi_nfa_direct(a, b, stats);
    case SdiVariant::alphabetic:
      return asdi_nfa_direct(a, b, stats);
    default:
      throw InputError("maximal and minimal SDI of two regular languages need not be regular");
  }
}

namespace {

// Splits y = u·z·v admitted by the variant, with the words whose occurrence
// at the end of x1 (resp. start of x2) would make the insertion non-maximal.
struct Guide {
  std::size_t ulen;
  std::size_t vlen;
  std::vector<std::string> forbidden_x1_suffixes;
  std::vector<std::string> forbidden_x2_prefixes;
  std::size_t longest_x2_prefix = 0;
};

std::vector<Guide> admissible_guides(std::string_view y, SdiVariant variant) {
  const std::size_t n = y.size();
  std::vector<Guide> out;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; i + j <= n; ++j) {
      if (variant == SdiVariant::alphabetic && (i != 1 || j != 1)) continue;
      if (variant == SdiVariant::minimal &&
          !(oracle::is_unbordered(y.substr(0, i)) && oracle::is_unbordered(y.substr(n - j)))) {
        continue;
      }
      Guide g{i, j, {}, {}};
      if (variant == SdiVariant::maximal) {
        // x1' = y[0, k) with y[k, k+i) = u and k + i ≤ |u·z|.
        for (std::size_t k = 1; k + i + j <= n; ++k) {
          if (y.substr(k, i) == y.substr(0, i)) g.forbidden_x1_suffixes.emplace_back(y.substr(0, k));
        }
        // x2' = y[n-k, n) with y[n-j-k, n-k) = v and k + j ≤ |z·v|.
        for (std::size_t k = 1; k + i + j <= n; ++k) {
          if (y.substr(n - j - k, j) == y.substr(n - j)) {
            g.forbidden_x2_prefixes.emplace_back(y.substr(n - k));
            g.longest_x2_prefix = std::max(g.longest_x2_prefix, k);
          }
        }
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Nfa insert_word_nfa(const Nfa& a, std::string_view y, SdiVariant variant) {
  if (y.size() < 2) throw InputError("the inserted word must have length at least two");
  a.alphabet().check_word(y);
  const std::size_t n = y.size();
  const std::size_t k = a.alphabet().size();
  const auto guides = admissible_guides(y, variant);
  const bool track_window = variant == SdiVariant::maximal;

  // (phase, a-state, guide index, position in y, buffered text)
  //   lead:   reading x1; text = last |y|-1 symbols of x1 (maximal only)
  //   guide:  reading y; position = symbols of y read so far
  //   trail:  reading x2; text = x2 so far while a forbidden prefix is
  //           still possible
  //   free:   reading x2 with no pending check
  enum : int { kLead = 0, kGuide = 1, kTrail = 2, kFree = 3 };
  using Key = std::tuple<int, State, std::size_t, std::size_t, std::string>;
  detail::StateIndex<Key> index;
  NfaBuilder builder(a.alphabet());
  auto intern = [&](Key key) {
    auto [id, inserted] = index.intern(key);
    if (inserted) {
      const int phase = std::get<0>(key);
      builder.add_state((phase == kTrail || phase == kFree) && a.is_final(std::get<1>(key)));
    }
    return id;
  };
  auto after_state = [&](State p, std::size_t g) {
    if (guides[g].forbidden_x2_prefixes.empty()) return intern({kFree, p, 0, 0, {}});
    return intern({kTrail, p, g, 0, {}});
  };

  intern({kLead, a.initial(), 0, 0, {}});
  while (index.has_pending()) {
    const State from = index.next_pending();
    const auto [phase, p, g, pos, text] = index.key(from);
    for (std::size_t c = 0; c < k; ++c) {
      const char sym = a.alphabet().symbol(c);
      auto succ = a.successors(p, c);
      switch (phase) {
        case kLead: {
          std::string window;
          if (track_window) {
            window = text + sym;
            if (window.size() > n - 1) window.erase(0, window.size() - (n - 1));
          }
          for (State p2 : succ) builder.add_transition(from, c, intern({kLead, p2, 0, 0, window}));
          if (sym != y[0]) break;
          for (std::size_t gi = 0; gi < guides.size(); ++gi) {
            const auto& fx = guides[gi].forbidden_x1_suffixes;
            if (std::any_of(fx.begin(), fx.end(), [&](const auto& s) { return ends_with(text, s); })) {
              continue;
            }
            for (State p2 : succ) builder.add_transition(from, c, intern({kGuide, p2, gi, 1, {}}));
          }
          break;
        }
        case kGuide: {
          if (sym != y[pos]) break;
          const auto& guide = guides[g];
          const bool reads_a = pos < guide.ulen || pos >= n - guide.vlen;
          std::vector<State> next = reads_a ? std::vector<State>(succ.begin(), succ.end())
                                            : std::vector<State>{p};
          for (State p2 : next) {
            const State to = pos + 1 == n ? after_state(p2, g) : intern({kGuide, p2, g, pos + 1, {}});
            builder.add_transition(from, c, to);
          }
          break;
        }
        case kTrail: {
          const auto& guide = guides[g];
          const std::string buffered = text + sym;
          const auto& fx = guide.forbidden_x2_prefixes;
          if (std::find(fx.begin(), fx.end(), buffered) != fx.end()) break;
          for (State p2 : succ) {
            const State to = buffered.size() >= guide.longest_x2_prefix
                                 ? intern({kFree, p2, 0, 0, {}})
                                 : intern({kTrail, p2, g, 0, buffered});
            builder.add_transition(from, c, to);
          }
          break;
        }
        case kFree:
          for (State p2 : succ) builder.add_transition(from, c, intern({kFree, p2, 0, 0, {}}));
          break;
        default:
          break;
      }
    }
  }
  return trim(std::move(builder).build(0));
}

Nfa regular_max_sdi_finite(const Nfa& a, const std::vector<Word>& words, SdiVariant variant) {
  Nfa result = empty_language(a.alphabet());
  for (const auto& y : words) {
    if (y.size() < 2) continue;
    result = union_of(result, insert_word_nfa(a, y, variant));
  }
  return result;
}

Nfa finite_into_regular(SdiVariant variant, const std::vector<Word>& words, const Nfa& a) {
  const Alphabet& sigma = a.alphabet();
  Nfa result = empty_language(sigma);
  for (const auto& x : words) {
    sigma.check_word(x);
    const std::string_view xv = x;
    for (std::size_t start = 0; start + 2 <= x.size(); ++start) {
      for (std::size_t ulen = 1; start + ulen + 1 <= x.size(); ++ulen) {
        for (std::size_t vlen = 1; start + ulen + vlen <= x.size(); ++vlen) {
          if (variant == SdiVariant::alphabetic && (ulen != 1 || vlen != 1)) continue;
          const auto x1 = xv.substr(0, start);
          const auto u = xv.substr(start, ulen);
          const auto v = xv.substr(start + ulen, vlen);
          const auto x2 = xv.substr(start + ulen + vlen);
          if (variant == SdiVariant::minimal &&
              !(oracle::is_unbordered(u) && oracle::is_unbordered(v))) {
            continue;
          }
          Nfa inserted = product_intersection(a, prefix_suffix_pattern(sigma, u, v));
          if (variant == SdiVariant::maximal) {
            Nfa extensions = empty_language(sigma);
            for (std::size_t p = 0; p <= x1.size(); ++p) {
              for (std::size_t s = 0; s <= x2.size(); ++s) {
                if (p == 0 && s == 0) continue;
                const std::string head = std::string(x1.substr(x1.size() - p)) + std::string(u);
                const std::string tail = std::string(v) + std::string(x2.substr(0, s));
                extensions = union_of(extensions, prefix_suffix_pattern(sigma, head, tail));
              }
            }
            inserted = trim(product_intersection(inserted, complement(determinize(extensions)).nfa()));
          }
          if (is_empty(inserted)) continue;
          const Word left(x1);
          const Word right(x2);
          Nfa part = concatenate(concatenate(finite_language(sigma, std::span(&left, 1)), inserted),
                                 finite_language(sigma, std::span(&right, 1)));
          result = union_of(result, part);
        }
      }
    }
  }
  return result;
}

std::optional<oracle::Decomposition> find_insertion(std::string_view w, const Nfa& a,
                                                    const Nfa& b, SdiVariant variant) {
  require_same_alphabet(a, b);
  a.alphabet().check_word(w);
  const std::size_t n = w.size();
  const std::size_t m = a.state_count();
  std::vector<std::size_t> sym(n);
  for (std::size_t i = 0; i < n; ++i) sym[i] = *a.alphabet().index_of(w[i]);

  // forward[k]: states of a after w[0, k).
  std::vector<std::vector<char>> forward(n + 1, std::vector<char>(m, 0));
  forward[0][a.initial()] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < m; ++q) {
      if (!forward[i][q]) continue;
      for (State r : a.successors(static_cast<State>(q), sym[i])) forward[i + 1][r] = 1;
    }
  }
  // backward[k]: states of a from which w[k, n) is accepted.
  std::vector<std::vector<char>> backward(n + 1, std::vector<char>(m, 0));
  for (std::size_t q = 0; q < m; ++q) backward[n][q] = a.is_final(static_cast<State>(q));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t q = 0; q < m; ++q) {
      for (State r : a.successors(static_cast<State>(q), sym[i])) {
        if (backward[i + 1][r]) {
          backward[i][q] = 1;
          break;
        }
      }
    }
  }
  // in_b[i][j]: w[i, j) ∈ L(b).
  std::vector<std::vector<char>> in_b(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<char> current(b.state_count(), 0);
    current[b.initial()] = 1;
    for (std::size_t j = i;; ++j) {
      for (std::size_t q = 0; q < current.size(); ++q) {
        if (current[q] && b.is_final(static_cast<State>(q))) in_b[i][j] = 1;
      }
      if (j == n) break;
      std::vector<char> next(b.state_count(), 0);
      bool alive = false;
      for (std::size_t q = 0; q < current.size(); ++q) {
        if (!current[q]) continue;
        for (State r : b.successors(static_cast<State>(q), sym[j])) next[r] = alive = 1;
      }
      if (!alive) break;
      current = std::move(next);
    }
  }

  auto host_accepted = [&](std::size_t b_end, std::size_t c_begin) {
    for (std::size_t q = 0; q < m; ++q) {
      if (forward[b_end][q] && backward[c_begin][q]) return true;
    }
    return false;
  };
  auto same = [&](std::size_t i, std::size_t j, std::size_t len) {
    return w.substr(i, len) == w.substr(j, len);
  };

  // w = x1·u·z·v·x2 with x1 = w[0,s), u = w[s,t), z = w[t,c), v = w[c,d).
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t d = s + 2; d <= n; ++d) {
      if (!in_b[s][d]) continue;
      const std::size_t ylen = d - s;
      for (std::size_t t = s + 1; t < d; ++t) {
        for (std::size_t c = t; c < d; ++c) {
          const std::size_t ulen = t - s;
          const std::size_t vlen = d - c;
          if (variant == SdiVariant::alphabetic && (ulen != 1 || vlen != 1)) continue;
          if (!host_accepted(t, c)) continue;
          if (variant == SdiVariant::minimal &&
              !(oracle::is_unbordered(w.substr(s, ulen)) && oracle::is_unbordered(w.substr(c, vlen)))) {
            continue;
          }
          if (variant == SdiVariant::maximal) {
            bool extendable = false;
            // x1'·u, |x1'| = p, must not be a prefix of u·z.
            for (std::size_t p = 1; p <= s && p + ulen + vlen <= ylen && !extendable; ++p) {
              extendable = same(s - p, s, p + ulen);
            }
            // v·x2', |x2'| = q, must not be a suffix of z·v.
            for (std::size_t q = 1; d + q <= n && q + ulen + vlen <= ylen && !extendable; ++q) {
              extendable = same(c, d - vlen - q, vlen + q);
            }
            if (extendable) continue;
          }
          return oracle::Decomposition{Word(w.substr(0, s)), Word(w.substr(s, ulen)),
                                       Word(w.substr(t, c - t)), Word(w.substr(c, vlen)),
                                       Word(w.substr(d))};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace sdikit
