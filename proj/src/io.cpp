#include "sdikit/io.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "sdikit/errors.hpp"

namespace sdikit::io {

namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (!line.empty()) fn(line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace

Nfa parse_automaton(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> states;
  std::optional<State> initial;
  std::vector<State> finals;
  struct RawTransition {
    std::size_t line;
    Transition t;
  };
  std::vector<RawTransition> transitions;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      const auto key = strip(line.substr(0, colon));
      const auto tokens = split_ws(line.substr(colon + 1));
      if (key == "alphabet") {
        if (alphabet) fail(line_no, "duplicate alphabet line");
        std::string symbols;
        for (auto tok : tokens) {
          if (tok.size() != 1) fail(line_no, "alphabet symbols must be single characters");
          symbols.push_back(tok.front());
        }
        try {
          alphabet.emplace(symbols);
        } catch (const InputError& e) {
          fail(line_no, e.what());
        }
      } else if (key == "states") {
        if (states) fail(line_no, "duplicate states line");
        if (tokens.size() != 1) fail(line_no, "states expects one number");
        states = parse_number(tokens[0], line_no);
        if (*states == 0) fail(line_no, "an automaton needs at least one state");
      } else if (key == "initial") {
        if (initial) fail(line_no, "duplicate initial line");
        if (tokens.size() != 1) fail(line_no, "exactly one initial state is required");
        initial = static_cast<State>(parse_number(tokens[0], line_no));
      } else if (key == "final" || key == "finals") {
        for (auto tok : tokens) finals.push_back(static_cast<State>(parse_number(tok, line_no)));
      } else {
        fail(line_no, "unknown key '" + std::string(key) + "'");
      }
      return;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 4 || tokens[2] != "->") fail(line_no, "expected 'FROM SYMBOL -> TO'");
    if (tokens[1].size() != 1) fail(line_no, "symbols must be single characters");
    transitions.push_back({line_no,
                           {static_cast<State>(parse_number(tokens[0], line_no)), tokens[1][0],
                            static_cast<State>(parse_number(tokens[3], line_no))}});
  });

  if (!alphabet) throw InputError("missing 'alphabet:' line");
  if (!states) throw InputError("missing 'states:' line");
  if (!initial) throw InputError("missing 'initial:' line");
  if (*initial >= *states) throw InputError("initial state out of range");
  for (State f : finals) {
    if (f >= *states) throw InputError("final state " + std::to_string(f) + " out of range");
  }
  std::vector<Transition> plain;
  for (const auto& raw : transitions) {
    if (raw.t.from >= *states || raw.t.to >= *states) fail(raw.line, "state out of range");
    if (!alphabet->contains(raw.t.symbol)) {
      fail(raw.line, std::string("symbol '") + raw.t.symbol + "' not in alphabet");
    }
    plain.push_back(raw.t);
  }
  return Nfa(*alphabet, *states, *initial, finals, plain);
}

std::string serialize_automaton(const Nfa& a) {
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet().size();
  constexpr auto kUnset = std::numeric_limits<State>::max();
  std::vector<State> order(n, kUnset);
  State next_id = 0;
  std::deque<State> queue{a.initial()};
  order[a.initial()] = next_id++;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < k; ++s) {
      for (State r : a.successors(q, s)) {
        if (order[r] == kUnset) {
          order[r] = next_id++;
          queue.push_back(r);
        }
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (order[q] == kUnset) order[q] = next_id++;
  }

  std::ostringstream out;
  out << "alphabet:";
  for (char c : a.alphabet().symbols()) out << ' ' << c;
  out << "\nstates: " << n << "\ninitial: 0\nfinal:";
  std::vector<State> finals;
  for (State f : a.finals()) finals.push_back(order[f]);
  std::sort(finals.begin(), finals.end());
  for (State f : finals) out << ' ' << f;
  out << '\n';
  std::vector<Transition> ts;
  for (const auto& t : a.transitions()) ts.push_back({order[t.from], t.symbol, order[t.to]});
  std::sort(ts.begin(), ts.end());
  for (const auto& t : ts) out << t.from << ' ' << t.symbol << " -> " << t.to << '\n';
  return out.str();
}

std::vector<Word> parse_words(std::string_view text, const Alphabet* alphabet) {
  std::vector<Word> words;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line == kEmptyWord) {
      words.emplace_back();
      return;
    }
    for (char c : line) {
      if (!Alphabet::is_valid_symbol(c)) {
        fail(line_no, std::string("invalid symbol '") + c + "' in word");
      }
      if (alphabet && !alphabet->contains(c)) {
        fail(line_no, std::string("symbol '") + c + "' not in alphabet");
      }
    }
    words.emplace_back(line);
  });
  return words;
}

std::string format_word(std::string_view w) {
  return w.empty() ? std::string(kEmptyWord) : std::string(w);
}

std::string serialize_words(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) {
    out += format_word(w);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
}

}  // namespace sdikit::io
