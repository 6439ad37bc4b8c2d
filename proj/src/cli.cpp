#include "sdikit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sdikit/algebra.hpp"
#include "sdikit/complexity.hpp"
#include "sdikit/decisions.hpp"
#include "sdikit/equations.hpp"
#include "sdikit/errors.hpp"
#include "sdikit/io.hpp"
#include "sdikit/oracle.hpp"
#include "sdikit/sdi.hpp"

namespace sdikit::cli {

namespace {

using oracle::SdiVariant;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Word parse_cli_word(const std::string& arg) {
  return arg == io::kEmptyWord ? Word{} : arg;
}

std::vector<Word> load_words(const std::string& path) {
  return io::parse_words(io::read_file(path));
}

/// Smallest alphabet containing every automaton alphabet and word symbol.
Alphabet common_alphabet(const std::vector<const Nfa*>& automata,
                         const std::vector<const std::vector<Word>*>& word_lists) {
  std::string symbols;
  for (const Nfa* a : automata) symbols += a->alphabet().symbols();
  for (const auto* list : word_lists) {
    for (const auto& w : *list) symbols += w;
  }
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) throw InputError("operands do not determine an alphabet");
  return Alphabet(symbols);
}

void emit_words(std::ostream& out, const std::vector<Word>& words) {
  out << io::serialize_words(words);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = static_cast<std::size_t>(std::stoul(text));
      return {v, v};
    }
    return {static_cast<std::size_t>(std::stoul(text.substr(0, dots))),
            static_cast<std::size_t>(std::stoul(text.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw UsageError("expected N or N..M, got '" + text + "'");
  }
}

FoolingSet load_fooling_set(const std::string& path) {
  FoolingSet set;
  std::istringstream in(io::read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string x;
    std::string w;
    std::string extra;
    if (!(fields >> x)) continue;
    if (!(fields >> w) || (fields >> extra)) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'PREFIX SUFFIX'");
    }
    set.pairs.emplace_back(parse_cli_word(x), parse_cli_word(w));
  }
  return set;
}

struct Options {
  // shared
  std::string variant = "sdi";
  std::vector<std::string> automata;
  std::string left_words;
  std::string right_words;
  std::optional<std::size_t> max_len;
  std::size_t cap = kDefaultStateCap;
  std::string output;
  bool list = false;
  // member
  std::string word;
  // decide
  std::string predicate;
  // solve
  std::string side = "left";
  // audit
  std::string construction = "sdi";
  std::string m_range = "1..3";
  std::string n_range = "1..3";
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  // fooling
  std::string check_file;
  std::size_t target = 1;
  // check-format
  bool require_dfa = false;
  bool canonical = false;
  bool words_file = false;
};

void write_automaton(const Nfa& a, const Options& opt, std::ostream& out) {
  const std::string text = io::serialize_automaton(a);
  if (opt.output.empty()) {
    out << text;
  } else {
    io::write_file(opt.output, text);
  }
}

// Prints the language either as an automaton or as a word list.
int emit_language(const Nfa& result, const Options& opt, std::ostream& out) {
  if (opt.max_len) {
    emit_words(out, enumerate_language(result, *opt.max_len));
  } else if (opt.list) {
    if (!is_finite_language(result)) {
      throw UsageError("--list needs a finite result language; pass --max-len");
    }
    const Nfa trimmed = trim(result);
    emit_words(out, enumerate_language(trimmed, trimmed.state_count()));
  } else {
    write_automaton(result, opt, out);
  }
  return kTrue;
}

int cmd_op(const Options& opt, std::ostream& out) {
  const SdiVariant variant = oracle::parse_variant(opt.variant);
  std::vector<Nfa> automata;
  for (const auto& path : opt.automata) automata.push_back(io::load_automaton(path));
  std::optional<std::vector<Word>> left_words;
  std::optional<std::vector<Word>> right_words;
  if (!opt.left_words.empty()) left_words = load_words(opt.left_words);
  if (!opt.right_words.empty()) right_words = load_words(opt.right_words);
  const std::size_t needed = 2 - (left_words ? 1 : 0) - (right_words ? 1 : 0);
  if (automata.size() != needed) {
    throw UsageError("op needs exactly two operands (automata and/or word lists)");
  }

  std::vector<const Nfa*> nfas;
  for (const auto& a : automata) nfas.push_back(&a);
  std::vector<const std::vector<Word>*> lists;
  if (left_words) lists.push_back(&*left_words);
  if (right_words) lists.push_back(&*right_words);

  if (left_words && right_words) {
    auto words = oracle::bounded_language_op(variant, *left_words, *right_words);
    std::vector<Word> listed;
    for (auto& w : words) {
      if (!opt.max_len || w.size() <= *opt.max_len) listed.push_back(w);
    }
    emit_words(out, listed);
    return kTrue;
  }

  const Alphabet sigma = common_alphabet(nfas, lists);
  for (auto& a : automata) a = with_alphabet(a, sigma);

  if (left_words) return emit_language(finite_into_regular(variant, *left_words, automata[0]), opt, out);
  if (right_words) return emit_language(regular_max_sdi_finite(automata[0], *right_words, variant), opt, out);

  if (variant == SdiVariant::general || variant == SdiVariant::alphabetic) {
    return emit_language(sdi_construction(automata[0], automata[1], variant), opt, out);
  }
  // Maximal/minimal SDI of two regular languages need not be regular; only a
  // bounded enumeration is offered.
  if (!opt.max_len || opt.list || !opt.output.empty()) {
    throw UsageError(std::string(oracle::to_string(variant)) +
                     " of two automata is only available as a bounded enumeration (--max-len)");
  }
  const auto left = enumerate_language(automata[0], *opt.max_len);
  const auto right = enumerate_language(automata[1], *opt.max_len);
  std::vector<Word> listed;
  for (const auto& w : oracle::bounded_language_op(variant, left, right)) {
    if (w.size() > *opt.max_len) break;
    listed.push_back(w);
  }
  emit_words(out, listed);
  return kTrue;
}

int cmd_member(const Options& opt, std::ostream& out) {
  const Word w = parse_cli_word(opt.word);
  std::vector<Nfa> automata;
  for (const auto& path : opt.automata) automata.push_back(io::load_automaton(path));
  std::optional<std::vector<Word>> right_words;
  if (!opt.right_words.empty()) right_words = load_words(opt.right_words);

  if (automata.size() == 1 && !right_words) {
    const bool yes = automata[0].alphabet().covers(w) && accepts(automata[0], w);
    out << (yes ? "true" : "false") << '\n';
    return yes ? kTrue : kFalse;
  }
  if (automata.size() + (right_words ? 1 : 0) != 2) {
    throw UsageError("member takes one automaton, or two operands with --variant");
  }
  std::vector<const Nfa*> nfas;
  for (const auto& a : automata) nfas.push_back(&a);
  std::vector<const std::vector<Word>*> lists;
  if (right_words) lists.push_back(&*right_words);
  const std::vector<Word> probe{w};
  lists.push_back(&probe);
  const Alphabet sigma = common_alphabet(nfas, lists);
  const Nfa host = with_alphabet(automata[0], sigma);
  const Nfa inserted =
      right_words ? finite_language(sigma, *right_words) : with_alphabet(automata[1], sigma);
  const auto found = find_insertion(w, host, inserted, oracle::parse_variant(opt.variant));
  if (found) {
    out << "true\n"
        << "decomposition: " << io::format_word(found->x1) << " | " << found->u << " | "
        << io::format_word(found->z) << " | " << found->v << " | " << io::format_word(found->x2)
        << '\n';
    return kTrue;
  }
  out << "false\n";
  return kFalse;
}

int report(const DecisionReport& r, std::ostream& out) {
  out << r.predicate << ": " << (r.answer ? "true" : "false") << '\n';
  if (r.witness) out << "witness: " << io::format_word(*r.witness) << '\n';
  out << "states: " << r.states << '\n';
  return r.answer ? kTrue : kFalse;
}

int cmd_decide(const Options& opt, std::ostream& out) {
  std::vector<Nfa> automata;
  for (const auto& path : opt.automata) automata.push_back(io::load_automaton(path));
  if (automata.empty() || automata.size() > 2) {
    throw UsageError("decide takes one or two automata");
  }
  std::optional<std::vector<Word>> words;
  if (!opt.right_words.empty()) words = load_words(opt.right_words);
  std::vector<const Nfa*> nfas;
  for (const auto& a : automata) nfas.push_back(&a);
  std::vector<const std::vector<Word>*> lists;
  if (words) lists.push_back(&*words);
  const Alphabet sigma = common_alphabet(nfas, lists);
  for (auto& a : automata) a = with_alphabet(a, sigma);
  const Nfa& a = automata[0];
  const Nfa& b = automata.size() == 2 ? automata[1] : automata[0];
  const std::string& p = opt.predicate;

  if (p == "sdi-free") return report(is_sdi_free(a, b), out);
  if (p == "sdi-independent") return report(is_sdi_independent(a, b), out);
  if (p == "asdi-free") return report(is_asdi_free(a, b), out);
  if (p == "asdi-independent") return report(is_asdi_independent(a, b), out);
  if (p == "maxsdi-free") return report(is_maxmin_sdi_free(SdiVariant::maximal, a, b), out);
  if (p == "minsdi-free") return report(is_maxmin_sdi_free(SdiVariant::minimal, a, b), out);
  if (p == "maxsdi-independent") {
    return report(is_maxmin_sdi_independent(SdiVariant::maximal, a, b), out);
  }
  if (p == "minsdi-independent") {
    return report(is_maxmin_sdi_independent(SdiVariant::minimal, a, b), out);
  }
  if (p == "closed-sdi") return report(is_closed_under_sdi(a, opt.cap), out);
  if (p == "closed-finite") {
    if (!words) throw UsageError("closed-finite needs --words");
    return report(closed_under_finite_maxmin(oracle::parse_variant(opt.variant), a, *words, opt.cap),
                  out);
  }
  if (p == "two-var-solvable") return report(two_var_solvable(a), out);
  if (p == "counterexample") {
    if (!opt.max_len) throw UsageError("counterexample needs --max-len");
    const auto found = closure_counterexample_search(oracle::parse_variant(opt.variant), a, *opt.max_len);
    if (found) {
      out << "counterexample: " << io::format_word(*found) << '\n';
      return kFalse;
    }
    out << "counterexample: none up to length " << *opt.max_len << " (not a closure proof)\n";
    return kTrue;
  }
  throw UsageError("unknown predicate '" + p + "'");
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.automata.size() != 2) throw UsageError("solve takes L.nfa and R.nfa");
  Nfa known = io::load_automaton(opt.automata[0]);
  Nfa rhs = io::load_automaton(opt.automata[1]);
  const Alphabet sigma = known.alphabet().united(rhs.alphabet());
  EquationSpec spec{parse_side(opt.side), oracle::parse_variant(opt.variant),
                    with_alphabet(known, sigma), with_alphabet(rhs, sigma)};
  try {
    const auto solution = solve(spec, opt.cap);
    if (!solution.solvable) {
      out << "unsolvable\n";
      return kFalse;
    }
    if (opt.output.empty()) {
      out << "solvable\n";
      out << io::serialize_automaton(solution.candidate.nfa());
    } else {
      io::write_file(opt.output, io::serialize_automaton(solution.candidate.nfa()));
      out << "solvable\n";
    }
    return kTrue;
  } catch (const SolveResourceError& e) {
    if (!opt.output.empty()) {
      io::write_file(opt.output, io::serialize_automaton(e.candidate().nfa()));
    }
    err << "verification hit the state cap; candidate "
        << (opt.output.empty() ? "not written" : "written to " + opt.output) << '\n';
    throw;
  }
}

int cmd_enum(const Options& opt, std::ostream& out) {
  if (opt.automata.size() != 1) throw UsageError("enum takes one automaton");
  if (!opt.max_len) throw UsageError("enum needs --max-len");
  emit_words(out, enumerate_language(io::load_automaton(opt.automata[0]), *opt.max_len));
  return kTrue;
}

int cmd_audit(const Options& opt, std::ostream& out) {
  AuditedConstruction c;
  if (opt.construction == "sdi") {
    c = AuditedConstruction::sdi;
  } else if (opt.construction == "asdi") {
    c = AuditedConstruction::asdi;
  } else {
    throw UsageError("construction must be sdi or asdi");
  }
  const auto records = size_audit(c, parse_range(opt.m_range), parse_range(opt.n_range),
                                  opt.samples, opt.seed);
  bool ok = true;
  for (const auto& r : records) {
    out << r.construction << ' ' << r.m << ' ' << r.n << ' ' << r.bound << ' ' << r.actual << '\n';
    ok = ok && r.actual <= r.bound;
  }
  return ok ? kTrue : kFalse;
}

int cmd_fooling(const Options& opt, std::ostream& out) {
  if (opt.automata.size() != 1) throw UsageError("fooling takes one automaton");
  const Nfa a = io::load_automaton(opt.automata[0]);
  if (!opt.check_file.empty()) {
    const auto set = load_fooling_set(opt.check_file);
    const auto result = fooling_set_check(a, set);
    if (result.bound) {
      out << "bound " << *result.bound << '\n';
      return kTrue;
    }
    out << "violation " << result.violation->first << ' ' << result.violation->second << '\n';
    return kFalse;
  }
  if (!opt.max_len) throw UsageError("fooling search needs --max-len");
  const auto found = fooling_set_search(a, opt.target, *opt.max_len, opt.seed);
  if (!found) {
    out << "not found\n";
    return kFalse;
  }
  for (const auto& [x, w] : found->pairs) {
    out << io::format_word(x) << ' ' << io::format_word(w) << '\n';
  }
  return kTrue;
}

int cmd_check_format(const Options& opt, std::ostream& out) {
  if (opt.automata.size() != 1) throw UsageError("check-format takes one file");
  const std::string text = io::read_file(opt.automata[0]);
  if (opt.words_file) {
    out << "ok: " << io::parse_words(text).size() << " words\n";
    return kTrue;
  }
  const Nfa a = io::parse_automaton(text);
  if (opt.canonical) {
    out << io::serialize_automaton(a);
  } else {
    out << "ok: " << a.state_count() << " states, " << a.transition_count() << " transitions, "
        << (a.is_deterministic() ? "deterministic" : "nondeterministic") << '\n';
  }
  if (opt.require_dfa && !a.is_deterministic()) {
    for (const auto& t : a.transitions()) {
      if (a.successors(t.from, *a.alphabet().index_of(t.symbol)).size() > 1) {
        out << "nondeterministic at state " << t.from << " on '" << t.symbol << "'\n";
        break;
      }
    }
    return kFalse;
  }
  return kTrue;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Site-directed insertion toolkit", "sdikit"};
  app.require_subcommand(1);
  Options opt;

  auto* op = app.add_subcommand("op", "Build or enumerate L1 (variant) L2");
  op->add_option("--variant", opt.variant, "sdi | asdi | maxsdi | minsdi")->required();
  op->add_option("automata", opt.automata, "Automaton operands, left to right");
  op->add_option("--left-words", opt.left_words, "Word-list file as the left operand");
  op->add_option("--words,--right-words", opt.right_words, "Word-list file as the right operand");
  op->add_option("--max-len", opt.max_len, "List result words up to this length");
  op->add_flag("--list", opt.list, "List all words of a finite result");
  op->add_option("-o,--output", opt.output, "Write the result automaton here");

  auto* member = app.add_subcommand("member", "Membership of a word");
  member->add_option("word", opt.word, "Word (ε for the empty word)")->required();
  member->add_option("automata", opt.automata, "A.nfa [B.nfa]")->required();
  member->add_option("--words", opt.right_words, "Word-list file as the inserted operand");
  member->add_option("--variant", opt.variant, "sdi | asdi | maxsdi | minsdi");

  auto* decide = app.add_subcommand("decide", "Decide a property");
  decide->add_option("predicate", opt.predicate,
                     "sdi-free | sdi-independent | asdi-free | asdi-independent | "
                     "maxsdi-free | minsdi-free | maxsdi-independent | minsdi-independent | "
                     "closed-sdi | closed-finite | two-var-solvable | counterexample")
      ->required();
  decide->add_option("automata", opt.automata, "A.nfa [B.nfa]")->required();
  decide->add_option("--words", opt.right_words, "Finite language for closed-finite");
  decide->add_option("--variant", opt.variant, "Variant for closed-finite / counterexample");
  decide->add_option("--max-len", opt.max_len, "Search bound for counterexample");
  decide->add_option("--cap", opt.cap, "Determinization state cap");

  auto* solve_cmd = app.add_subcommand("solve", "Solve X (op) L = R or L (op) X = R");
  solve_cmd->add_option("--side", opt.side, "left: X op L = R; right: L op X = R");
  solve_cmd->add_option("--variant", opt.variant, "sdi | asdi");
  solve_cmd->add_option("automata", opt.automata, "L.nfa R.nfa")->required();
  solve_cmd->add_option("-o,--output", opt.output, "Write the candidate automaton here");
  solve_cmd->add_option("--cap", opt.cap, "Determinization state cap");

  auto* enumerate = app.add_subcommand("enum", "List accepted words");
  enumerate->add_option("automata", opt.automata, "A.nfa")->required();
  enumerate->add_option("--max-len", opt.max_len, "Length bound")->required();

  auto* audit = app.add_subcommand("audit", "Construction size audit");
  audit->add_option("--construction", opt.construction, "sdi | asdi");
  audit->add_option("--m", opt.m_range, "N or N..M");
  audit->add_option("--n", opt.n_range, "N or N..M");
  audit->add_option("--samples", opt.samples, "Random pairs per (m, n)");
  audit->add_option("--seed", opt.seed, "RNG seed");

  auto* fooling = app.add_subcommand("fooling", "Check or search fooling sets");
  fooling->add_option("automata", opt.automata, "A.nfa")->required();
  fooling->add_option("--check", opt.check_file, "Pair file to verify");
  fooling->add_option("--target", opt.target, "Desired fooling set size");
  fooling->add_option("--max-len", opt.max_len, "Word length bound for the search");
  fooling->add_option("--seed", opt.seed, "RNG seed");

  auto* check = app.add_subcommand("check-format", "Validate an automaton or word-list file");
  check->add_option("automata", opt.automata, "FILE")->required();
  check->add_flag("--dfa", opt.require_dfa, "Fail on nondeterminism");
  check->add_flag("--canonical", opt.canonical, "Print the canonical serialization");
  check->add_flag("--words", opt.words_file, "Treat FILE as a word list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    if (*op) return cmd_op(opt, out);
    if (*member) return cmd_member(opt, out);
    if (*decide) return cmd_decide(opt, out);
    if (*solve_cmd) return cmd_solve(opt, out, err);
    if (*enumerate) return cmd_enum(opt, out);
    if (*audit) return cmd_audit(opt, out);
    if (*fooling) return cmd_fooling(opt, out);
    if (*check) return cmd_check_format(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

}  // namespace sdikit::cli
