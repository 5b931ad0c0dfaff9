#include "npa/cli.hpp"

#include "npa/constructions.hpp"
#include "npa/errors.hpp"
#include "npa/format.hpp"
#include "npa/lrs.hpp"
#include "npa/metric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace npa::cli {

Word split_word(const std::string& text) {
  std::istringstream in(text);
  Word word;
  for (std::string sym; in >> sym;) word.push_back(sym);
  return word;
}

std::string quote_word(const Alphabet& alphabet, std::span<const SymbolId> word) {
  std::string out = "\"";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.at(word[i]);
  }
  return out + "\"";
}

OracleVerdict oracle_check(const Npa& a, std::size_t max_length, const WordEvaluator& evaluator,
                           std::size_t cap) {
  validate_npa(a);
  const WordEvaluator eval = evaluator ? evaluator : WordEvaluator([](const Npa& n, std::span<const SymbolId> w,
                                                                       Algebra alg) { return evaluate(n, w, alg); });
  OracleVerdict verdict;
  std::vector<std::vector<SymbolId>> level{{}};
  for (std::size_t length = 0; length <= max_length; ++length) {
    for (const auto& word : level) {
      for (Algebra alg : {Algebra::Min, Algebra::Max}) {
        Rat got = eval(a, word, alg);
        Rat want = oracle_evaluate(a, word, alg, cap);
        if (got != want) {
          verdict.mismatch = OracleMismatch{word, alg, std::move(got), std::move(want)};
          return verdict;
        }
      }
      ++verdict.words_checked;
    }
    std::vector<std::vector<SymbolId>> next;
    for (const auto& word : level)
      for (SymbolId s = 0; s < a.alphabet.size(); ++s) {
        next.push_back(word);
        next.back().push_back(s);
      }
    level = std::move(next);
  }
  return verdict;
}

namespace {

Rat rat_option(const std::string& text, const char* what) {
  try {
    return parse_rat(text);
  } catch (const ParseError&) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + text + "'");
  }
}

Algebra algebra_option(const std::string& text) {
  if (text == "min") return Algebra::Min;
  if (text == "max") return Algebra::Max;
  throw std::invalid_argument("algebra must be 'min' or 'max', got '" + text + "'");
}

std::string render(const Rat& value, int decimal) {
  auto text = to_string(value);
  if (decimal >= 0) text += " ~ " + to_decimal(value, static_cast<unsigned>(decimal));
  return text;
}

Dpa read_dpa(const std::string& path) {
  auto a = read_automaton_file(path);
  if (auto* d = std::get_if<Dpa>(&a)) return std::move(*d);
  throw ValidationError("'" + path + "' is a " + std::string(kind_name(a)) + ", expected a dpa");
}

struct Options {
  std::string file, file2, word, which, from, lrs_text;
  bool min = false, max = false;
  std::string alg1, alg2;
  std::string c, kappa;
  int decimal = -1;
  std::size_t top = 10;
  std::size_t length = 4;
  std::size_t cap = kDefaultOracleCap;
  std::size_t index = 0;
  std::size_t bound = 50;
  std::string re, im;

  Algebra algebra() const { return min ? Algebra::Min : Algebra::Max; }
};

void add_algebra_flags(CLI::App* cmd, Options& o) {
  auto* mn = cmd->add_flag("--min", o.min, "Use the min algebra");
  auto* mx = cmd->add_flag("--max", o.max, "Use the max algebra (default)");
  mn->excludes(mx);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto a = read_automaton_file(o.file);
  std::visit(
      [&](const auto& x) {
        out << "ok: " << kind_name(a) << " with " << x.state_count() << " states over " << x.alphabet.size()
            << " symbols\n";
      },
      a);
  return kSuccess;
}

int cmd_format(const Options& o, std::ostream& out) {
  out << format_automaton(read_automaton_file(o.file));
  return kSuccess;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto a = read_automaton_file(o.file);
  const auto word = split_word(o.word);
  const Rat value = std::holds_alternative<Wfa>(a) ? evaluate_wfa(std::get<Wfa>(a), word)
                                                    : evaluate(as_npa(a), word, o.algebra());
  out << render(value, o.decimal) << "\n";
  return kSuccess;
}

int cmd_metric(const Options& o, std::ostream& out) {
  const MetricQuery q{rat_option(o.c, "--c"), rat_option(o.kappa, "--kappa")};
  q.validate();
  const Algebra alg1 = o.alg1.empty() ? o.algebra() : algebra_option(o.alg1);
  const Algebra alg2 = o.alg2.empty() ? o.algebra() : algebra_option(o.alg2);
  const auto l1 = LanguageHandle::from_npa(as_npa(read_automaton_file(o.file)), alg1);
  const auto l2 = LanguageHandle::from_npa(as_npa(read_automaton_file(o.file2)), alg2);

  const auto report = metric_report(l1, l2, q);
  out << "x = " << render(report.value, o.decimal) << "\n";
  out << "horizon = " << report.horizon << "\n";
  out << "tail_bound = " << render(report.tail_bound, o.decimal) << "\n";
  out << "# word weight1 weight2 |diff| contribution\n";
  const auto shown = std::min(o.top, report.contributions.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& wc = report.contributions[i];
    out << quote_word(l1.alphabet(), wc.word) << " " << to_string(wc.weight1) << " " << to_string(wc.weight2)
        << " " << to_string(wc.difference) << " " << to_string(wc.contribution) << "\n";
  }
  return kSuccess;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.which == "example") {
    out << format_npa(example_npa());
  } else if (o.which == "dual") {
    if (o.from.empty()) throw std::invalid_argument("generate dual needs --from FILE");
    out << format_npa(dualize(as_npa(read_automaton_file(o.from))));
  } else if (o.which == "threshold-Y" || o.which == "threshold-Z") {
    if (o.from.empty() || o.kappa.empty())
      throw std::invalid_argument("generate " + o.which + " needs --from DPA_FILE and --kappa");
    const Rat kappa = rat_option(o.kappa, "--kappa");
    if (!in_unit_interval(kappa)) throw std::invalid_argument("--kappa must lie in [0,1]");
    const auto pair = threshold_reduction(read_dpa(o.from), kappa);
    out << format_npa(o.which == "threshold-Y" ? pair.y : pair.z);
  } else {
    throw std::invalid_argument("unknown construction '" + o.which +
                                "' (expected example, dual, threshold-Y or threshold-Z)");
  }
  return kSuccess;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const auto a = as_npa(read_automaton_file(o.file));
  const auto verdict = oracle_check(a, o.length, {}, o.cap);
  if (verdict.ok()) {
    out << "OK (" << verdict.words_checked << " words, both algebras)\n";
    return kSuccess;
  }
  const auto& m = *verdict.mismatch;
  out << "MISMATCH word=" << quote_word(a.alphabet, m.word) << " algebra=" << to_string(m.algebra)
      << " evaluate=" << to_string(m.evaluated) << " oracle=" << to_string(m.expected) << "\n";
  return kInvalid;
}

int cmd_lrs_eval(const Options& o, std::ostream& out) {
  out << render(lrs_eval(parse_lrs(o.lrs_text), o.index), o.decimal) << "\n";
  return kSuccess;
}

int cmd_lrs_from_wfa(const Options& o, std::ostream& out) {
  const auto a = read_automaton_file(o.file);
  if (const auto* d = std::get_if<Dpa>(&a)) {
    out << format_lrs(wfa_to_lrs(dpa_as_wfa(*d))) << "\n";
  } else if (const auto* w = std::get_if<Wfa>(&a)) {
    out << format_lrs(wfa_to_lrs(*w)) << "\n";
  } else {
    throw ValidationError("lrs from-wfa needs a wfa or dpa file");
  }
  return kSuccess;
}

int cmd_lrs_zeros(const Options& o, std::ostream& out) {
  const auto zeros = zero_set_prefix(parse_lrs(o.lrs_text), o.bound);
  out << "zeros up to " << o.bound << ":";
  for (auto n : zeros) out << " " << n;
  out << "\n";
  return kSuccess;
}

int cmd_lrs_real_part(const Options& o, std::ostream& out) {
  out << format_lrs(real_part_lrs(rat_option(o.re, "real part"), rat_option(o.im, "imaginary part"))) << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact semantics of nondeterministic probabilistic automata", "npa"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse and validate an automaton file");
  validate->add_option("file", o.file, "Automaton file")->required();

  auto* format = app.add_subcommand("format", "Print an automaton file in canonical form");
  format->add_option("file", o.file, "Automaton file")->required();

  auto* eval = app.add_subcommand("eval", "Weight of one word");
  eval->add_option("file", o.file, "Automaton file")->required();
  eval->add_option("word", o.word, "Space-separated symbols, quoted as one argument (default: empty word)");
  add_algebra_flags(eval, o);
  eval->add_option("--decimal", o.decimal, "Also print a decimal rendering with N digits");

  auto* metric = app.add_subcommand("metric", "Approximate the discounted distance between two languages");
  metric->add_option("file1", o.file, "First automaton")->required();
  metric->add_option("file2", o.file2, "Second automaton")->required();
  metric->add_option("--c", o.c, "Discount in [0,1)")->required();
  metric->add_option("--kappa", o.kappa, "Precision > 0")->required();
  add_algebra_flags(metric, o);
  metric->add_option("--alg1", o.alg1, "Algebra for the first automaton (min|max)");
  metric->add_option("--alg2", o.alg2, "Algebra for the second automaton (min|max)");
  metric->add_option("--top", o.top, "Number of report lines")->capture_default_str();
  metric->add_option("--decimal", o.decimal, "Also print decimal renderings with N digits");

  auto* generate = app.add_subcommand("generate", "Emit a construction as an automaton file");
  generate->add_option("which", o.which, "example | dual | threshold-Y | threshold-Z")->required();
  generate->add_option("--from", o.from, "Input automaton (dual: npa/dpa, threshold: dpa)");
  generate->add_option("--kappa", o.kappa, "Threshold in [0,1]");

  auto* oracle = app.add_subcommand("oracle-check", "Compare evaluation with the exhaustive oracle");
  oracle->add_option("file", o.file, "Automaton file")->required();
  oracle->add_option("--length", o.length, "Maximum word length")->capture_default_str();
  oracle->add_option("--cap", o.cap, "Oracle enumeration cap")->capture_default_str();

  auto* lrs = app.add_subcommand("lrs", "Linear recurrence sequences");
  lrs->require_subcommand(1);
  auto* lrs_eval_cmd = lrs->add_subcommand("eval", "n-th term");
  lrs_eval_cmd->add_option("lrs", o.lrs_text, "e.g. \"lrs k=2 init=0,1 coeffs=1,1\"")->required();
  lrs_eval_cmd->add_option("n", o.index, "Index")->required();
  lrs_eval_cmd->add_option("--decimal", o.decimal, "Also print a decimal rendering with N digits");
  auto* lrs_from = lrs->add_subcommand("from-wfa", "Recurrence of a one-letter WFA (or DPA)");
  lrs_from->add_option("file", o.file, "Automaton file")->required();
  auto* lrs_zeros = lrs->add_subcommand("zeros", "Zero terms up to a bound");
  lrs_zeros->add_option("lrs", o.lrs_text, "LRS text")->required();
  lrs_zeros->add_option("--bound", o.bound, "Largest index scanned")->capture_default_str();
  auto* lrs_real = lrs->add_subcommand("real-part", "Re((re + im i)^n) for a unit-modulus point");
  lrs_real->add_option("re", o.re, "Real part")->required();
  lrs_real->add_option("im", o.im, "Imaginary part")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (format->parsed()) return cmd_format(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (metric->parsed()) return cmd_metric(o, out);
    if (generate->parsed()) return cmd_generate(o, out);
    if (oracle->parsed()) return cmd_oracle_check(o, out);
    if (lrs_eval_cmd->parsed()) return cmd_lrs_eval(o, out);
    if (lrs_from->parsed()) return cmd_lrs_from_wfa(o, out);
    if (lrs_zeros->parsed()) return cmd_lrs_zeros(o, out);
    if (lrs_real->parsed()) return cmd_lrs_real_part(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace npa::cli
