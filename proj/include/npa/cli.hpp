#pragma once

#include "npa/automata.hpp"
#include "npa/semantics.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace npa::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInvalid = 2,
  kCapExceeded = 3,
};

/// Splits a quoted word argument on whitespace: "a a b" -> {a, a, b}.
Word split_word(const std::string& text);
/// Renders a word as a double-quoted, space-separated symbol list.
std::string quote_word(const Alphabet& alphabet, std::span<const SymbolId> word);

using WordEvaluator = std::function<Rat(const Npa&, std::span<const SymbolId>, Algebra)>;

struct OracleMismatch {
  std::vector<SymbolId> word;
  Algebra algebra;
  Rat evaluated;
  Rat expected;
};

struct OracleVerdict {
  std::size_t words_checked = 0;
  std::optional<OracleMismatch> mismatch;

  bool ok() const noexcept { return !mismatch; }
};

/// Compares `evaluator` against the exhaustive oracle on every word of length
/// <= max_length, under both algebras, stopping at the first disagreement.
/// The evaluator defaults to the pruned determinized evaluation.
OracleVerdict oracle_check(const Npa& a, std::size_t max_length, const WordEvaluator& evaluator = {},
                           std::size_t cap = kDefaultOracleCap);

/// Runs the command line `args` (args[0] is the program name). Writes results
/// to out and diagnostics to err and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace npa::cli
