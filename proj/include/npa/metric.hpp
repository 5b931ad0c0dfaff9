#pragma once

#include "npa/automata.hpp"
#include "npa/rational.hpp"
#include "npa/semantics.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace npa {

/// Incremental reader of one weighted language: the weight of the word read
/// so far, and the reader obtained by appending one more symbol.
class LanguageCursor {
 public:
  virtual ~LanguageCursor() = default;
  virtual Rat weight() const = 0;
  virtual std::unique_ptr<LanguageCursor> advance(SymbolId symbol) const = 0;
};

/// A weighted language A* -> [0,1] over a fixed alphabet.
///
/// Handles built from automata carry their determinized configuration in
/// the cursor, so enumerating words along a prefix tree costs one step per
/// tree node rather than one evaluation per word.
class LanguageHandle {
 public:
  using Start = std::function<std::unique_ptr<LanguageCursor>()>;
  using Closure = std::function<Rat(std::span<const SymbolId>)>;

  LanguageHandle(Alphabet alphabet, Start start) : alphabet_(std::move(alphabet)), start_(std::move(start)) {}

  /// Language of an NPA under one algebra. The NPA is copied into the handle.
  static LanguageHandle from_npa(Npa a, Algebra alg);
  /// Any word -> weight function; evaluated from scratch for every word.
  static LanguageHandle from_closure(Alphabet alphabet, Closure weight);
  static LanguageHandle constant(Alphabet alphabet, Rat value);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::unique_ptr<LanguageCursor> start() const { return start_(); }
  Rat weight(std::span<const SymbolId> word) const;

 private:
  Alphabet alphabet_;
  Start start_;
};

/// Discount c in [0,1) and precision kappa > 0.
struct MetricQuery {
  Rat c;
  Rat kappa;

  /// Throws std::invalid_argument when out of range.
  void validate() const;
};

/// Least n with c^n <= (1 - c) * kappa, found by exact repeated
/// multiplication; the tail Sum_{i >= n} c^i = c^n / (1 - c) is then at most
/// kappa. For c = 0 only the empty word carries weight and the horizon is 1.
std::size_t word_horizon(const MetricQuery& q);

/// c^n / (1 - c): the most the words of length >= n can contribute.
Rat tail_bound(const MetricQuery& q, std::size_t horizon);

struct WordContribution {
  std::vector<SymbolId> word;
  Rat weight1;
  Rat weight2;
  Rat difference;    ///< |weight1 - weight2|
  Rat contribution;  ///< difference * (c/|A|)^|word|
};

struct MetricReport {
  std::size_t horizon = 0;
  Rat value;       ///< Sum of contributions; within kappa of the true distance
  Rat tail_bound;
  /// Every word shorter than the horizon, sorted by contribution descending,
  /// ties in length-then-lexicographic order.
  std::vector<WordContribution> contributions;
};

/// Full breakdown of the truncated discounted distance. Throws
/// AlphabetMismatch unless both languages share the same alphabet (in order).
MetricReport metric_report(const LanguageHandle& l1, const LanguageHandle& l2, const MetricQuery& q);

/// Sum over |u| < horizon of |l1(u) - l2(u)| * (c/|A|)^|u|, which is within
/// kappa of (and never above) the discounted distance.
Rat approx_metric(const LanguageHandle& l1, const LanguageHandle& l2, const MetricQuery& q);

/// Per-word contributions, sorted descending; they sum to approx_metric.
std::vector<WordContribution> difference_report(const LanguageHandle& l1, const LanguageHandle& l2,
                                                const MetricQuery& q);

}  // namespace npa
