#pragma once

#include "npa/matrix.hpp"
#include "npa/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace npa {

/// Dense internal index of a state; external names live in the automaton.
using StateId = std::size_t;
/// Dense internal index of an alphabet symbol.
using SymbolId = std::size_t;

/// A word given as symbol names. Symbols are whole tokens, not characters.
using Word = std::vector<std::string>;

/// Finite-support probability distribution over states 0..n-1.
///
/// Stored densely; zero entries are outside the support. The invariants
/// (nonnegative, sums to exactly 1) are checked by is_distribution and by
/// the automaton validators rather than on construction, so malformed
/// values read from a file can still be reported precisely.
struct Distribution {
  std::vector<Rat> weights;

  /// The unit of the distribution monad: all mass on one state.
  static Distribution point(std::size_t state_count, StateId state);

  std::size_t size() const noexcept { return weights.size(); }
  const Rat& operator[](StateId s) const { return weights[s]; }

  std::vector<StateId> support() const;
  /// Expected value of a state-indexed weight vector.
  Rat expectation(const std::vector<Rat>& values) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Why a weight vector fails to be a distribution, or nullopt if it is one.
std::optional<std::string> distribution_defect(const Distribution& d);
inline bool is_distribution(const Distribution& d) { return !distribution_defect(d); }

/// A finitely generated nonempty convex set of distributions, represented by
/// a list of generators whose convex hull is the set.
struct GeneratorSet {
  std::vector<Distribution> generators;

  std::size_t size() const noexcept { return generators.size(); }
  bool empty() const noexcept { return generators.empty(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

using Alphabet = std::vector<std::string>;

std::optional<SymbolId> find_symbol(const Alphabet& alphabet, std::string_view name);
/// Maps a word to symbol indices, throwing UnknownSymbol on the first miss.
std::vector<SymbolId> encode_word(const Alphabet& alphabet, const Word& word);

/// Nondeterministic probabilistic automaton: each (state, symbol) leads to a
/// convex set of distributions over states, each state carries an output
/// weight in [0,1].
struct Npa {
  std::vector<std::string> states;
  Alphabet alphabet;
  StateId initial = 0;
  std::vector<Rat> output;
  std::map<std::pair<StateId, SymbolId>, GeneratorSet> transitions;

  std::size_t state_count() const noexcept { return states.size(); }
  /// The choice set for (s, a); throws ValidationError when absent.
  const GeneratorSet& choices(StateId s, SymbolId a) const;

  friend bool operator==(const Npa&, const Npa&) = default;
};

/// Deterministic probabilistic automaton: one distribution per (state, symbol).
struct Dpa {
  std::vector<std::string> states;
  Alphabet alphabet;
  StateId initial = 0;
  std::vector<Rat> output;
  std::map<std::pair<StateId, SymbolId>, Distribution> transitions;

  std::size_t state_count() const noexcept { return states.size(); }
  const Distribution& next(StateId s, SymbolId a) const;

  friend bool operator==(const Dpa&, const Dpa&) = default;
};

/// Weighted finite automaton: weight(w) = initial · M_{w1} ⋯ M_{wk} · final.
struct Wfa {
  std::vector<std::string> states;
  Alphabet alphabet;
  Vector initial;
  Vector final;
  /// One square matrix per symbol, indexed by SymbolId.
  std::vector<Matrix> matrices;

  std::size_t state_count() const noexcept { return states.size(); }

  friend bool operator==(const Wfa&, const Wfa&) = default;
};

/// Returns normally iff every Npa invariant holds; otherwise throws
/// ValidationError describing the first violation found.
void validate_npa(const Npa& a);
void validate_dpa(const Dpa& d);
void validate_wfa(const Wfa& w);

/// Embeds each transition distribution as a singleton generator set.
Npa dpa_as_npa(const Dpa& d);

/// Initial vector is the point mass at the initial state; matrices are the
/// row-stochastic transition matrices; final vector is the output.
Wfa dpa_as_wfa(const Dpa& d);

}  // namespace npa
