#pragma once

#include "npa/automata.hpp"
#include "npa/rational.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace npa {

/// The two ways of collapsing a convex set of expected weights to a single
/// weight consistently with expectation.
enum class Algebra { Min, Max };

std::string_view to_string(Algebra alg);

/// A state of the determinized automaton: a convex set of distributions
/// over the NPA's states.
struct Configuration {
  GeneratorSet set;
};

/// The point distribution at the initial state.
Configuration initial_config(const Npa& a);

/// One determinized transition. For every generator g of cfg and every
/// choice function h picking a generator h(s) of the s-transition for each
/// s in supp(g), emits Sum_s g(s) * h(s); the result is pruned.
Configuration step(const Npa& a, const Configuration& cfg, SymbolId sym);
Configuration step(const Npa& a, const Configuration& cfg, std::string_view sym);

/// Extremum over generators of the expected output. Expectation is affine,
/// so this is the extremum over the whole hull.
Rat output(const Npa& a, const Configuration& cfg, Algebra alg);

Rat evaluate(const Npa& a, std::span<const SymbolId> word, Algebra alg);
Rat evaluate(const Npa& a, const Word& word, Algebra alg);

Rat evaluate_wfa(const Wfa& w, std::span<const SymbolId> word);
Rat evaluate_wfa(const Wfa& w, const Word& word);

/// Default number of leaves the exhaustive oracle may visit.
inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

/// Reference evaluator: enumerates every sequence of per-state generator
/// choices along the word with no pruning and no shared geometry code, and
/// takes the extremum of the expected output over all resulting
/// distributions. Throws CapExceeded past `cap` leaves.
Rat oracle_evaluate(const Npa& a, const Word& word, Algebra alg, std::size_t cap = kDefaultOracleCap);
Rat oracle_evaluate(const Npa& a, std::span<const SymbolId> word, Algebra alg,
                    std::size_t cap = kDefaultOracleCap);

}  // namespace npa
