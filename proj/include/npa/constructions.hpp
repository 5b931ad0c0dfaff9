#pragma once

#include "npa/automata.hpp"
#include "npa/lrs.hpp"
#include "npa/rational.hpp"

#include <utility>

namespace npa {

/// The four-state running example over {a, b}. Under the min algebra it
/// assigns 2^-n to a word whose longest run of a's has length n; under the
/// max algebra it assigns 1 to every word.
Npa example_npa();

/// 2^-n where n is the longest run of "a" in a word over {a, b}.
/// Throws UnknownSymbol on any other symbol.
Rat longest_run_reference(const Word& word);

/// Complements every output weight. The max language of the result is one
/// minus the min language of the input, and vice versa.
Npa dualize(const Npa& a);

struct ThresholdPair {
  Npa y;
  Npa z;
};

/// Builds the pair (Y, Z) whose equivalence encodes a threshold question on
/// the DPA x. Z is one kappa-output state looping on every symbol. Y has a
/// fresh kappa-output initial state which, on every symbol, may move either
/// to a kappa-output sink or to the initial state of an embedded copy of x.
/// Hence Y(av) = alg(kappa, x(v)) and Y(eps) = Z(u) = kappa.
ThresholdPair threshold_reduction(const Dpa& x, const Rat& kappa);

/// x_n = Re((re + im*i)^n) as an order-2 recurrence:
/// x_{n+2} = 2 re x_{n+1} - (re^2 + im^2) x_n, x_0 = 1, x_1 = re.
/// Requires re^2 + im^2 = 1 and re, im nonzero.
Lrs real_part_lrs(const Rat& re, const Rat& im);

}  // namespace npa
