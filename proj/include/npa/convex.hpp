#pragma once

#include "npa/automata.hpp"
#include "npa/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace npa {

/// Coefficients of a finite convex combination: nonnegative, summing to 1.
struct ConvexCombination {
  std::vector<Rat> coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  bool valid() const;
};

/// Sum_i coeffs[i] * points[i]. Satisfies the projection and barycenter laws
/// of a convex algebra exactly. Throws std::invalid_argument on a length
/// mismatch, invalid coefficients, or points over different state spaces.
Distribution mix(const ConvexCombination& coeffs, std::span<const Distribution> points);

/// Pointwise lift of mix to convex sets: the Minkowski combination
/// {Sum_i p_i u_i | u_i in Conv(sets[i])}, returned as the (unpruned) list of
/// all combinations of generators.
GeneratorSet mix_sets(const ConvexCombination& coeffs, std::span<const GeneratorSet> sets);

/// Coefficients c with mix(c, generators) == d, if d lies in their hull.
///
/// Decided by phase-one simplex over the rationals (one equality row per
/// state plus the simplex row), pivoting with Bland's rule.
std::optional<ConvexCombination> hull_coefficients(const Distribution& d,
                                                   std::span<const Distribution> generators);

/// True iff d lies in the convex hull of gs. gs must be nonempty.
bool is_redundant(const Distribution& d, std::span<const Distribution> gs);

/// Drops redundant generators, scanning in list order: a generator is removed
/// iff it lies in the hull of the generators kept so far plus those not yet
/// scanned. The survivors are irredundant and span the same hull.
GeneratorSet prune(const GeneratorSet& g);

/// Set equality of the two hulls.
bool hulls_equal(const GeneratorSet& lhs, const GeneratorSet& rhs);

}  // namespace npa
